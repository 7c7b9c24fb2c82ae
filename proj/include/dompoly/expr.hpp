#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dompoly/graph.hpp"

namespace dompoly {

/// Size parameter of a family expression: a*n + b, where n is the free
/// variable.  Plain literals have a = 0.
struct Param {
    long a = 0;
    long b = 0;
    bool is_free() const { return a != 0; }
    long value(std::optional<long> n) const;
    std::string to_string() const;
};

/// Parsed graph expression.  Grammar:
///   E := P:p | C:p | K:p | KB:p,p | cart(E,E) | strong(E,E) | tensor(E,E)
///        | file(path)
/// where p is an integer literal, `n`, or an affine form like 3n+1.
struct Expr {
    enum class Kind { Path, Cycle, Complete, CompleteBipartite, Cart, Strong, Tensor, File };
    Kind kind;
    Param p1, p2;
    std::shared_ptr<const Expr> left, right;
    std::string path;

    bool has_free_var() const;
    /// Builds the graph; n must be supplied iff the expression uses it.
    Graph instantiate(std::optional<long> n = std::nullopt) const;
    std::string to_string() const;
};

Expr parse_expr(const std::string& text);

}  // namespace dompoly
