#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dompoly/expr.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/sequences.hpp"

namespace dompoly {

enum class Method { Auto, Brute, Recurrence, Formula, Gk2, Pnkr, StrongCompose };

Method parse_method(const std::string& name);  // throws InvalidParameterError
std::string method_name(Method m);

struct ComputeConfig {
    int cap_brute = 26;
    int cap_gk2 = 12;
    bool parallel = true;
};

struct ComputeResult {
    IntPoly poly;
    std::string method_used;  // e.g. "recurrence:ladder", "brute"
};

/// Computes D(G,x) for the expression (instantiated at n when it is a family
/// member).  Auto picks the cheapest applicable engine: closed form, then
/// family recurrence, then the G x K_2 decomposition, then brute force under
/// cap.  Explicit methods throw InvalidParameterError when the expression
/// shape does not match.
ComputeResult compute(const Expr& expr, Method method, const ComputeConfig& cfg = {},
                      std::optional<long> n = std::nullopt);

/// D(G_n,x) for every n in the family range, via the selected method.
std::vector<IntPoly> family_polynomials(const FamilySpec& family, Method method,
                                        const ComputeConfig& cfg = {});

}  // namespace dompoly
