#pragma once

#include <functional>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

/// Black-box access to D(-, gamma) for a fixed admissible gamma.  A query
/// names the strong product G (x) K_r succinctly by its factors, so backends
/// may either materialize the product or answer through the composition
/// identity D(G (x) K_r, gamma) = D(G, (1+gamma)^r - 1).
struct EvaluationOracle {
    Rational gamma;
    std::function<Rational(const Graph& base, int r)> eval_product;
};

/// [(1+gamma)^r - 1 for r = 1..count]; gamma in {0,-1,-2} is rejected because
/// those values collapse the abscissae.
std::vector<Rational> abscissae(const Rational& gamma, int count);

struct ReductionQuery {
    int r;
    Rational abscissa;
    Rational value;
};

struct ReductionTrace {
    Rational gamma;
    std::vector<ReductionQuery> queries;
    IntPoly result;

    std::string to_json() const;
};

/// Recovers D(G,x) from exactly |V(G)|+1 oracle evaluations on the strong
/// products G (x) K_r, r = 1..|V(G)|+1, interpolating at the abscissae
/// (1+gamma)^r - 1.  Non-integral interpolation output raises
/// OracleInconsistencyError.
ReductionTrace interpolation_reduction(const Graph& g, const EvaluationOracle& oracle);

/// Backend that builds G (x) K_r and enumerates it; subject to the product
/// and brute-force capacities.
EvaluationOracle brute_product_oracle(const Rational& gamma, int cap = 26);

/// Backend that answers via the composition identity, enumerating only the
/// base graph (computed once and cached per oracle instance).
EvaluationOracle composed_oracle(const Rational& gamma, int cap = 26);

}  // namespace dompoly
