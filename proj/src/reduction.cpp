#include "dompoly/reduction.hpp"

#include <memory>
#include <set>

#include "json.hpp"

#include "dompoly/oracle.hpp"

namespace dompoly {

namespace {

void check_gamma(const Rational& gamma) {
    if (gamma == 0 || gamma == -1 || gamma == -2)
        throw RejectedGammaError(
            "gamma = " + rational_to_string(gamma) +
            " is not admissible: the abscissae (1+gamma)^r - 1 are pairwise distinct only "
            "because gamma != 0, -1, -2");
}

}  // namespace

std::vector<Rational> abscissae(const Rational& gamma, int count) {
    check_gamma(gamma);
    if (count < 1) throw InvalidParameterError("abscissae: count must be >= 1");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    Rational power = 1;
    const Rational base = gamma + 1;
    for (int r = 1; r <= count; ++r) {
        power *= base;
        out.push_back(power - 1);
    }
    std::set<Rational> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
        throw InvalidParameterError("abscissae unexpectedly collided");  // cannot happen
    return out;
}

ReductionTrace interpolation_reduction(const Graph& g, const EvaluationOracle& oracle) {
    check_gamma(oracle.gamma);
    const int n = g.vertex_count();
    const int count = n + 1;
    const auto xs = abscissae(oracle.gamma, count);
    ReductionTrace trace;
    trace.gamma = oracle.gamma;
    std::vector<std::pair<Rational, Rational>> points;
    for (int r = 1; r <= count; ++r) {
        const Rational value = oracle.eval_product(g, r);
        trace.queries.push_back({r, xs[static_cast<std::size_t>(r - 1)], value});
        points.emplace_back(xs[static_cast<std::size_t>(r - 1)], value);
    }
    const RatPoly interpolated = lagrange_interpolate(points);
    if (!interpolated.is_integral())
        throw OracleInconsistencyError(
            "interpolation produced non-integral coefficients; the evaluation oracle is "
            "inconsistent with a domination polynomial");
    trace.result = interpolated.to_int_poly();
    return trace;
}

std::string ReductionTrace::to_json() const {
    nlohmann::json j;
    j["gamma"] = rational_to_string(gamma);
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& q : queries)
        qs.push_back({{"r", q.r},
                      {"abscissa", rational_to_string(q.abscissa)},
                      {"value", rational_to_string(q.value)}});
    j["queries"] = qs;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : result.coefficients()) coeffs.push_back(c.str());
    j["coefficients"] = coeffs;
    return j.dump();
}

EvaluationOracle brute_product_oracle(const Rational& gamma, int cap) {
    check_gamma(gamma);
    EvaluationOracle o;
    o.gamma = gamma;
    o.eval_product = [gamma, cap](const Graph& base, int r) {
        auto [product, map] = strong_product(base, complete_graph(r));
        BruteConfig cfg;
        cfg.cap = cap;
        return domination_polynomial(product, cfg).eval(gamma);
    };
    return o;
}

EvaluationOracle composed_oracle(const Rational& gamma, int cap) {
    check_gamma(gamma);
    EvaluationOracle o;
    o.gamma = gamma;
    // cache of brute-force base polynomials, keyed by graph value
    auto cache = std::make_shared<std::vector<std::pair<Graph, IntPoly>>>();
    o.eval_product = [gamma, cap, cache](const Graph& base, int r) {
        const IntPoly* d = nullptr;
        for (const auto& [g, p] : *cache)
            if (g == base) {
                d = &p;
                break;
            }
        if (!d) {
            BruteConfig cfg;
            cfg.cap = cap;
            cache->emplace_back(base, domination_polynomial(base, cfg));
            d = &cache->back().second;
        }
        Rational point = 1;
        const Rational b = gamma + 1;
        for (int i = 0; i < r; ++i) point *= b;
        return d->eval(point - 1);
    };
    return o;
}

}  // namespace dompoly
