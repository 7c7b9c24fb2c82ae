#include "doctest.h"
#include "dompoly/engines.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/reduction.hpp"

using namespace dompoly;

TEST_CASE("abscissae") {
    CHECK(abscissae(1, 3) == std::vector<Rational>{1, 3, 7});
    CHECK(abscissae(-3, 3) == std::vector<Rational>{-3, 3, -9});
    CHECK(abscissae(Rational(1, 2), 2) == std::vector<Rational>{Rational(1, 2), Rational(5, 4)});
    CHECK_THROWS_AS(abscissae(0, 2), RejectedGammaError);
    CHECK_THROWS_AS(abscissae(-1, 2), RejectedGammaError);
    CHECK_THROWS_AS(abscissae(-2, 2), RejectedGammaError);
    // distinctness at large r for a fractional gamma
    auto many = abscissae(Rational(5, 3), 64);
    for (size_t i = 0; i < many.size(); ++i)
        for (size_t j = i + 1; j < many.size(); ++j) CHECK(many[i] != many[j]);
}

TEST_CASE("interpolation_reduction on K_2 with gamma = 1") {
    Graph k2 = complete_graph(2);
    ReductionTrace t = interpolation_reduction(k2, brute_product_oracle(1));
    CHECK(t.result == IntPoly{0, 2, 1});
    REQUIRE(t.queries.size() == 3);
    CHECK(t.queries[0].abscissa == 1);
    CHECK(t.queries[1].abscissa == 3);
    CHECK(t.queries[2].abscissa == 7);
    CHECK(t.queries[0].value == 3);
    CHECK(t.queries[1].value == 15);
    CHECK(t.queries[2].value == 63);
}

TEST_CASE("interpolation_reduction examples") {
    CHECK(interpolation_reduction(complete_graph(1), brute_product_oracle(2)).result ==
          IntPoly::x());
    CHECK(interpolation_reduction(path_graph(3), brute_product_oracle(Rational(1, 2))).result ==
          path_poly(3));
}

TEST_CASE("reduction matches brute force across gammas and backends") {
    const Rational gammas[] = {1, 2, Rational(1, 2), -3, Rational(5, 3)};
    for (const auto& gamma : gammas) {
        for (int n = 3; n <= 8; ++n) {
            Graph g = cycle_graph(n);
            IntPoly want = domination_polynomial(g);
            if (g.vertex_count() * (g.vertex_count() + 1) <= 26) {
                auto brute = interpolation_reduction(g, brute_product_oracle(gamma));
                CHECK(brute.result == want);
                CHECK(brute.queries.size() == static_cast<size_t>(g.vertex_count()) + 1);
            }
            auto composed = interpolation_reduction(g, composed_oracle(gamma));
            CHECK(composed.result == want);
            CHECK(composed.queries.size() == static_cast<size_t>(g.vertex_count()) + 1);
        }
        // composed backend handles sizes the brute product cannot
        Graph p9 = path_graph(9);
        auto t = interpolation_reduction(p9, composed_oracle(gamma));
        CHECK(t.result == path_poly(9));
        CHECK(t.queries.size() == 10);
    }
}

TEST_CASE("forbidden gammas rejected eagerly") {
    Graph k2 = complete_graph(2);
    CHECK_THROWS_AS(interpolation_reduction(k2, composed_oracle(0)), RejectedGammaError);
    CHECK_THROWS_AS(interpolation_reduction(k2, composed_oracle(-1)), RejectedGammaError);
    CHECK_THROWS_AS(interpolation_reduction(k2, composed_oracle(-2)), RejectedGammaError);
}

TEST_CASE("inconsistent oracle raises") {
    EvaluationOracle liar;
    liar.gamma = 1;
    liar.eval_product = [](const Graph&, int r) { return Rational(r) / 7; };
    CHECK_THROWS_AS(interpolation_reduction(complete_graph(2), liar),
                    OracleInconsistencyError);
}

TEST_CASE("trace JSON mentions the essentials") {
    auto t = interpolation_reduction(complete_graph(1), brute_product_oracle(2));
    std::string j = t.to_json();
    CHECK(j.find("gamma") != std::string::npos);
    CHECK(j.find("queries") != std::string::npos);
    CHECK(j.find("coefficients") != std::string::npos);
}
