#include "doctest.h"
#include "dompoly/engines.hpp"
#include "dompoly/oracle.hpp"

using namespace dompoly;

namespace {

const IntPoly kTableRow4{0, 0, 0, 12, 48, 52, 28, 8, 1};
const IntPoly kTableRow6{0, 0, 0, 0, 17, 168, 470, 604, 453, 216, 66, 12, 1};

}  // namespace

TEST_CASE("path_poly") {
    CHECK(path_poly(0) == IntPoly::one());
    CHECK(path_poly(1) == IntPoly::x());
    CHECK(path_poly(2) == IntPoly{0, 2, 1});
    CHECK(path_poly(3) == IntPoly{0, 1, 3, 1});
    for (int n = 0; n <= 12; ++n)
        CHECK(path_poly(n) == domination_polynomial(path_graph(n)));
    CHECK_THROWS_AS(path_poly(-1), InvalidParameterError);
}

TEST_CASE("cycle_poly") {
    CHECK(cycle_poly(3) == IntPoly::binomial_shift(3));
    CHECK(cycle_poly(4) == IntPoly{0, 0, 6, 4, 1});
    CHECK(cycle_poly(5) == IntPoly{0, 0, 5, 10, 5, 1});
    for (int n = 3; n <= 12; ++n)
        CHECK(cycle_poly(n) == domination_polynomial(cycle_graph(n)));
    CHECK_THROWS_AS(cycle_poly(2), InvalidParameterError);
}

TEST_CASE("complete_poly") {
    CHECK(complete_poly(0) == IntPoly::one());  // null-graph convention
    CHECK(complete_poly(1) == IntPoly::x());
    CHECK(complete_poly(2) == IntPoly{0, 2, 1});
    CHECK(complete_poly(4) == IntPoly{0, 4, 6, 4, 1});
    for (int r = 1; r <= 8; ++r)
        CHECK(complete_poly(r) == domination_polynomial(complete_graph(r)));
}

TEST_CASE("kr_ks_poly") {
    CHECK(kr_ks_poly(2, 2) == IntPoly{0, 0, 6, 4, 1});
    CHECK(kr_ks_poly(3, 2) ==
          IntPoly::binomial_shift(3).pow(2) + BigInt(2) * IntPoly::monomial(1, 3));
    // s=3 identity: ((x+1)^r-1)^3 + 3x^r((x+2)^r-1)
    IntPoly xp2{2, 1};
    CHECK(kr_ks_poly(4, 3) == IntPoly::binomial_shift(4).pow(3) +
                                  BigInt(3) * IntPoly::monomial(1, 4) *
                                      (xp2.pow(4) - IntPoly::one()));
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s) CHECK(kr_ks_poly(r, s) == kr_ks_poly(s, r));
    for (int r = 1; r <= 10; ++r)
        CHECK(kr_ks_poly(r, 2) ==
              IntPoly::binomial_shift(r).pow(2) + BigInt(2) * IntPoly::monomial(1, r));
    for (int r = 2; r <= 4; ++r)
        for (int s = 2; s <= 4; ++s) {
            if (r * s > 16) continue;
            auto [g, m] = cartesian_product(complete_graph(r), complete_graph(s));
            (void)m;
            CHECK(kr_ks_poly(r, s) == domination_polynomial(g));
        }
}

TEST_CASE("strong_with_complete") {
    IntPoly dk2{0, 2, 1};
    CHECK(strong_with_complete(dk2, 1) == dk2);
    CHECK(strong_with_complete(dk2, 2) == IntPoly::binomial_shift(4));
    auto [g, m] = strong_product(path_graph(3), complete_graph(2));
    (void)m;
    CHECK(strong_with_complete(path_poly(3), 2) == domination_polynomial(g));
}

TEST_CASE("ladder_poly") {
    CHECK(ladder_poly(4) == kTableRow4);
    CHECK(ladder_poly(6) == kTableRow6);
    auto [l7, m] = cartesian_product(path_graph(7), complete_graph(2));
    (void)m;
    CHECK(ladder_poly(7) == domination_polynomial(l7));
    CHECK_THROWS_AS(ladder_poly(0), InvalidParameterError);
}

TEST_CASE("ladder_a_poly") {
    CHECK(ladder_a_poly(1) == IntPoly::monomial(1, 2));
    CHECK(ladder_a_poly(3) == IntPoly{0, 0, 0, 2, 6, 4, 1});
    CHECK(ladder_a_poly(5) == both_endpoints_count(5));
    CHECK_THROWS_AS(ladder_a_poly(0), InvalidParameterError);
}

TEST_CASE("gk2_poly") {
    CHECK(gk2_poly(complete_graph(1)) == IntPoly{0, 2, 1});
    CHECK(gk2_poly(complete_graph(3)) ==
          IntPoly::binomial_shift(3).pow(2) + BigInt(2) * IntPoly::monomial(1, 3));
    CHECK(gk2_poly(path_graph(4)) == kTableRow4);
    CHECK_THROWS_AS(gk2_poly(path_graph(13), 12), CapacityError);
}

TEST_CASE("pn_kr_poly and MTable") {
    CHECK(pn_kr_poly(2, 2) == IntPoly{0, 0, 6, 4, 1});
    CHECK(pn_kr_poly(5, 2) == IntPoly{0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1});
    auto [g, m] = cartesian_product(path_graph(4), complete_graph(3));
    (void)m;
    CHECK(pn_kr_poly(4, 3) == domination_polynomial(g));
    for (int n = 1; n <= 8; ++n) {
        CHECK(ladder_poly(n) == pn_kr_poly(n, 2));
        CHECK(ladder_poly(n) == gk2_poly(path_graph(n)));
    }
    // leading coefficient 1, degree n*r
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= 3; ++r) {
            IntPoly p = pn_kr_poly(n, r);
            CHECK(p.degree() == n * r);
            CHECK(p.coefficient(n * r) == 1);
        }
    for (int n = 1; n <= 14; ++n)
        CHECK(pn_kr_poly(n, 2).min_support() == (n + 2) / 2);
    // m^t vs the relaxed oracle with t exempt left-column vertices
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n)
            for (int t = 0; t <= r; ++t) {
                auto [pr, map] = cartesian_product(path_graph(n), complete_graph(r));
                VertexSet exempt = 0;
                for (int i = 0; i < t; ++i) exempt |= vbit(map.index(0, i));
                CHECK(m_poly(n, t, r) == relaxed_domination_polynomial(pr, exempt));
            }
    CHECK_THROWS_AS(m_poly(1, 3, 2), InvalidParameterError);
}

TEST_CASE("strong corollaries report") {
    auto checks = verify_strong_corollaries(9, 2);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
        INFO(c.family << " n=" << c.n << " r=" << c.r);
        CHECK(c.pass);
    }
}
