#include <random>

#include "doctest.h"
#include "dompoly/poly.hpp"

using namespace dompoly;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::vector<BigInt> c(rng() % (max_deg + 1) + 1);
    for (auto& v : c) v = BigInt(static_cast<long>(rng() % 21) - 10);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("binomial and rational helpers") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(24, 12) == BigInt("2704156"));
    CHECK(binomial(5, 7) == 0);
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(rat_ceil(Rational(-7, 2)) == -3);
    CHECK(rat_floor(Rational(4)) == 4);
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(rational_to_string(Rational(5, 4)) == "5/4");
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidParameterError);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameterError);
}

TEST_CASE("IntPoly arithmetic basics") {
    IntPoly p{0, 2, 1};  // x^2 + 2x
    CHECK(p + IntPoly::zero() == p);
    CHECK(p * p == IntPoly{0, 0, 4, 4, 1});
    // ((x+1)^2 - 1)^2 + 2x^2 = x^4 + 4x^3 + 6x^2
    IntPoly lhs = IntPoly::binomial_shift(2).pow(2) + BigInt(2) * IntPoly::monomial(1, 2);
    CHECK(lhs == IntPoly{0, 0, 6, 4, 1});
    CHECK((p - p).is_zero());
    CHECK((-p) + p == IntPoly::zero());
    CHECK(IntPoly::zero().degree() == -1);
}

TEST_CASE("IntPoly ring axioms on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        IntPoly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("compose") {
    IntPoly p{0, 2, 1};
    CHECK(p.compose(IntPoly::x()) == p);
    // compose(x^2+2x, (x+1)^2-1) = (x+1)^4 - 1
    CHECK(p.compose(IntPoly::binomial_shift(2)) == IntPoly::binomial_shift(4));
    CHECK(IntPoly::zero().compose(p).is_zero());
    // compose respects evaluation
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        IntPoly a = random_poly(rng, 4), b = random_poly(rng, 3);
        Rational at(3, 2);
        CHECK(a.compose(b).eval(at) == a.eval(b.eval(at)));
    }
}

TEST_CASE("exact_divide") {
    CHECK(IntPoly{0, 1, 1}.exact_divide(IntPoly{1, 1}) == IntPoly::x());
    CHECK(IntPoly{0, 0, 2, 1}.exact_divide(IntPoly::x()) == IntPoly{0, 2, 1});
    IntPoly q = IntPoly::binomial_shift(4).exact_divide(IntPoly::binomial_shift(2));
    CHECK(q == IntPoly{2, 2, 1});  // (x+1)^2 + 1
    CHECK(q * IntPoly::binomial_shift(2) == IntPoly::binomial_shift(4));
    CHECK_THROWS_AS(IntPoly({1, 1}).exact_divide(IntPoly::x()), InexactDivisionError);
    CHECK_THROWS_AS(IntPoly({1, 1}).exact_divide(IntPoly::zero()), InvalidParameterError);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        IntPoly a = random_poly(rng, 4), b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_divide(b) == a);
    }
}

TEST_CASE("eval") {
    IntPoly p{0, 2, 1};
    CHECK(p.eval(1) == 3);
    CHECK(p.eval(0) == 0);
    CHECK(p.eval(Rational(1, 2)) == Rational(5, 4));
    CHECK(IntPoly({7, 0, 3}).eval(0) == 7);
}

TEST_CASE("binomial_shift, coefficient, min_support") {
    CHECK(IntPoly::binomial_shift(0).is_zero());
    CHECK(IntPoly::binomial_shift(1) == IntPoly::x());
    CHECK(IntPoly::binomial_shift(3) == IntPoly{0, 3, 3, 1});
    IntPoly row2{0, 0, 6, 4, 1};
    CHECK(row2.coefficient(2) == 6);
    CHECK(row2.coefficient(-1) == 0);
    CHECK(row2.coefficient(99) == 0);
    IntPoly row3{0, 0, 3, 16, 15, 6, 1};
    CHECK(row3.coefficient(3) == 16);
    IntPoly row5{0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1};
    CHECK(row5.min_support() == 3);
    CHECK(IntPoly({0, 2, 1}).min_support() == 1);
    CHECK(IntPoly::monomial(1, 7).min_support() == 7);
    CHECK_THROWS_AS(IntPoly::zero().min_support(), InvalidParameterError);
}

TEST_CASE("JSON round trip") {
    IntPoly p{-3, 0, 12345678901234567LL};
    IntPoly back = IntPoly::from_json_array(p.to_json_array());
    CHECK(back == p);
    CHECK(IntPoly::from_json_array(IntPoly::zero().to_json_array()).is_zero());
}

TEST_CASE("RatPoly integrality") {
    RatPoly r{Rational(1), Rational(2)};
    CHECK(r.is_integral());
    CHECK(r.to_int_poly() == IntPoly{1, 2});
    RatPoly h{Rational(1, 2)};
    CHECK_FALSE(h.is_integral());
    CHECK_THROWS_AS(h.to_int_poly(), InvalidParameterError);
}

TEST_CASE("lagrange_interpolate") {
    // Evaluations of x^2+2x at 1, 3, 7.
    RatPoly r = lagrange_interpolate({{1, 3}, {3, 15}, {7, 63}});
    CHECK(r.to_int_poly() == IntPoly{0, 2, 1});
    CHECK(lagrange_interpolate({{0, 42}}) == RatPoly{Rational(42)});
    // Random cubic round-trips through 4 distinct abscissae.
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        IntPoly cubic = random_poly(rng, 3);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < 4; ++i) {
            Rational a(i * 2 + 1, 3);
            pts.push_back({a, cubic.eval(a)});
        }
        RatPoly got = lagrange_interpolate(pts);
        CHECK(got == RatPoly::from_int(cubic));
    }
    CHECK_THROWS_AS(lagrange_interpolate({{1, 1}, {1, 2}}), InvalidParameterError);
}
