#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "dompoly/errors.hpp"

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// floor/ceil of an exact rational, as BigInt
BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

// Parse "a/b" or "a" (no decimals, no floats).
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeffs[i] is the coefficient of x^i; the representation is kept
/// normalized (no trailing zeros, empty vector = zero polynomial).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<BigInt> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({BigInt(1)}); }
    static IntPoly x() { return IntPoly({BigInt(0), BigInt(1)}); }
    static IntPoly monomial(BigInt c, int exponent);
    /// (x+1)^r - 1, the domination polynomial of K_r (r >= 1).
    static IntPoly binomial_shift(int r);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coefficient(long i) const;
    const std::vector<BigInt>& coefficients() const { return c_; }
    /// Least i with a nonzero coefficient; throws on the zero polynomial.
    int min_support() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    friend IntPoly operator*(const BigInt& k, const IntPoly& p);
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly pow(int e) const;
    IntPoly compose(const IntPoly& q) const;
    /// Quotient of an exact division; throws InexactDivisionError if the
    /// remainder is nonzero, InvalidParameterError if q is zero.
    IntPoly exact_divide(const IntPoly& q) const;
    Rational eval(const Rational& t) const;

    std::string to_string() const;
    /// JSON array of decimal strings, lowest degree first.
    std::string to_json_array() const;
    static IntPoly from_json_array(const std::string& json);

private:
    void normalize();
    std::vector<BigInt> c_;
};

/// Dense polynomial over exact rationals (interpolation intermediate).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(long i) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    friend RatPoly operator*(const Rational& k, const RatPoly& p);
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& t) const;
    bool is_integral() const;
    /// Conversion; throws InvalidParameterError when not integral.
    IntPoly to_int_poly() const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Unique polynomial of degree < points.size() through all points.
/// Abscissae must be pairwise distinct.
RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace dompoly
