#include "dompoly/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dompoly {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    // Pascal's rule, one row at a time.
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

BigInt rat_floor(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt d = num / den;
    if (num < 0 && d * den != num) --d;
    return d;
}

BigInt rat_ceil(const Rational& q) { return -rat_floor(-q); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw InvalidParameterError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidParameterError("cannot parse rational: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(BigInt c, int exponent) {
    if (c == 0) return zero();
    std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1, 0);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial_shift(int r) {
    if (r < 0) throw InvalidParameterError("binomial_shift: r must be >= 0");
    std::vector<BigInt> v(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) v[static_cast<std::size_t>(i)] = binomial(r, i);
    v[0] -= 1;  // (x+1)^r - 1
    return IntPoly(std::move(v));
}

BigInt IntPoly::coefficient(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

int IntPoly::min_support() const {
    if (is_zero()) throw InvalidParameterError("min_support of the zero polynomial");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;  // unreachable
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& k, const IntPoly& p) {
    std::vector<BigInt> v(p.c_);
    for (auto& x : v) x *= k;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw InvalidParameterError("pow: negative exponent");
    IntPoly r = one(), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
    // Horner in the polynomial ring.
    IntPoly r = zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + IntPoly({*it});
    return r;
}

IntPoly IntPoly::exact_divide(const IntPoly& q) const {
    if (q.is_zero()) throw InvalidParameterError("exact_divide by zero polynomial");
    std::vector<BigInt> rem(c_);
    if (rem.size() < q.c_.size()) {
        if (is_zero()) return zero();
        throw InexactDivisionError("exact_divide: degree of dividend below divisor");
    }
    std::vector<BigInt> quo(rem.size() - q.c_.size() + 1, 0);
    const BigInt& lead = q.c_.back();
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
        BigInt top = rem[static_cast<std::size_t>(i) + q.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw InexactDivisionError("exact_divide: leading coefficient does not divide");
        BigInt f = top / lead;
        quo[static_cast<std::size_t>(i)] = f;
        for (std::size_t j = 0; j < q.c_.size(); ++j)
            rem[static_cast<std::size_t>(i) + j] -= f * q.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw InexactDivisionError("exact_divide: nonzero remainder");
    return IntPoly(std::move(quo));
}

Rational IntPoly::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Rational(*it);
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const BigInt& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string IntPoly::to_json_array() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : c_) a.push_back(c.str());
    return a.dump();
}

IntPoly IntPoly::from_json_array(const std::string& json) {
    nlohmann::json a = nlohmann::json::parse(json);
    if (!a.is_array()) throw InvalidParameterError("polynomial JSON must be an array");
    std::vector<BigInt> v;
    v.reserve(a.size());
    for (const auto& e : a) {
        if (!e.is_string()) throw InvalidParameterError("polynomial JSON entries must be strings");
        v.emplace_back(e.get<std::string>());
    }
    return IntPoly(std::move(v));
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

Rational RatPoly::coefficient(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& k, const RatPoly& p) {
    std::vector<Rational> v(p.c_);
    for (auto& x : v) x *= k;
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

bool RatPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return denominator(q) == 1; });
}

IntPoly RatPoly::to_int_poly() const {
    if (!is_integral())
        throw InvalidParameterError("to_int_poly: polynomial has non-integral coefficients");
    std::vector<BigInt> v;
    v.reserve(c_.size());
    for (const auto& q : c_) v.push_back(numerator(q));
    return IntPoly(std::move(v));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << rational_to_string(a);
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw InvalidParameterError("lagrange_interpolate: no points");
    {
        std::set<Rational> xs;
        for (const auto& [x, y] : points)
            if (!xs.insert(x).second)
                throw InvalidParameterError("lagrange_interpolate: duplicate abscissa " +
                                            rational_to_string(x));
    }
    // Newton form with divided differences.
    const std::size_t k = points.size();
    std::vector<Rational> dd(k);
    for (std::size_t i = 0; i < k; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    RatPoly result;
    RatPoly basis({Rational(1)});
    for (std::size_t i = 0; i < k; ++i) {
        result = result + dd[i] * basis;
        basis = basis * RatPoly({-points[i].first, Rational(1)});
    }
    return result;
}

}  // namespace dompoly
