#pragma once

#include <optional>
#include <vector>

#include "dompoly/expr.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

/// One-parameter graph family: an expression with free variable n plus the
/// inclusive range of n to instantiate.
struct FamilySpec {
    Expr expr;
    long n_begin = 1;
    long n_end = 1;
};

/// d_{round(q*n + p)}(G_n) extraction spec.
struct CoeffIndexSpec {
    Rational q = 1;
    Rational p = 0;
    enum class Rounding { Floor, Ceil } rounding = Rounding::Floor;
};

/// Linear recurrence with exact coefficients.
///   Constant: a_n = sum_{j=1..k} c_j a_{n-j}            (c_j rational)
///   PolyX:    D_n = sum_{j=1..k} c_j(x) D_{n-j}         (c_j in Q[x])
///   PolyN:    sum_{j=0..k} c_j(n) a_{n+j} = 0           (c_j in Q[n])
/// Constant/PolyX store c_1..c_k in order; PolyN stores c_0..c_k.
struct RecurrenceSpec {
    enum class Kind { Constant, PolyX, PolyN };
    Kind kind;
    int order = 0;
    std::vector<RatPoly> coeffs;

    std::string to_json() const;
    std::string to_string() const;
    bool operator==(const RecurrenceSpec& o) const = default;
};

struct VerifyReport {
    bool ok = true;
    long first_fail = -1;  // index of the first violated instance
};

/// term i is coefficient(polys[i], round(q*(n0+i) + p)).
std::vector<BigInt> extract_coeff_sequence(const std::vector<IntPoly>& polys,
                                           const CoeffIndexSpec& spec, long n0 = 0);

/// term i is sum_{j=0}^{floor(q'*sizes[i]+p')} d_j(G_i).
std::vector<BigInt> partial_sum_sequence(const std::vector<IntPoly>& polys, const Rational& q,
                                         const Rational& p, const std::vector<long>& sizes);

/// Minimal-order constant-coefficient recurrence fitting every supplied term,
/// with `margin` surplus equations.  Throws TooFewTermsError when the data
/// cannot support max_order; returns nullopt when nothing fits.
std::optional<RecurrenceSpec> guess_cfinite(const std::vector<BigInt>& seq, int max_order,
                                            int margin = 4);

/// Minimal (order, degree) lexicographic polynomial-in-n recurrence.
std::optional<RecurrenceSpec> guess_holonomic(const std::vector<BigInt>& seq, int max_order,
                                              int max_degree, int margin = 4);

/// Minimal (order, degree) recurrence with Q[x] coefficients holding as exact
/// polynomial identities over the supplied polynomials.
std::optional<RecurrenceSpec> guess_polyx_recurrence(const std::vector<IntPoly>& polys,
                                                     int max_order, int max_coeff_degree,
                                                     int margin = 2);

VerifyReport verify_recurrence(const std::vector<BigInt>& seq, const RecurrenceSpec& rec);
VerifyReport verify_recurrence(const std::vector<IntPoly>& polys, const RecurrenceSpec& rec);

/// CSV with header "n,value"; n starts at n0.
std::string sequence_to_csv(const std::vector<BigInt>& seq, long n0);

}  // namespace dompoly
