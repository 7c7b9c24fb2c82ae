#include "dompoly/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace dompoly {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns the pivot column of each pivot
// row, in order.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

// Solves A x = b exactly; free variables are set to zero.  nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(Matrix a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    if (rows == 0) return std::vector<Rational>{};
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    for (std::size_t i = 0; i < rows; ++i) {
        bool all_zero = std::all_of(a[i].begin(), a[i].end() - 1,
                                    [](const Rational& q) { return q == 0; });
        if (all_zero && a[i].back() != 0) return std::nullopt;
    }
    std::vector<Rational> x(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = a[i].back();
    return x;
}

// Nontrivial solutions of A x = 0: one canonical vector per free column
// (that free variable set to 1, the rest to 0), ordered last free column
// first so trailing unknowns are preferred nonzero.
std::vector<std::vector<Rational>> nullspace_candidates(Matrix a) {
    std::vector<std::vector<Rational>> out;
    if (a.empty()) return out;
    const std::size_t cols = a[0].size();
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t fc = cols; fc-- > 0;) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> x(cols, 0);
        x[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<std::size_t>(pivots[i])] = -a[i][fc];
        out.push_back(std::move(x));
    }
    return out;
}

// Integral primitive normalization with the reference polynomial's leading
// coefficient positive.
void normalize_polyn(std::vector<RatPoly>& coeffs) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& p : coeffs)
        for (const auto& q : p.coefficients()) {
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
        }
    for (auto& p : coeffs) p = Rational(lcm_den) * p;
    for (const auto& p : coeffs)
        for (const auto& q : p.coefficients()) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(q));
    if (gcd_num > 1)
        for (auto& p : coeffs) p = Rational(BigInt(1), gcd_num) * p;
    // sign convention: last nonzero coefficient polynomial has positive lead
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (it->is_zero()) continue;
        if (it->coefficients().back() < 0)
            for (auto& p : coeffs) p = Rational(-1) * p;
        break;
    }
}

RatPoly build_ratpoly(const std::vector<Rational>& flat, std::size_t offset, int degree) {
    std::vector<Rational> c(flat.begin() + static_cast<long>(offset),
                            flat.begin() + static_cast<long>(offset) + degree + 1);
    return RatPoly(std::move(c));
}

}  // namespace

std::vector<BigInt> extract_coeff_sequence(const std::vector<IntPoly>& polys,
                                           const CoeffIndexSpec& spec, long n0) {
    std::vector<BigInt> out;
    out.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Rational idx = spec.q * Rational(n0 + static_cast<long>(i)) + spec.p;
        const BigInt k =
            spec.rounding == CoeffIndexSpec::Rounding::Floor ? rat_floor(idx) : rat_ceil(idx);
        if (k < 0 || k > polys[i].degree())
            out.emplace_back(0);
        else
            out.push_back(polys[i].coefficient(static_cast<long>(k)));
    }
    return out;
}

std::vector<BigInt> partial_sum_sequence(const std::vector<IntPoly>& polys, const Rational& q,
                                         const Rational& p, const std::vector<long>& sizes) {
    if (sizes.size() != polys.size())
        throw InvalidParameterError("partial_sum_sequence: sizes length mismatch");
    std::vector<BigInt> out;
    out.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const BigInt top = rat_floor(q * Rational(sizes[i]) + p);
        BigInt sum = 0;
        for (long j = 0; j <= polys[i].degree(); ++j)
            if (BigInt(j) <= top) sum += polys[i].coefficient(j);
        out.push_back(std::move(sum));
    }
    return out;
}

std::optional<RecurrenceSpec> guess_cfinite(const std::vector<BigInt>& seq, int max_order,
                                            int margin) {
    if (max_order < 1) throw InvalidParameterError("guess_cfinite: max_order must be >= 1");
    const long n = static_cast<long>(seq.size());
    if (n < 2L * max_order + margin)
        throw TooFewTermsError("guess_cfinite: need at least " +
                               std::to_string(2L * max_order + margin) + " terms, got " +
                               std::to_string(n));
    for (int k = 1; k <= max_order; ++k) {
        Matrix a;
        std::vector<Rational> b;
        for (long i = k; i < n; ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(k));
            for (int j = 1; j <= k; ++j)
                row[static_cast<std::size_t>(j - 1)] = Rational(seq[static_cast<std::size_t>(i - j)]);
            a.push_back(std::move(row));
            b.emplace_back(seq[static_cast<std::size_t>(i)]);
        }
        if (auto sol = solve_linear(std::move(a), b)) {
            RecurrenceSpec spec;
            spec.kind = RecurrenceSpec::Kind::Constant;
            spec.order = k;
            for (const auto& c : *sol) spec.coeffs.push_back(RatPoly({c}));
            return spec;
        }
    }
    return std::nullopt;
}

std::optional<RecurrenceSpec> guess_holonomic(const std::vector<BigInt>& seq, int max_order,
                                              int max_degree, int margin) {
    if (max_order < 1 || max_degree < 0)
        throw InvalidParameterError("guess_holonomic: bad bounds");
    const long n = static_cast<long>(seq.size());
    bool skipped_for_data = false;
    for (int k = 1; k <= max_order; ++k) {
        for (int d = 0; d <= max_degree; ++d) {
            const long unknowns = static_cast<long>(k + 1) * (d + 1);
            const long equations = n - k;
            if (equations < unknowns + margin) {
                skipped_for_data = true;
                continue;
            }
            Matrix a;
            for (long i = 0; i < equations; ++i) {
                std::vector<Rational> row;
                row.reserve(static_cast<std::size_t>(unknowns));
                for (int j = 0; j <= k; ++j) {
                    Rational npow = 1;
                    for (int e = 0; e <= d; ++e) {
                        row.push_back(npow * Rational(seq[static_cast<std::size_t>(i + j)]));
                        npow *= Rational(i);
                    }
                }
                a.push_back(std::move(row));
            }
            for (auto& cand : nullspace_candidates(std::move(a))) {
                std::vector<RatPoly> coeffs;
                for (int j = 0; j <= k; ++j)
                    coeffs.push_back(build_ratpoly(cand, static_cast<std::size_t>(j) *
                                                             static_cast<std::size_t>(d + 1),
                                                   d));
                if (coeffs.back().is_zero()) continue;  // effectively lower order
                normalize_polyn(coeffs);
                RecurrenceSpec spec;
                spec.kind = RecurrenceSpec::Kind::PolyN;
                spec.order = k;
                spec.coeffs = std::move(coeffs);
                if (verify_recurrence(seq, spec).ok) return spec;
            }
        }
    }
    if (skipped_for_data)
        throw TooFewTermsError("guess_holonomic: too few terms for the requested bounds");
    return std::nullopt;
}

std::optional<RecurrenceSpec> guess_polyx_recurrence(const std::vector<IntPoly>& polys,
                                                     int max_order, int max_coeff_degree,
                                                     int margin) {
    if (max_order < 1 || max_coeff_degree < 0)
        throw InvalidParameterError("guess_polyx_recurrence: bad bounds");
    const long n = static_cast<long>(polys.size());
    bool skipped_for_data = false;
    int max_deg = 0;
    for (const auto& p : polys) max_deg = std::max(max_deg, p.degree());
    for (int k = 1; k <= max_order; ++k) {
        for (int d = 0; d <= max_coeff_degree; ++d) {
            if (n - k < k + margin) {
                skipped_for_data = true;
                continue;
            }
            const int powers = max_deg + d + 1;  // rows per polynomial identity
            const std::size_t unknowns = static_cast<std::size_t>(k) * (d + 1);
            Matrix a;
            std::vector<Rational> b;
            for (long i = k; i < n; ++i) {
                for (int m = 0; m < powers; ++m) {
                    std::vector<Rational> row(unknowns, 0);
                    for (int j = 1; j <= k; ++j)
                        for (int e = 0; e <= d; ++e)
                            row[static_cast<std::size_t>(j - 1) * (d + 1) +
                                static_cast<std::size_t>(e)] =
                                Rational(polys[static_cast<std::size_t>(i - j)].coefficient(m - e));
                    a.push_back(std::move(row));
                    b.emplace_back(polys[static_cast<std::size_t>(i)].coefficient(m));
                }
            }
            auto sol = solve_linear(std::move(a), b);
            if (!sol) continue;
            RecurrenceSpec spec;
            spec.kind = RecurrenceSpec::Kind::PolyX;
            spec.order = k;
            for (int j = 1; j <= k; ++j)
                spec.coeffs.push_back(build_ratpoly(*sol, static_cast<std::size_t>(j - 1) *
                                                              static_cast<std::size_t>(d + 1),
                                                    d));
            return spec;
        }
    }
    if (skipped_for_data)
        throw TooFewTermsError("guess_polyx_recurrence: too few polynomials for the bounds");
    return std::nullopt;
}

VerifyReport verify_recurrence(const std::vector<BigInt>& seq, const RecurrenceSpec& rec) {
    const long n = static_cast<long>(seq.size());
    if (rec.kind == RecurrenceSpec::Kind::Constant) {
        for (long i = rec.order; i < n; ++i) {
            Rational sum = 0;
            for (int j = 1; j <= rec.order; ++j)
                sum += rec.coeffs[static_cast<std::size_t>(j - 1)].coefficient(0) *
                       Rational(seq[static_cast<std::size_t>(i - j)]);
            if (sum != Rational(seq[static_cast<std::size_t>(i)])) return {false, i};
        }
        return {};
    }
    if (rec.kind == RecurrenceSpec::Kind::PolyN) {
        for (long i = 0; i + rec.order < n; ++i) {
            Rational sum = 0;
            for (int j = 0; j <= rec.order; ++j)
                sum += rec.coeffs[static_cast<std::size_t>(j)].eval(Rational(i)) *
                       Rational(seq[static_cast<std::size_t>(i + j)]);
            if (sum != 0) return {false, i};
        }
        return {};
    }
    throw InvalidParameterError("verify_recurrence: PolyX recurrence needs polynomial data");
}

VerifyReport verify_recurrence(const std::vector<IntPoly>& polys, const RecurrenceSpec& rec) {
    if (rec.kind != RecurrenceSpec::Kind::PolyX)
        throw InvalidParameterError("verify_recurrence: polynomial data needs a PolyX recurrence");
    const long n = static_cast<long>(polys.size());
    for (long i = rec.order; i < n; ++i) {
        RatPoly sum;
        for (int j = 1; j <= rec.order; ++j)
            sum = sum + rec.coeffs[static_cast<std::size_t>(j - 1)] *
                            RatPoly::from_int(polys[static_cast<std::size_t>(i - j)]);
        if (sum != RatPoly::from_int(polys[static_cast<std::size_t>(i)])) return {false, i};
    }
    return {};
}

std::string RecurrenceSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = kind == Kind::Constant ? "constant" : kind == Kind::PolyX ? "poly-x" : "poly-n";
    j["order"] = order;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& p : coeffs) {
        nlohmann::json one = nlohmann::json::array();
        for (const auto& q : p.coefficients()) one.push_back(rational_to_string(q));
        cs.push_back(one);
    }
    j["coefficients"] = cs;
    return j.dump();
}

std::string RecurrenceSpec::to_string() const {
    std::ostringstream os;
    if (kind == Kind::PolyN) {
        for (int j = 0; j <= order; ++j) {
            if (j) os << " + ";
            std::string c = coeffs[static_cast<std::size_t>(j)].to_string();
            for (auto& ch : c)
                if (ch == 'x') ch = 'n';
            os << "(" << c << ")*a[n+" << j << "]";
        }
        os << " = 0";
        return os.str();
    }
    os << "a[n] = ";
    for (int j = 1; j <= order; ++j) {
        if (j > 1) os << " + ";
        os << "(" << coeffs[static_cast<std::size_t>(j - 1)].to_string() << ")*a[n-" << j << "]";
    }
    if (kind == Kind::PolyX) os << "   (coefficients in x)";
    return os.str();
}

std::string sequence_to_csv(const std::vector<BigInt>& seq, long n0) {
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
        os << (n0 + static_cast<long>(i)) << "," << seq[i].str() << "\n";
    return os.str();
}

}  // namespace dompoly
