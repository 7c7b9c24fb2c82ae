#pragma once

#include <map>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

/// D(P_n,x) via D(P_{n+1}) = x(D(P_n) + D(P_{n-1}) + D(P_{n-2})),
/// bases D(P_0)=1, D(P_1)=x, D(P_2)=x^2+2x.
IntPoly path_poly(int n);

/// D(C_n,x), n >= 3, same recurrence shape with bases D(C_3), D(C_4), D(C_5).
IntPoly cycle_poly(int n);

/// D(K_r,x) = (x+1)^r - 1 for r >= 1; r = 0 returns 1 (null-graph convention,
/// deliberately not the formula's value 0).
IntPoly complete_poly(int r);

/// D(K_r x K_s) closed form (Cartesian product), r,s >= 1:
/// ((x+1)^r-1)^s - sum_{k=1}^{s-1} C(s,k)(-1)^k ((x+1)^{s-k}-1)^r.
IntPoly kr_ks_poly(int r, int s);

/// D(G (x) K_r) for the strong product: compose(D_G, (x+1)^r - 1).
IntPoly strong_with_complete(const IntPoly& d_g, int r);

/// D(L_n) for the ladder L_n = P_n x K_2: Table rows for n <= 5, then the
/// five-term recurrence
/// D(L_n) = x(x+2)D(L_{n-1}) + x(x+1)D(L_{n-2}) + x^2(x+1)D(L_{n-3})
///          - x^3 D(L_{n-4}) - x^3 D(L_{n-5}).
IntPoly ladder_poly(int n);

/// A_n = x^2 (D(L_{n-1}) + D(L_{n-2}) - A_{n-2}), seeds A_1 = x^2,
/// A_2 = x^2 (x+1)^2.
IntPoly ladder_a_poly(int n);

/// D(G x K_2) via the per-subset J_W decomposition; the four sub-polynomials
/// per W come from the brute-force oracle.  Every per-W division by (x+1)
/// must be exact, otherwise InexactDivisionError.
IntPoly gk2_poly(const Graph& g, int cap = 12);

/// Memo table for the relaxed polynomials m^t_{n,r} of P_n x K_r with t
/// left-end vertices exempt.  Entries are computed on demand and immutable.
class MTable {
public:
    explicit MTable(int r);
    int r() const { return r_; }
    const IntPoly& get(int n, int t);

private:
    IntPoly compute(int n, int t);
    int r_;
    std::map<std::pair<int, int>, IntPoly> memo_;
};

/// m^t_{n,r} without keeping the table around.
IntPoly m_poly(int n, int t, int r);

/// D(P_n x K_r) = m^0_{n,r}.
IntPoly pn_kr_poly(int n, int r);

struct CorollaryCheck {
    char family;  // 'H' = P_n (x) K_r, 'C' = C_n (x) K_r, 'Z' = L_n (x) K_r
    int n;
    int r;
    bool pass;
};

/// Symbolic checks that the composed families satisfy their displayed
/// recurrences (H and C from the path-shaped recurrence, Z from the ladder
/// one under y = (x+1)^r - 1).
std::vector<CorollaryCheck> verify_strong_corollaries(int n_max, int r_max);

}  // namespace dompoly
