#pragma once

#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

namespace dompoly {

struct BruteConfig {
    int cap = 26;          // max vertex count for subset enumeration
    bool parallel = true;  // OpenMP kernel; serial reference kept for testing
};

/// Shared kernel behind all brute-force counts: tallies, by subset size,
/// the sets S with forced <= S <= V \ banned whose closed neighborhood union
/// covers `required`.  counts[k] is the number of qualifying S with |S| = k.
/// Both kernels produce bit-identical output; the parallel one partitions the
/// enumeration range into blocks merged in block order.
std::vector<unsigned long long> dominating_set_counts_serial(const Graph& g, VertexSet required,
                                                             VertexSet forced, VertexSet banned);
std::vector<unsigned long long> dominating_set_counts_parallel(const Graph& g, VertexSet required,
                                                               VertexSet forced, VertexSet banned);

/// Exact D(G,x) by enumerating all 2^n subsets.
IntPoly domination_polynomial(const Graph& g, const BruteConfig& cfg = {});

/// Counts S whose closed neighborhoods cover V \ exempt.
IntPoly relaxed_domination_polynomial(const Graph& g, VertexSet exempt,
                                      const BruteConfig& cfg = {});

/// gamma(G); 0 for the null graph.
int domination_number(const Graph& g, const BruteConfig& cfg = {});

/// p_z: sum of x^|S| over S <= V \ N[z] dominating both V \ N[z] and N(z)
/// (z itself exempt, and no factor of x for z).
IntPoly pz_polynomial(const Graph& g, int z, const BruteConfig& cfg = {});

/// A_n: dominating sets of the ladder L_n = P_n x K_2 (Cartesian) containing
/// both rung-n vertices.
IntPoly both_endpoints_count(int n, const BruteConfig& cfg = {});

}  // namespace dompoly
