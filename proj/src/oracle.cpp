#include "dompoly/oracle.hpp"

#include <array>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dompoly {

namespace {

struct EnumSetup {
    std::vector<VertexSet> free_closed;  // closed neighborhoods of free vertices
    VertexSet base_union = 0;            // union over forced vertices
    int base_size = 0;                   // |forced|
    int n_total = 0;
};

EnumSetup prepare(const Graph& g, VertexSet forced, VertexSet banned) {
    EnumSetup s;
    s.n_total = g.vertex_count();
    s.base_size = vcount(forced);
    for (VertexSet rest = forced; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        s.base_union |= g.closed_neighborhood(v);
    }
    const VertexSet free = g.full_set() & ~forced & ~banned;
    for (VertexSet rest = free; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        s.free_closed.push_back(g.closed_neighborhood(v));
    }
    return s;
}

// Low-half subset unions are tabled once so the inner loop is a single OR.
constexpr int kLoBits = 14;

std::vector<VertexSet> build_lo_table(const std::vector<VertexSet>& closed, int lo) {
    std::vector<VertexSet> table(std::size_t{1} << lo, 0);
    for (std::uint64_t s = 1; s < table.size(); ++s)
        table[s] = table[s & (s - 1)] | closed[static_cast<std::size_t>(std::countr_zero(s))];
    return table;
}

// Counts for one contiguous range of high-half indices.
void run_block(const EnumSetup& su, const std::vector<VertexSet>& lo_table, int lo,
               VertexSet required, std::uint64_t hi_begin, std::uint64_t hi_end,
               std::vector<unsigned long long>& counts) {
    for (std::uint64_t hi = hi_begin; hi < hi_end; ++hi) {
        VertexSet hi_union = su.base_union;
        for (std::uint64_t rest = hi; rest;) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            hi_union |= su.free_closed[static_cast<std::size_t>(lo + j)];
        }
        const int hi_pop = su.base_size + std::popcount(hi);
        if ((hi_union & required) == required) {
            // Every low subset qualifies; bucket purely by popcount.
            for (std::uint64_t s = 0; s < lo_table.size(); ++s)
                ++counts[static_cast<std::size_t>(hi_pop + std::popcount(s))];
        } else {
            for (std::uint64_t s = 0; s < lo_table.size(); ++s)
                if (((hi_union | lo_table[s]) & required) == required)
                    ++counts[static_cast<std::size_t>(hi_pop + std::popcount(s))];
        }
    }
}

std::vector<unsigned long long> counts_impl(const Graph& g, VertexSet required, VertexSet forced,
                                            VertexSet banned, bool parallel) {
    const EnumSetup su = prepare(g, forced, banned);
    const int m = static_cast<int>(su.free_closed.size());
    const int lo = std::min(m, kLoBits);
    const int hi_bits = m - lo;
    const auto lo_table = build_lo_table(su.free_closed, lo);
    const std::uint64_t hi_count = std::uint64_t{1} << hi_bits;

    std::vector<unsigned long long> counts(static_cast<std::size_t>(su.n_total) + 1, 0);
    if (!parallel || hi_count < 2) {
        run_block(su, lo_table, lo, required, 0, hi_count, counts);
        return counts;
    }

    // Disjoint blocks, each with its own partial vector; merged in block
    // order so the result is bit-identical regardless of worker count.
    const std::uint64_t n_blocks = std::min<std::uint64_t>(hi_count, 256);
    std::vector<std::vector<unsigned long long>> partial(
        n_blocks, std::vector<unsigned long long>(counts.size(), 0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long b = 0; b < static_cast<long long>(n_blocks); ++b) {
        const std::uint64_t begin = hi_count * static_cast<std::uint64_t>(b) / n_blocks;
        const std::uint64_t end = hi_count * static_cast<std::uint64_t>(b + 1) / n_blocks;
        run_block(su, lo_table, lo, required, begin, end, partial[static_cast<std::size_t>(b)]);
    }
    for (const auto& p : partial)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
    return counts;
}

void check_cap(const Graph& g, const BruteConfig& cfg, const char* what) {
    if (g.vertex_count() > cfg.cap)
        throw CapacityError(std::string(what) + ": graph has " +
                            std::to_string(g.vertex_count()) +
                            " vertices, brute-force cap is " + std::to_string(cfg.cap));
}

IntPoly counts_to_poly(const std::vector<unsigned long long>& counts) {
    std::vector<BigInt> c(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) c[i] = counts[i];
    return IntPoly(std::move(c));
}

}  // namespace

std::vector<unsigned long long> dominating_set_counts_serial(const Graph& g, VertexSet required,
                                                             VertexSet forced, VertexSet banned) {
    return counts_impl(g, required, forced, banned, false);
}

std::vector<unsigned long long> dominating_set_counts_parallel(const Graph& g, VertexSet required,
                                                               VertexSet forced,
                                                               VertexSet banned) {
    return counts_impl(g, required, forced, banned, true);
}

IntPoly domination_polynomial(const Graph& g, const BruteConfig& cfg) {
    check_cap(g, cfg, "domination_polynomial");
    return counts_to_poly(counts_impl(g, g.full_set(), 0, 0, cfg.parallel));
}

IntPoly relaxed_domination_polynomial(const Graph& g, VertexSet exempt, const BruteConfig& cfg) {
    check_cap(g, cfg, "relaxed_domination_polynomial");
    if (exempt & ~g.full_set())
        throw InvalidParameterError("relaxed_domination_polynomial: exempt set out of range");
    return counts_to_poly(counts_impl(g, g.full_set() & ~exempt, 0, 0, cfg.parallel));
}

int domination_number(const Graph& g, const BruteConfig& cfg) {
    if (g.vertex_count() == 0) return 0;
    return domination_polynomial(g, cfg).min_support();
}

IntPoly pz_polynomial(const Graph& g, int z, const BruteConfig& cfg) {
    check_cap(g, cfg, "pz_polynomial");
    if (z < 0 || z >= g.vertex_count())
        throw InvalidParameterError("pz_polynomial: z out of range");
    const VertexSet required = g.full_set() & ~vbit(z);
    const VertexSet banned = g.closed_neighborhood(z);
    return counts_to_poly(counts_impl(g, required, 0, banned, cfg.parallel));
}

IntPoly both_endpoints_count(int n, const BruteConfig& cfg) {
    if (n < 1) throw InvalidParameterError("both_endpoints_count requires n >= 1");
    auto [ladder, map] = cartesian_product(path_graph(n), complete_graph(2));
    check_cap(ladder, cfg, "both_endpoints_count");
    const VertexSet forced = vbit(map.index(n - 1, 0)) | vbit(map.index(n - 1, 1));
    return counts_to_poly(counts_impl(ladder, ladder.full_set(), forced, 0, cfg.parallel));
}

}  // namespace dompoly
