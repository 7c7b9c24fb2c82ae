// Compares the serial reference subset-enumeration kernel against the
// OpenMP-parallel one and checks that the tallies are bit-identical.
//
//   bench_oracle [n] [repeats]      (default n = 24, repeats = 3)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "dompoly/graph.hpp"
#include "dompoly/oracle.hpp"

using namespace dompoly;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const Graph& g, bool parallel) {
    const auto t0 = Clock::now();
    auto counts = parallel ? dominating_set_counts_parallel(g, g.full_set(), 0, 0)
                           : dominating_set_counts_serial(g, g.full_set(), 0, 0);
    const auto t1 = Clock::now();
    volatile unsigned long long sink = counts[counts.size() / 2];
    (void)sink;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 24;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (n < 1 || n > kMaxVertices) {
        std::cerr << "n out of range\n";
        return 2;
    }
    // cylinder C_n x K_2 would exceed the word for large n; a plain cycle is
    // a representative dense-enough workload
    const Graph g = n >= 3 ? cycle_graph(n) : path_graph(n);

    const auto serial = dominating_set_counts_serial(g, g.full_set(), 0, 0);
    const auto parallel = dominating_set_counts_parallel(g, g.full_set(), 0, 0);
    if (serial != parallel) {
        std::cerr << "FAIL: serial and parallel tallies differ\n";
        return 1;
    }
    std::cout << "tallies identical (" << serial.size() << " buckets)\n";

    double best_serial = 1e300, best_parallel = 1e300;
    for (int i = 0; i < repeats; ++i) {
        best_serial = std::min(best_serial, run_ms(g, false));
        best_parallel = std::min(best_parallel, run_ms(g, true));
    }
    std::cout << "n = " << n << " (2^" << n << " subsets)\n";
    std::cout << "serial:   " << best_serial << " ms\n";
    std::cout << "parallel: " << best_parallel << " ms\n";
    std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
    return 0;
}
