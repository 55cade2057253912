// Compares the OpenMP sweep against the serial reference and checks that
// both produce identical output. The workload is a set of multi-tangle
// knots whose path menus give each sweep thousands of combinations.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "montesinos/notation.hpp"
#include "montesinos/solver.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
    long long scale = argc > 1 ? std::atoll(argv[1]) : 41;
    std::vector<montesinos::MontesinosKnot> knots;
    for (long long q = 31; q <= 31 + 2 * scale; q += 2) {
        knots.push_back(montesinos::parse_knot("M(3/8,-5/7,7/9,1/" + std::to_string(q) + ")"));
        knots.push_back(montesinos::parse_knot("P(-3,3," + std::to_string(q) + ",5)"));
    }

    std::size_t serial_found = 0, parallel_found = 0;
    double t0 = now();
    for (const auto& knot : knots)
        serial_found += montesinos::sweep_systems_serial(knot).size();
    double t_serial = now() - t0;

    t0 = now();
    for (const auto& knot : knots)
        parallel_found += montesinos::sweep_systems(knot).size();
    double t_parallel = now() - t0;

    bool agree = true;
    for (const auto& knot : knots) {
        auto a = montesinos::sweep_systems_serial(knot);
        auto b = montesinos::sweep_systems(knot);
        if (a.size() != b.size()) {
            agree = false;
            break;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].paths_str() != b[i].paths_str() || a[i].sheets != b[i].sheets)
                agree = false;
    }

    std::printf("knots swept:    %zu\n", knots.size());
    std::printf("systems found:  %zu (serial) / %zu (parallel)\n", serial_found,
                parallel_found);
    std::printf("serial:         %.3f s\n", t_serial);
    std::printf("parallel:       %.3f s\n", t_parallel);
    std::printf("speedup:        %.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0.0);
    std::printf("outputs agree:  %s\n", agree ? "yes" : "NO");
    return agree && serial_found == parallel_found ? 0 : 1;
}
