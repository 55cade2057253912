#pragma once

#include <optional>
#include <string>
#include <vector>

#include "montesinos/edgepath.hpp"

namespace montesinos {

struct MontesinosKnot {
    std::vector<Tangle> tangles;           // n >= 3, finite reduced slopes
    std::vector<BigInt> pretzel_twists;    // nonempty iff written as P(t1,...,tn)

    std::size_t arity() const { return tangles.size(); }
    bool is_pretzel() const { return !pretzel_twists.empty(); }
    std::string str() const;

    bool operator==(const MontesinosKnot& o) const { return tangles == o.tangles; }
};

struct Weights {
    BigInt x;  // weight on the near end of the final edge
    BigInt y;  // weight on the far end; y/(x+y) of the edge is traversed

    bool operator==(const Weights& o) const = default;
};

/// One admissible edgepath per tangle together with the minimal positive
/// integer solution of the gluing equations: all endpoint a-coordinates
/// equal (the sheet count), all b-coordinates equal, c-coordinates summing
/// to zero. Constant paths carry weights (s, 0).
struct EdgepathSystem {
    MontesinosKnot knot;
    std::vector<Edgepath> paths;
    std::vector<Weights> weights;
    BigInt sheets;

    DiagramPoint endpoint(std::size_t i) const;
    std::string paths_str() const;  // ";"-joined path serializations
};

enum class SolveOutcome {
    solved,
    no_solution,              // only the trivial solution
    not_positive,             // one-dimensional ray leaves the positive orthant
    degenerate_solution_space // dimension >= 2; reported, never sampled
};

/// Solves the gluing equations for one path choice. Absence of a solution
/// is a regular outcome, not an error; `outcome` tells the caller why.
std::optional<EdgepathSystem> solve_system(const MontesinosKnot& knot,
                                           const std::vector<Edgepath>& paths,
                                           SolveOutcome* outcome = nullptr);

/// Minimal s such that s * |gamma_i| is an integer for every fractional
/// path length; always equals system.sheets.
BigInt sheet_count(const EdgepathSystem& system);

struct SweepOptions {
    int max_edges = 64;
};

/// Solves every combination of admissible per-tangle paths and returns all
/// systems with a positive minimal solution, sorted by path serialization.
/// Combinations whose endpoint b-ranges cannot meet are pruned unsolved.
/// sweep_systems runs the combinations in parallel (OpenMP when enabled);
/// sweep_systems_serial is the reference implementation kept for testing
/// and benchmarking. Both produce identical output.
std::vector<EdgepathSystem> sweep_systems(const MontesinosKnot& knot,
                                          const SweepOptions& opts = {});
std::vector<EdgepathSystem> sweep_systems_serial(const MontesinosKnot& knot,
                                                 const SweepOptions& opts = {});

// Exact kernel of a homogeneous rational system, exposed for testing the
// degenerate-dimension diagnostic directly.
struct KernelResult {
    int dimension = 0;
    std::vector<Fraction> ray;  // a basis vector when dimension == 1
};
KernelResult solve_homogeneous(std::vector<std::vector<Fraction>> rows, std::size_t cols);

}  // namespace montesinos
