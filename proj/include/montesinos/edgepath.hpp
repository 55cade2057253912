#pragma once

#include <vector>

#include "montesinos/diagram.hpp"

namespace montesinos {

struct Tangle {
    Fraction slope;  // finite, reduced, denominator >= 1

    bool operator==(const Tangle& o) const = default;
};

/// A candidate edgepath for one tangle: a chain of edges of the diagram
/// starting at the tangle vertex and moving right to left (denominators
/// strictly decreasing). The last edge carries the fractional final
/// position; how far along it the path actually ends is the solver's
/// unknown, with weight x on the near end and y on the far end (the
/// degenerate positions x = 0 and y = 0 are both admitted). The empty
/// chain is the constant path.
struct Edgepath {
    Tangle tangle;
    std::vector<Edge> edges;

    bool constant() const { return edges.empty(); }
    bool fractional_final() const { return !edges.empty(); }
    Vertex start() const { return Vertex{tangle.slope}; }
    const Edge& final_edge() const;

    /// Arrow-joined vertex list, e.g. "<1/7>-><0/1>"; "<1/7>" when constant.
    std::string str() const;

    bool operator==(const Edgepath& o) const = default;
};

/// All admissible edgepaths for one tangle: the constant path plus every
/// minimal monotone chain toward the u = 0 axis. Paths never continue past
/// the axis; a path reaching an integer vertex stops there. max_edges is a
/// depth guard only (admissible chains are no longer than the continued
/// fraction expansion of the slope plus one); zero is rejected.
std::vector<Edgepath> enumerate_edgepaths(const Tangle& t, int max_edges);

/// r-value of a final edge <p/q, u/v> traversed from p/q toward u/v: q - v.
/// Vertical edges carry no r-value and are rejected.
BigInt r_value(const Edge& final_edge);

/// Checks the per-path admissibility conditions edge by edge: starts at the
/// tangle vertex, consecutive edges chain, motion is right to left, never
/// retraces, and never runs along two sides of one triangle in succession.
/// Enumeration output must pass this exhaustively; kept separate so tests
/// can cross-check independently generated paths.
bool satisfies_path_conditions(const Edgepath& path);

}  // namespace montesinos
