#pragma once

#include <string>

#include "montesinos/fraction.hpp"

namespace montesinos {

// The Hatcher-Oertel diagram: vertices <p/q> for p/q in Q u {oo}, an edge
// between Farey neighbors, drawn in the strip so that u(<p/q>) = (q-1)/q.
// Edges between consecutive integers share u = 0 and are the vertical edges
// of the axis. The diagram is never materialized as a graph; vertices and
// edges are generated on demand from the Farey structure.

struct Vertex {
    Fraction slope;

    bool operator==(const Vertex& o) const { return slope == o.slope; }
    std::string str() const { return "<" + slope.str() + ">"; }
};

enum class EdgeKind { farey, vertical };

struct Edge {
    Vertex from;
    Vertex to;
    EdgeKind kind;

    bool operator==(const Edge& o) const = default;
    std::string str() const { return "<" + from.slope.str() + "|" + to.slope.str() + ">"; }
};

/// Builds the edge joining two distinct Farey-neighbor vertices, classifying
/// axis segments (consecutive integer slopes, equal u) as vertical.
Edge make_edge(const Vertex& from, const Vertex& to);

/// Horizontal position of a vertex in the strip: (q-1)/q, and -1 for <1/0>.
Fraction u_coordinate(const Vertex& v);

/// True iff the three slopes are pairwise Farey neighbors, i.e. span a
/// triangle of the diagram.
bool is_triangle(const Fraction& a, const Fraction& b, const Fraction& c);

// Homogeneous endpoint coordinates. a = number of sheets, b = horizontal
// position equalized across tangles by the gluing condition, c = vertical
// coordinate whose total must vanish. The planar point of (a, b, c) is
// (u, v) = (b/(a+b), c/(a+b)).
struct DiagramPoint {
    BigInt a;
    BigInt b;
    BigInt c;

    bool operator==(const DiagramPoint& o) const = default;
};

/// A vertex <p/q> carrying weight w contributes (w, w(q-1), w*p).
DiagramPoint vertex_coordinates(const Vertex& v, const BigInt& weight);

/// Coordinates of the point dividing `final_edge` in ratio y : x, scaled to
/// x + y sheets: x weighs the near (from) end, y the far (to) end.
/// Rejects x = y = 0.
DiagramPoint endpoint_coordinates(const Edge& final_edge, const BigInt& x, const BigInt& y);

}  // namespace montesinos
