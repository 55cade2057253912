#include "montesinos/edgepath.hpp"

#include <algorithm>
#include <stdexcept>

namespace montesinos {

const Edge& Edgepath::final_edge() const {
    if (edges.empty())
        throw std::logic_error("Edgepath: constant path has no final edge");
    return edges.back();
}

std::string Edgepath::str() const {
    std::string out = start().str();
    for (const Edge& e : edges)
        out += "->" + e.to.str();
    return out;
}

namespace {

// Smaller-denominator Farey neighbors of v, sorted by slope. For q >= 2
// these are the two Stern-Brocot parents; integer vertices are on the axis
// and have no in-scope continuation.
std::vector<Fraction> descent_neighbors(const Fraction& v) {
    if (v.denominator() <= 1)
        return {};
    auto [p1, p2] = stern_brocot_parents(v);
    if (p2 < p1)
        std::swap(p1, p2);
    return {p1, p2};
}

void enumerate_from(const Tangle& tangle, std::vector<Edge>& chain, int max_edges,
                    std::vector<Edgepath>& out) {
    if (static_cast<int>(chain.size()) >= max_edges)
        return;
    Fraction here = chain.empty() ? tangle.slope : chain.back().to.slope;
    for (const Fraction& next : descent_neighbors(here)) {
        // two sides of one triangle in succession would retrace a shortcut
        if (!chain.empty() && is_farey_neighbor(chain.back().from.slope, next))
            continue;
        chain.push_back(make_edge(Vertex{here}, Vertex{next}));
        out.push_back(Edgepath{tangle, chain});
        enumerate_from(tangle, chain, max_edges, out);
        chain.pop_back();
    }
}

Fraction mirror(const Fraction& f) {
    return Fraction(-f.numerator(), f.denominator());
}

Edgepath mirror(const Edgepath& path) {
    Edgepath m{Tangle{mirror(path.tangle.slope)}, {}};
    m.edges.reserve(path.edges.size());
    for (const Edge& e : path.edges)
        m.edges.push_back(Edge{Vertex{mirror(e.from.slope)}, Vertex{mirror(e.to.slope)}, e.kind});
    return m;
}

}  // namespace

std::vector<Edgepath> enumerate_edgepaths(const Tangle& t, int max_edges) {
    if (max_edges <= 0)
        throw std::invalid_argument("enumerate_edgepaths: max_edges must be positive");
    if (t.slope.is_infinite())
        throw std::invalid_argument("enumerate_edgepaths: tangle slope must be finite");
    if (t.slope.is_negative()) {
        Tangle positive{mirror(t.slope)};
        std::vector<Edgepath> mirrored = enumerate_edgepaths(positive, max_edges);
        for (Edgepath& p : mirrored)
            p = mirror(p);
        return mirrored;
    }
    std::vector<Edgepath> out;
    out.push_back(Edgepath{t, {}});  // constant path
    std::vector<Edge> chain;
    enumerate_from(t, chain, max_edges, out);
    return out;
}

BigInt r_value(const Edge& final_edge) {
    if (final_edge.kind == EdgeKind::vertical)
        throw std::invalid_argument("r_value: vertical edges have no r-value");
    return final_edge.from.slope.denominator() - final_edge.to.slope.denominator();
}

bool satisfies_path_conditions(const Edgepath& path) {
    if (path.constant())
        return true;
    if (!(path.edges.front().from == path.start()))
        return false;
    const Edge* prev = nullptr;
    for (const Edge& e : path.edges) {
        if (prev) {
            if (!(prev->to == e.from))
                return false;
            if (e.to == prev->from)
                return false;  // retraces
            if (is_triangle(prev->from.slope, e.from.slope, e.to.slope))
                return false;
        }
        // right to left: u never increases (strictly decreases off the axis)
        if (!(u_coordinate(e.to) <= u_coordinate(e.from)))
            return false;
        if (e.kind == EdgeKind::farey &&
            e.from.slope.denominator() <= e.to.slope.denominator())
            return false;
        prev = &e;
    }
    return true;
}

}  // namespace montesinos
