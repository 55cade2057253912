#include "montesinos/diagram.hpp"

#include <stdexcept>

namespace montesinos {

Edge make_edge(const Vertex& from, const Vertex& to) {
    if (from == to)
        throw std::invalid_argument("make_edge: endpoints coincide");
    if (!is_farey_neighbor(from.slope, to.slope))
        throw std::invalid_argument("make_edge: " + from.str() + " and " + to.str() +
                                    " are not Farey neighbors");
    bool vertical = !from.slope.is_infinite() && !to.slope.is_infinite() &&
                    from.slope.denominator() == to.slope.denominator();
    return Edge{from, to, vertical ? EdgeKind::vertical : EdgeKind::farey};
}

Fraction u_coordinate(const Vertex& v) {
    if (v.slope.is_infinite())
        return Fraction(-1);
    const BigInt& q = v.slope.denominator();
    return Fraction(q - 1, q);
}

bool is_triangle(const Fraction& a, const Fraction& b, const Fraction& c) {
    return is_farey_neighbor(a, b) && is_farey_neighbor(b, c) && is_farey_neighbor(a, c);
}

DiagramPoint vertex_coordinates(const Vertex& v, const BigInt& weight) {
    if (v.slope.is_infinite()) {
        // q = 0 continues the same affine form; unused by right-region systems
        return DiagramPoint{weight, -weight, weight * v.slope.numerator()};
    }
    const BigInt& p = v.slope.numerator();
    const BigInt& q = v.slope.denominator();
    return DiagramPoint{weight, weight * (q - 1), weight * p};
}

DiagramPoint endpoint_coordinates(const Edge& final_edge, const BigInt& x, const BigInt& y) {
    if (x == 0 && y == 0)
        throw std::invalid_argument("endpoint_coordinates: both weights zero");
    DiagramPoint near = vertex_coordinates(final_edge.from, x);
    DiagramPoint far = vertex_coordinates(final_edge.to, y);
    return DiagramPoint{near.a + far.a, near.b + far.b, near.c + far.c};
}

}  // namespace montesinos
