#pragma once

#include <stdexcept>
#include <string>

#include "montesinos/solver.hpp"

namespace montesinos {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses pretzel notation "P(t1,t2,...,tn)" with integer t_i, |t_i| >= 2
/// (the tangles are 1/t_i), or Montesinos notation "M(p1/q1,...,pn/qn)"
/// with reduced denominators >= 2. Requires n >= 3. parse_knot composed
/// with MontesinosKnot::str is the identity on valid input.
MontesinosKnot parse_knot(const std::string& text);

}  // namespace montesinos
