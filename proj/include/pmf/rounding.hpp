#pragma once

#include "pmf/flow.hpp"

namespace pmf {

// Per-dart capacities of the fractional residual graph: for every dart d
// with fractional part delta(d) > 0, d gets 1 - delta(d) and rev(d) gets
// delta(d); every other capacity is zero.
std::vector<Rat> fractional_residual(const Flow& f);

// Rounds a fractional flow of integral value to an integer flow of the same
// value with |f(e) - f1(e)| < 1 per arc, by repeatedly saturating cycles of
// the fractional residual graph.  The network supplies the dart pairing
// only; capacities never constrain the rounding.
Flow round_flow(const FlowNetwork& net, const Flow& f);

} // namespace pmf
