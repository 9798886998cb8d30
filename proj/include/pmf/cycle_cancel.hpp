#pragma once

#include "pmf/flow.hpp"
#include "pmf/gadgets.hpp"

namespace pmf {

// Which orientation of residual cycle the potential circulation eliminates.
enum class KillResidual { Clockwise, CounterClockwise };

struct FacePotential {
    std::vector<Rat> phi;  // per face, distance from the outer face's dual vertex
};

// Dual shortest-path distances from the outer face over the given lengths.
// All lengths must be nonnegative and every face reachable through finite
// lengths.
FacePotential face_potentials(const Embedding& emb, const std::vector<Cap>& lengths);

// The Khuller-Naor-Klein circulation g(e) = max{0, Phi(h_r) - Phi(h_l)}
// (clockwise kill; the counter-clockwise pass flips the difference).  The
// result is a simple circulation obeying 0 <= g(e) <= length(e), and the
// lengths (read as capacities) admit no residual cycle of the chosen
// orientation with respect to g.
Flow potential_circulation(const Embedding& emb, const std::vector<Cap>& lengths,
                           KillResidual kill);

// Kaplan-Nussbaum pipeline on a G-circle flow: pass one caps the base arcs
// at their current flow and kills counter-clockwise restriction flow-cycles;
// pass two symmetrically kills clockwise ones.  Value is preserved, the
// restriction of the output is acyclic, and output <= input arc-wise on the
// base arcs.
Flow cancel_ccw_then_cw(const FlowNetwork& ext, const GadgetMap& map, const Flow& f);

} // namespace pmf
