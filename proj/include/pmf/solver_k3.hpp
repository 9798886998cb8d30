#pragma once

#include "pmf/flow.hpp"
#include "pmf/gadgets.hpp"
#include "pmf/solver_bounded.hpp"

namespace pmf {

// Pipeline state kept for the interpolation-linearity checks in tests.
struct K3Trace {
    bool used_interpolation = false;
    bool used_fixup = false;
    Rat beta0;
    FlowNetwork base;  // the network the core ran on (reversed when |S| == 1)
    FlowNetwork ext;
    GadgetMap ext_map;
    Flow fo;  // initial extended max flow, acyclic restriction
    Flow go;  // H-derived circulation
    Flow f0;  // F(., 0) restriction
    Flow f1;  // F(., 1) restriction
};

// Root of the signed excess line through (0, s0) and (1, s1).
Rat beta_root(const Rat& s0, const Rat& s1);

// F(., beta): cancel pipeline applied to fo + beta * go, restricted to base.
Flow k3_flow_at_beta(const K3Trace& trace, const Rat& beta);

// Removes delta units of flow through x from an almost-feasible flow.
Flow almost_feasible_fixup(const FlowNetwork& net, const Flow& f, VertexId x,
                           const Rat& delta);

// Three-terminal solver for arbitrary rational capacities: sequential
// extended-graph max flow, split-terminal auxiliary network, and either the
// almost-feasible fix-up or the beta interpolation.
Flow solve_k3(const FlowNetwork& net, SolveStats* stats = nullptr,
              K3Trace* trace = nullptr);

} // namespace pmf
