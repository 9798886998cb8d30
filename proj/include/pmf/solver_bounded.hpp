#pragma once

#include "pmf/flow.hpp"

namespace pmf {

// Removes ex(f, x) units of flow through every infeasible vertex by peeling
// source-to-x-to-sink paths off the positive-flow DAG.  The result is
// feasible; its value drops by exactly the total stripped excess.
Flow strip_excess(const FlowNetwork& net, const Flow& f);

struct SolveStats {
    Rat value;
    long long improve_iterations = 0;       // scaling solver only
    long long guesses = 0;                  // scaling solver only
    long long max_guess_iterations = 0;     // deepest improvement loop seen
    long long iteration_bound = 0;          // the enforced per-guess cap
};

// Bounded-capacity pipeline: maximum flow in the extended graph, cycle
// cancellation, excess stripping, then re-augmentation in the split graph.
// Returns a maximum feasible flow on the input network (integral when the
// instance is integral).
Flow solve_bounded(const FlowNetwork& net, SolveStats* stats = nullptr);

} // namespace pmf
