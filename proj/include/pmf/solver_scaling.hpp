#pragma once

#include "pmf/flow.hpp"
#include "pmf/gadgets.hpp"
#include "pmf/solver_bounded.hpp"

namespace pmf {

// One stage-1 run: a circulation g (as a flow delta on the extended graph)
// such that f + g is feasible there with zero excess on every vertex of X
// and at most (k-2) ex(f) excess elsewhere.  Throws StageFailure when the
// guessed value exceeds the optimum.
Flow improve_stage1(const FlowNetwork& base, const FlowNetwork& ext,
                    const GadgetMap& ext_map, const Flow& f,
                    const std::vector<VertexId>& X, const Rat& exf);

// Integer circulation approximating g/k within 1 per arc.
Flow improve_stage2(const FlowNetwork& ext, const Flow& g, int k);

// One while-loop body: stages 1-3.  Returns the improved extended-graph
// flow; the caller re-derives the restriction and its excesses.
Flow improve(const FlowNetwork& base, const FlowNetwork& ext, const GadgetMap& ext_map,
             const Flow& f, long long* iteration_counter);

// Optional per-phase trace for the acceptance suite.
struct ImprovePhaseLog {
    Rat pre_excess;
    Rat post_excess;
    int k;
    int delta;
};
void set_improve_log(std::vector<ImprovePhaseLog>* sink);

// Binary-search scaling solver for arbitrary integer capacities.
Flow solve_scaling(const FlowNetwork& net, SolveStats* stats = nullptr);

// One binary-search probe in isolation: whether the three-phase pipeline
// certifies a feasible flow of exactly this value.  Exposed for the
// monotone-acceptance sweep.
bool scaling_accepts(const FlowNetwork& net, long long lambda);

} // namespace pmf
