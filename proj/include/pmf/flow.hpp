#pragma once

#include <vector>

#include "pmf/network.hpp"

namespace pmf {

// Per-dart nonnegative values with min{f(d), f(rev d)} = 0 on every pair.
using Flow = std::vector<Rat>;

inline Flow zero_flow(const FlowNetwork& net) { return Flow(net.emb.dart_count()); }

Rat in_flow(const FlowNetwork& net, const Flow& f, VertexId v);
Rat out_flow(const FlowNetwork& net, const Flow& f, VertexId v);
bool conserves(const FlowNetwork& net, const Flow& f);

// v(f) = sum of f^out over sources; throws ConservationViolation if f does
// not conserve at some non-terminal.
Rat flow_value(const FlowNetwork& net, const Flow& f);

// max{0, f^in(v) - c(v)}; zero for infinite or terminal capacity.
Rat excess(const FlowNetwork& net, const Flow& f, VertexId v);
Rat max_excess(const FlowNetwork& net, const Flow& f);
std::vector<VertexId> infeasible_vertices(const FlowNetwork& net, const Flow& f);

// Residual capacities c(d) - f(d) + f(rev d); throws InfeasibleInput if f
// exceeds an arc capacity.
std::vector<Cap> residual_caps(const FlowNetwork& net, const Flow& f);

Flow add_flows(const Flow& f, const Flow& g);
Flow sub_flows(const Flow& f, const Flow& g);  // net difference, normalized
Flow scale_flow(const Rat& c, const Flow& f);  // throws NegativeScalar

struct Violation {
    enum Kind { ArcCap, VertexCap, Conservation, Negative } kind;
    int id;          // dart or vertex
    Rat magnitude;
};

struct FeasibilityReport {
    bool ok = true;
    std::vector<Violation> violations;
};

FeasibilityReport check_feasible(const FlowNetwork& net, const Flow& f);
inline bool is_feasible(const FlowNetwork& net, const Flow& f) {
    return check_feasible(net, f).ok;
}

struct FlowComponent {
    bool is_cycle = false;
    std::vector<DartId> darts;
    Rat amount;
};

// Path/cycle decomposition by repeated saturating walks from sources, then
// remaining cycles; deterministic via smallest-dart-first tie-breaks.
std::vector<FlowComponent> decompose(const FlowNetwork& net, const Flow& f);

// True if the positive-flow subgraph has no directed cycle.
bool is_acyclic(const FlowNetwork& net, const Flow& f);

// Network whose arc capacities are the flow values (the paper's flow graph
// f_G with weights read as capacities); vertex capacities dropped.
FlowNetwork flow_graph_network(const FlowNetwork& net, const Flow& f);

} // namespace pmf
