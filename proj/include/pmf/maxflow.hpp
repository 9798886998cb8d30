#pragma once

#include <vector>

#include "pmf/flow.hpp"

namespace pmf {

// Bare flow problem for gadget-internal graphs (H_i, demand networks, stub
// graphs) that never need an embedding.  Darts come in pairs like ArcDef.
struct RawNet {
    int n = 0;
    std::vector<VertexId> tail;  // per arc
    std::vector<VertexId> head;
    std::vector<Cap> cap;  // per dart (2 per arc)
    std::vector<VertexId> sources, sinks;

    ArcId add_arc(VertexId u, VertexId v, Cap cf, Cap cb = Cap(Rat(0))) {
        tail.push_back(u);
        head.push_back(v);
        cap.push_back(cf);
        cap.push_back(cb);
        return (ArcId)tail.size() - 1;
    }
    int dart_count() const { return (int)cap.size(); }
    VertexId dart_tail(DartId d) const { return is_fwd(d) ? tail[arc_of(d)] : head[arc_of(d)]; }
    VertexId dart_head(DartId d) const { return dart_tail(rev(d)); }
};

RawNet raw_view(const FlowNetwork& net);

// Exact maximum flow, shortest-augmenting-path phases (Dinic).  Deterministic
// for a fixed dart order.  Starts from `base` if given (so the result minus
// base is a maximum flow of the residual network).  Throws UnboundedFlow if
// an augmenting path of infinite bottleneck exists.
Flow max_flow_raw(const RawNet& net, const Flow* base = nullptr);

Flow max_flow(const FlowNetwork& net);

// Maximum flow g in the residual of net w.r.t. base; caller forms base + g.
Flow max_flow_residual(const FlowNetwork& net, const Flow& base);

// Flow of exactly `value` routed via a capacity-limited stub at the single
// source (and sink, when unique).  Throws Infeasible if the network cannot
// carry that much.
Flow fixed_value_flow(const FlowNetwork& net, const Rat& value);
Flow fixed_value_flow_raw(const RawNet& net, const Rat& value);

Flow acyclic_max_flow(const FlowNetwork& net);

// Saturates per-vertex demands (negative: must send, positive: must absorb)
// inside `net` via stub terminals, as in the extension procedure.  Demands
// must sum to zero; throws ExtensionFailure if the stubs cannot be saturated.
Flow saturate_demands(const RawNet& net, const std::vector<Rat>& demand);

// Removes flow cycles by repeated search, preserving value; output <= input
// arc-wise.
Flow cancel_generic_raw(const RawNet& net, const Flow& f);
Flow cancel_generic(const FlowNetwork& net, const Flow& f);

} // namespace pmf
