#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pmf/flow.hpp"

namespace pmf {

enum class GadgetKind { St, Split, Extended, Collapsed };

// Cycle C_v replacing a capacitated vertex v.  verts are the cycle vertices
// in clockwise order (verts[0] reuses v's id); cycle_arcs[i] joins verts[i]
// to verts[i+1]; ext position i carries the base arc from v's rotation slot i.
struct CycleInfo {
    VertexId base_vertex;
    std::vector<VertexId> verts;
    std::vector<ArcId> cycle_arcs;
    std::vector<ArcId> ext_arcs;   // base arc ids
    std::vector<char> ext_into;    // base arc's head is v
};

struct SplitInfo {
    VertexId base_vertex;
    VertexId vin, vout;
    ArcId link;
};

// Collapsed cycle in G-cross: per external slot, the derived arc pair carrying
// flow toward x_in (A) and away from x_out (B).
struct CollapsedCycle {
    VertexId base_vertex;
    VertexId xin, xout;
    ArcId link;
    std::vector<ArcId> toward;  // (. -> x_in), cap = base dart into v
    std::vector<ArcId> away;    // (x_out -> .), cap = base dart out of v
};

struct GadgetMap {
    GadgetKind kind;
    int base_arcs = 0;
    int base_vertices = 0;
    // net_base(a) = sum over terms of sign * net_derived(arc)
    std::vector<std::vector<std::pair<ArcId, int>>> arc_terms;
    VertexId super_s = -1, super_t = -1;
    std::vector<ArcId> source_arcs;  // (s, s_i), aligned with base sources
    std::vector<ArcId> sink_arcs;    // (t_i, t), aligned with base sinks
    std::vector<int> cycle_of;       // base vertex -> cycles index or -1
    std::vector<CycleInfo> cycles;
    std::vector<int> collapsed_of;   // base vertex -> collapsed index or -1
    std::vector<CollapsedCycle> collapsed;
    std::vector<SplitInfo> splits;
    std::vector<ArcId> arc_from_ext;  // Collapsed only: extended arc -> derived arc or -1
};

struct GadgetResult {
    FlowNetwork net;
    GadgetMap map;
};

// G_st: adds an apex supersource and supersink with infinite-capacity arcs
// to/from the terminals.
GadgetResult build_gst(const FlowNetwork& g);

// The Ford-Fulkerson split graph built on top of G_st: every finitely
// capacitated vertex becomes v_in -> v_out of capacity c(v).  Not planar in
// general; carried with an empty (all-apex) embedding.
GadgetResult build_split(const FlowNetwork& g);

// The extended graph built on top of G_st: every finitely capacitated vertex
// of degree >= 2 becomes an undirected cycle whose edges have capacity
// c(v)/2.  Planar apart from the two apices.
GadgetResult build_extended(const FlowNetwork& g);

// G-cross: collapse the cycles of the vertices in X back to capacitated arcs
// (x_in, x_out).  ext is the result of build_extended on the same base.
GadgetResult build_collapsed(const FlowNetwork& ext_net, const GadgetMap& ext_map,
                             const std::vector<VertexId>& X);

// Values copied onto shared arcs; conserves on the base network.
Flow restrict_flow(const FlowNetwork& base, const GadgetMap& map, const Flow& derived);

// Feasible extension of a feasible base flow, of equal value.
Flow extend_to_split(const FlowNetwork& base, const FlowNetwork& bar,
                     const GadgetMap& map, const Flow& f);

// Feasible extension via the per-cycle demand-network procedure.
Flow extend_to_extended(const FlowNetwork& base, const FlowNetwork& ext,
                        const GadgetMap& map, const Flow& f);

// Completes a G-cross flow to a G-circle flow by routing each collapsed
// cycle's boundary demands through C_x; other arcs are copied.  Requires a
// feasible routing to exist (throws ExtensionFailure otherwise).
Flow extend_collapsed_to_extended(const FlowNetwork& gx, const GadgetMap& gx_map,
                                  const FlowNetwork& ext, const GadgetMap& ext_map,
                                  const Flow& h);

// Restriction of an extended-graph flow onto the collapsed graph: shared
// arcs copied, split boundary pairs distributed, each link arc carrying its
// cycle's in-flow.
Flow collapse_flow(const FlowNetwork& gx, const GadgetMap& gx_map,
                   const FlowNetwork& ext, const GadgetMap& ext_map, const Flow& f);

} // namespace pmf
