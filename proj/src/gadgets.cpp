#include "pmf/gadgets.hpp"

#include <algorithm>

#include "pmf/maxflow.hpp"

namespace pmf {

namespace {

DartId outer_dart_of(const FlowNetwork& g) {
    FaceId f = g.emb.outer_face();
    if (f < 0) return -1;
    return g.emb.face_darts(f).front();
}

std::vector<ArcId> rotation_arcs(const FlowNetwork& g, VertexId v) {
    std::vector<ArcId> r;
    r.reserve(g.emb.rotation(v).size());
    for (DartId d : g.emb.rotation(v)) r.push_back(arc_of(d));
    return r;
}

void add_terminal_arcs(NetworkBuilder& b, const FlowNetwork& g, GadgetMap& map,
                       VertexId s, VertexId t) {
    map.super_s = s;
    map.super_t = t;
    for (VertexId sv : g.sources)
        map.source_arcs.push_back(b.add_arc(s, sv, Cap::infinite()));
    for (VertexId tv : g.sinks)
        map.sink_arcs.push_back(b.add_arc(tv, t, Cap::infinite()));
}

GadgetMap fresh_map(GadgetKind kind, const FlowNetwork& g) {
    GadgetMap map;
    map.kind = kind;
    map.base_arcs = g.emb.arc_count();
    map.base_vertices = g.emb.vertex_count();
    map.arc_terms.resize(map.base_arcs);
    map.cycle_of.assign(map.base_vertices, -1);
    map.collapsed_of.assign(map.base_vertices, -1);
    return map;
}

} // namespace

GadgetResult build_gst(const FlowNetwork& g) {
    NetworkBuilder b;
    b.set_regime(g.regime);
    int n = g.emb.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        b.add_vertex(g.vcap[v], Role::None, g.emb.is_apex(v));
    for (ArcId a = 0; a < g.emb.arc_count(); ++a)
        b.add_arc(g.emb.tail(fwd_dart(a)), g.emb.head(fwd_dart(a)),
                  g.cap[fwd_dart(a)], g.cap[bwd_dart(a)]);
    for (VertexId v = 0; v < n; ++v)
        if (!g.emb.is_apex(v)) b.set_rotation(v, rotation_arcs(g, v));

    GadgetMap map = fresh_map(GadgetKind::St, g);
    for (ArcId a = 0; a < map.base_arcs; ++a) map.arc_terms[a] = {{a, +1}};
    VertexId s = b.add_vertex(Cap::infinite(), Role::Source, true);
    VertexId t = b.add_vertex(Cap::infinite(), Role::Sink, true);
    add_terminal_arcs(b, g, map, s, t);
    b.set_outer(outer_dart_of(g));
    return {b.build(), std::move(map)};
}

GadgetResult build_split(const FlowNetwork& g) {
    int n = g.emb.vertex_count(), m = g.emb.arc_count();
    NetworkBuilder b;
    b.set_regime(g.regime);
    for (VertexId v = 0; v < n; ++v)
        b.add_vertex(Cap::infinite(), Role::None, true);

    GadgetMap map = fresh_map(GadgetKind::Split, g);
    std::vector<VertexId> vin(n, -1), vout(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        if (g.is_terminal(v) || g.vcap[v].inf) continue;
        vin[v] = b.add_vertex(Cap::infinite(), Role::None, true);
        vout[v] = b.add_vertex(Cap::infinite(), Role::None, true);
    }
    auto as_tail = [&](VertexId v) { return vout[v] >= 0 ? vout[v] : v; };
    auto as_head = [&](VertexId v) { return vin[v] >= 0 ? vin[v] : v; };

    for (ArcId a = 0; a < m; ++a) {
        VertexId u = g.emb.tail(fwd_dart(a)), w = g.emb.head(fwd_dart(a));
        ArcId fa = b.add_arc(as_tail(u), as_head(w), g.cap[fwd_dart(a)]);
        map.arc_terms[a].push_back({fa, +1});
        if (g.cap[bwd_dart(a)].is_positive()) {
            ArcId ba = b.add_arc(as_tail(w), as_head(u), g.cap[bwd_dart(a)]);
            map.arc_terms[a].push_back({ba, -1});
        }
    }
    VertexId s = b.add_vertex(Cap::infinite(), Role::Source, true);
    VertexId t = b.add_vertex(Cap::infinite(), Role::Sink, true);
    add_terminal_arcs(b, g, map, s, t);
    for (VertexId v = 0; v < n; ++v) {
        if (vin[v] < 0) continue;
        ArcId link = b.add_arc(vin[v], vout[v], g.vcap[v]);
        map.splits.push_back({v, vin[v], vout[v], link});
    }
    return {b.build(), std::move(map)};
}

GadgetResult build_extended(const FlowNetwork& g) {
    int n = g.emb.vertex_count(), m = g.emb.arc_count();
    NetworkBuilder b;
    b.set_regime(g.regime);
    GadgetMap map = fresh_map(GadgetKind::Extended, g);

    std::vector<char> cyc(n, 0);
    for (VertexId v = 0; v < n; ++v)
        cyc[v] = !g.is_terminal(v) && !g.vcap[v].inf && !g.emb.is_apex(v) &&
                 g.emb.degree(v) >= 2;

    for (VertexId v = 0; v < n; ++v)
        b.add_vertex(Cap::infinite(), Role::None, g.emb.is_apex(v));
    std::vector<std::vector<VertexId>> cverts(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!cyc[v]) continue;
        cverts[v].push_back(v);  // v's id becomes the first cycle vertex
        for (int i = 1; i < g.emb.degree(v); ++i)
            cverts[v].push_back(b.add_vertex(Cap::infinite(), Role::None, false));
    }

    for (ArcId a = 0; a < m; ++a) {
        DartId df = fwd_dart(a), db = bwd_dart(a);
        VertexId u = g.emb.tail(df), w = g.emb.head(df);
        VertexId tu = cyc[u] ? cverts[u][g.emb.rot_pos(df)] : u;
        VertexId hw = cyc[w] ? cverts[w][g.emb.rot_pos(db)] : w;
        ArcId na = b.add_arc(tu, hw, g.cap[df], g.cap[db]);
        internal_check(na == a, "extended graph must keep base arc ids");
        map.arc_terms[a] = {{a, +1}};
    }
    VertexId s = b.add_vertex(Cap::infinite(), Role::Source, true);
    VertexId t = b.add_vertex(Cap::infinite(), Role::Sink, true);
    add_terminal_arcs(b, g, map, s, t);

    for (VertexId v = 0; v < n; ++v) {
        if (cyc[v]) continue;
        if (!g.emb.is_apex(v)) b.set_rotation(v, rotation_arcs(g, v));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!cyc[v]) continue;
        int d = g.emb.degree(v);
        CycleInfo ci;
        ci.base_vertex = v;
        ci.verts = cverts[v];
        Rat half = g.vcap[v].val * Rat(i128(1), i128(2));
        for (int i = 0; i < d; ++i)
            ci.cycle_arcs.push_back(
                b.add_arc(cverts[v][i], cverts[v][(i + 1) % d], Cap(half), Cap(half)));
        for (int i = 0; i < d; ++i) {
            DartId dd = g.emb.rotation(v)[i];
            ci.ext_arcs.push_back(arc_of(dd));
            ci.ext_into.push_back(!is_fwd(dd));
        }
        // Clockwise at cycle vertex i: external arc, arc to the next cycle
        // vertex clockwise, arc back to the previous one.
        for (int i = 0; i < d; ++i)
            b.set_rotation(cverts[v][i],
                           {ci.ext_arcs[i], ci.cycle_arcs[i],
                            ci.cycle_arcs[(i + d - 1) % d]});
        map.cycle_of[v] = (int)map.cycles.size();
        map.cycles.push_back(std::move(ci));
    }
    b.set_outer(outer_dart_of(g));
    return {b.build(), std::move(map)};
}

GadgetResult build_collapsed(const FlowNetwork& ext_net, const GadgetMap& ext_map,
                             const std::vector<VertexId>& X) {
    int n = ext_net.emb.vertex_count(), m = ext_net.emb.arc_count();
    NetworkBuilder b;
    b.set_regime(ext_net.regime);
    for (VertexId v = 0; v < n; ++v)
        b.add_vertex(Cap::infinite(), ext_net.role[v], true);

    GadgetMap map;
    map.kind = GadgetKind::Collapsed;
    map.base_arcs = ext_map.base_arcs;
    map.base_vertices = ext_map.base_vertices;
    map.arc_terms.resize(map.base_arcs);
    map.cycle_of.assign(map.base_vertices, -1);
    map.collapsed_of.assign(map.base_vertices, -1);
    map.arc_from_ext.assign(m, -1);

    std::vector<int> in_collapsed(n, -1);
    std::vector<char> drop_arc(m, 0);
    for (int xi = 0; xi < (int)X.size(); ++xi) {
        VertexId x = X[xi];
        internal_check(ext_map.cycle_of[x] >= 0, "collapse of a vertex without a cycle");
        const CycleInfo& ci = ext_map.cycles[ext_map.cycle_of[x]];
        for (VertexId w : ci.verts) in_collapsed[w] = xi;
        for (ArcId a : ci.cycle_arcs) drop_arc[a] = 1;
        CollapsedCycle cc;
        cc.base_vertex = x;
        cc.xin = b.add_vertex(Cap::infinite(), Role::None, true);
        cc.xout = b.add_vertex(Cap::infinite(), Role::None, true);
        cc.link = -1;
        cc.toward.assign(ci.ext_arcs.size(), -1);
        cc.away.assign(ci.ext_arcs.size(), -1);
        map.collapsed_of[x] = (int)map.collapsed.size();
        map.collapsed.push_back(cc);
    }

    auto slot_of = [&](int xi, ArcId a, bool into) -> int {
        const CycleInfo& ci = ext_map.cycles[ext_map.cycle_of[X[xi]]];
        for (size_t i = 0; i < ci.ext_arcs.size(); ++i)
            if (ci.ext_arcs[i] == a && (ci.ext_into[i] != 0) == into) return (int)i;
        fail(Err::Internal, "external arc not found on its cycle");
    };

    for (ArcId a = 0; a < m; ++a) {
        if (drop_arc[a]) continue;
        DartId df = fwd_dart(a), db = bwd_dart(a);
        VertexId u = ext_net.emb.tail(df), w = ext_net.emb.head(df);
        int cu = in_collapsed[u], cw = in_collapsed[w];
        if (cu < 0 && cw < 0) {
            ArcId na = b.add_arc(u, w, ext_net.cap[df], ext_net.cap[db]);
            map.arc_from_ext[a] = na;
            if (a < map.base_arcs) map.arc_terms[a] = {{na, +1}};
            continue;
        }
        internal_check(a < map.base_arcs, "only base arcs may touch a collapsed cycle");
        VertexId a_tail = cu >= 0 ? map.collapsed[cu].xout : u;
        VertexId a_head = cw >= 0 ? map.collapsed[cw].xin : w;
        VertexId b_tail = cw >= 0 ? map.collapsed[cw].xout : w;
        VertexId b_head = cu >= 0 ? map.collapsed[cu].xin : u;
        ArcId fa = b.add_arc(a_tail, a_head, ext_net.cap[df]);
        ArcId ba = b.add_arc(b_tail, b_head, ext_net.cap[db]);
        map.arc_terms[a] = {{fa, +1}, {ba, -1}};
        if (cw >= 0) {
            int i = slot_of(cw, a, true);
            map.collapsed[cw].toward[i] = fa;
            map.collapsed[cw].away[i] = ba;
        }
        if (cu >= 0) {
            int i = slot_of(cu, a, false);
            map.collapsed[cu].toward[i] = ba;
            map.collapsed[cu].away[i] = fa;
        }
    }
    for (int xi = 0; xi < (int)X.size(); ++xi) {
        const CycleInfo& ci = ext_map.cycles[ext_map.cycle_of[X[xi]]];
        Rat cx = ext_net.cap[fwd_dart(ci.cycle_arcs[0])].val * Rat(2);
        map.collapsed[xi].link =
            b.add_arc(map.collapsed[xi].xin, map.collapsed[xi].xout, Cap(cx));
    }
    map.super_s = ext_map.super_s;
    map.super_t = ext_map.super_t;
    for (ArcId a : ext_map.source_arcs) map.source_arcs.push_back(map.arc_from_ext[a]);
    for (ArcId a : ext_map.sink_arcs) map.sink_arcs.push_back(map.arc_from_ext[a]);
    return {b.build(), std::move(map)};
}

Flow restrict_flow(const FlowNetwork& base, const GadgetMap& map, const Flow& derived) {
    Flow f(base.emb.dart_count());
    for (ArcId a = 0; a < map.base_arcs; ++a) {
        Rat net(0);
        for (const auto& [da, sign] : map.arc_terms[a]) {
            Rat d = derived[fwd_dart(da)] - derived[bwd_dart(da)];
            net += sign > 0 ? d : -d;
        }
        if (net.is_positive()) f[fwd_dart(a)] = net;
        else f[bwd_dart(a)] = -net;
    }
    return f;
}

namespace {

void fill_terminal_arcs(const FlowNetwork& base, const GadgetMap& map, const Flow& f,
                        Flow& out) {
    for (size_t i = 0; i < base.sources.size(); ++i)
        out[fwd_dart(map.source_arcs[i])] = out_flow(base, f, base.sources[i]);
    for (size_t i = 0; i < base.sinks.size(); ++i)
        out[fwd_dart(map.sink_arcs[i])] = in_flow(base, f, base.sinks[i]);
}

} // namespace

Flow extend_to_split(const FlowNetwork& base, const FlowNetwork& bar,
                     const GadgetMap& map, const Flow& f) {
    if (!is_feasible(base, f))
        fail(Err::InfeasibleInput, "extension requires a feasible base flow");
    Flow g(bar.emb.dart_count());
    for (ArcId a = 0; a < map.base_arcs; ++a) {
        const auto& terms = map.arc_terms[a];
        g[fwd_dart(terms[0].first)] = f[fwd_dart(a)];
        if (terms.size() > 1) g[fwd_dart(terms[1].first)] = f[bwd_dart(a)];
        else internal_check(f[bwd_dart(a)].is_zero(), "flow on an unrepresented reverse dart");
    }
    for (const SplitInfo& sp : map.splits)
        g[fwd_dart(sp.link)] = in_flow(base, f, sp.base_vertex);
    fill_terminal_arcs(base, map, f, g);
    return g;
}

namespace {

// Routes per-slot demands around one capacity-c(v)/2 cycle.
void route_cycle(const FlowNetwork& ext, const std::vector<ArcId>& cycle_arcs,
                 const std::vector<Rat>& demand, Flow& out) {
    int d = (int)cycle_arcs.size();
    RawNet cyc;
    cyc.n = d;
    for (int i = 0; i < d; ++i) {
        Cap half = ext.cap[fwd_dart(cycle_arcs[i])];
        cyc.add_arc(i, (i + 1) % d, half, half);
    }
    Flow cf = saturate_demands(cyc, demand);
    for (int i = 0; i < d; ++i) {
        out[fwd_dart(cycle_arcs[i])] = cf[fwd_dart(i)];
        out[bwd_dart(cycle_arcs[i])] = cf[bwd_dart(i)];
    }
}

} // namespace

Flow extend_to_extended(const FlowNetwork& base, const FlowNetwork& ext,
                        const GadgetMap& map, const Flow& f) {
    if (!conserves(base, f))
        fail(Err::InfeasibleInput, "extension requires a conserving flow");
    for (DartId d = 0; d < base.emb.dart_count(); ++d)
        if (!(f[d] <= base.cap[d]))
            fail(Err::InfeasibleInput, "extension requires an arc-feasible flow");
    Flow g(ext.emb.dart_count());
    for (ArcId a = 0; a < map.base_arcs; ++a) {
        g[fwd_dart(a)] = f[fwd_dart(a)];
        g[bwd_dart(a)] = f[bwd_dart(a)];
    }
    fill_terminal_arcs(base, map, f, g);
    for (const CycleInfo& ci : map.cycles) {
        int d = (int)ci.ext_arcs.size();
        std::vector<Rat> demand(d);
        for (int i = 0; i < d; ++i) {
            ArcId a = ci.ext_arcs[i];
            Rat net_in = f[fwd_dart(a)] - f[bwd_dart(a)];
            if (!ci.ext_into[i]) net_in = -net_in;
            demand[i] = -net_in;
        }
        route_cycle(ext, ci.cycle_arcs, demand, g);
    }
    return g;
}

Flow collapse_flow(const FlowNetwork& gx, const GadgetMap& gx_map,
                   const FlowNetwork& ext, const GadgetMap& ext_map, const Flow& f) {
    (void)ext;
    Flow h(gx.emb.dart_count());
    for (ArcId a = 0; a < (int)gx_map.arc_from_ext.size(); ++a) {
        ArcId na = gx_map.arc_from_ext[a];
        if (na < 0) continue;
        h[fwd_dart(na)] = f[fwd_dart(a)];
        h[bwd_dart(na)] = f[bwd_dart(a)];
    }
    for (const CollapsedCycle& cc : gx_map.collapsed) {
        const CycleInfo& ci = ext_map.cycles[ext_map.cycle_of[cc.base_vertex]];
        Rat into(0);
        for (size_t i = 0; i < ci.ext_arcs.size(); ++i) {
            DartId din = ci.ext_into[i] ? fwd_dart(ci.ext_arcs[i]) : bwd_dart(ci.ext_arcs[i]);
            h[fwd_dart(cc.toward[i])] = f[din];
            h[fwd_dart(cc.away[i])] = f[rev(din)];
            into += f[din];
        }
        h[fwd_dart(cc.link)] = into;
    }
    return h;
}

Flow extend_collapsed_to_extended(const FlowNetwork& gx, const GadgetMap& gx_map,
                                  const FlowNetwork& ext, const GadgetMap& ext_map,
                                  const Flow& h) {
    Flow g(ext.emb.dart_count());
    for (ArcId a = 0; a < ext.emb.arc_count(); ++a) {
        ArcId na = gx_map.arc_from_ext[a];
        if (na >= 0) {
            g[fwd_dart(a)] = h[fwd_dart(na)];
            g[bwd_dart(a)] = h[bwd_dart(na)];
        }
    }
    // Split base arcs: renormalize the A/B pair onto the extended darts.
    for (ArcId a = 0; a < gx_map.base_arcs; ++a) {
        const auto& terms = gx_map.arc_terms[a];
        if (terms.size() != 2) continue;
        Rat net = (h[fwd_dart(terms[0].first)] - h[bwd_dart(terms[0].first)]) -
                  (h[fwd_dart(terms[1].first)] - h[bwd_dart(terms[1].first)]);
        if (net.is_positive()) {
            g[fwd_dart(a)] = net;
            g[bwd_dart(a)] = Rat(0);
        } else {
            g[fwd_dart(a)] = Rat(0);
            g[bwd_dart(a)] = -net;
        }
    }
    for (const CollapsedCycle& cc : gx_map.collapsed) {
        const CycleInfo& ci = ext_map.cycles[ext_map.cycle_of[cc.base_vertex]];
        int d = (int)ci.ext_arcs.size();
        std::vector<Rat> demand(d);
        for (int i = 0; i < d; ++i) {
            ArcId ta = cc.toward[i], aa = cc.away[i];
            Rat net_in = (h[fwd_dart(ta)] - h[bwd_dart(ta)]) -
                         (h[fwd_dart(aa)] - h[bwd_dart(aa)]);
            demand[i] = -net_in;
        }
        route_cycle(ext, ci.cycle_arcs, demand, g);
    }
    return g;
}

} // namespace pmf
