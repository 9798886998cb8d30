#include "pmf/solver_k3.hpp"

#include <algorithm>

#include "pmf/cycle_cancel.hpp"
#include "pmf/maxflow.hpp"
#include "pmf/saddle.hpp"

namespace pmf {

namespace {

FlowNetwork reversed_network(const FlowNetwork& net) {
    FlowNetwork r = net;
    for (ArcId a = 0; a < net.emb.arc_count(); ++a)
        std::swap(r.cap[fwd_dart(a)], r.cap[bwd_dart(a)]);
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        if (r.role[v] == Role::Source) r.role[v] = Role::Sink;
        else if (r.role[v] == Role::Sink) r.role[v] = Role::Source;
    }
    std::swap(r.sources, r.sinks);
    return r;
}

Flow reversed_flow(const Flow& f) {
    Flow r(f.size());
    for (size_t a = 0; a * 2 < f.size(); ++a) {
        r[2 * a] = f[2 * a + 1];
        r[2 * a + 1] = f[2 * a];
    }
    return r;
}

// Sequential maximum flow: saturate s1, then augment from s2 with the
// (s, s1) terminal arc pinned at its current flow.
Flow initial_flow_k3(const FlowNetwork& ext, const GadgetMap& mext) {
    internal_check(mext.source_arcs.size() == 2, "k=3 core expects two sources");
    FlowNetwork first = ext;
    first.cap[fwd_dart(mext.source_arcs[1])] = Cap(Rat(0));
    Flow f1 = max_flow(first);
    FlowNetwork second = ext;
    second.cap[fwd_dart(mext.source_arcs[0])] = Cap(f1[fwd_dart(mext.source_arcs[0])]);
    return max_flow_raw(raw_view(second), &f1);
}

// The two rotation intervals of positive in-flow darts (and of out-flow
// darts) around the unique saddle.  interval[i] is 0 or 1 per rotation slot
// carrying flow, -1 otherwise.
struct SaddleIntervals {
    std::vector<int> slot_interval;  // per rotation slot of x
};

SaddleIntervals saddle_intervals(const FlowNetwork& net, const Flow& f, VertexId x) {
    const auto& rot = net.emb.rotation(x);
    int deg = (int)rot.size();
    std::vector<int> dir(deg, 0);  // +1 out, -1 in, 0 none
    for (int i = 0; i < deg; ++i) {
        if (f[rot[i]].is_positive()) dir[i] = +1;
        else if (f[rev(rot[i])].is_positive()) dir[i] = -1;
    }
    // Rotate to a boundary between runs and count the runs of equal signs.
    int start = -1;
    int prev = 0;
    for (int i = deg - 1; i >= 0; --i)
        if (dir[i] != 0) { prev = dir[i]; break; }
    internal_check(prev != 0, "saddle carries no flow");
    for (int i = 0; i < deg && start < 0; ++i) {
        if (dir[i] == 0) continue;
        if (dir[i] != prev) start = i;
        prev = dir[i];
    }
    if (start < 0) fail(Err::NoSaddle, "flow pattern has a single run");
    SaddleIntervals out;
    out.slot_interval.assign(deg, -1);
    int run = -1;
    int run_sign = 0;
    int in_seen = 0, out_seen = 0;
    for (int k = 0; k < deg; ++k) {
        int i = (start + k) % deg;
        if (dir[i] == 0) continue;
        if (dir[i] != run_sign) {
            ++run;
            run_sign = dir[i];
            if (run_sign < 0) ++in_seen;
            else ++out_seen;
        }
        internal_check(run < 4, "more than four flow runs at the saddle");
        out.slot_interval[i] = (run_sign < 0 ? in_seen : out_seen) - 1;
    }
    internal_check(in_seen == 2 && out_seen == 2, "saddle is not of index one");
    return out;
}

// Residual of the collapsed graph with the section-6 simplifications: the
// supersource and the link removed, forward arcs at x_in/x_out removed, and
// the collapsed endpoints split into two sources and two sinks.
RawNet build_h_k3(const FlowNetwork& gx, const GadgetMap& mx, const Flow& fx,
                  const FlowNetwork& base, const Flow& f, VertexId x) {
    RawNet raw = raw_view(gx);
    for (DartId d = 0; d < raw.dart_count(); ++d)
        raw.cap[d] = raw.cap[d] - fx[d] + fx[rev(d)];

    const CollapsedCycle& cc = mx.collapsed[0];
    raw.cap[fwd_dart(cc.link)] = Cap(Rat(0));
    raw.cap[bwd_dart(cc.link)] = Cap(Rat(0));
    for (ArcId sa : mx.source_arcs) {
        raw.cap[fwd_dart(sa)] = Cap(Rat(0));
        raw.cap[bwd_dart(sa)] = Cap(Rat(0));
    }

    SaddleIntervals iv = saddle_intervals(base, f, x);
    VertexId xin[2] = {raw.n, raw.n + 1};
    VertexId xout[2] = {raw.n + 2, raw.n + 3};
    raw.n += 4;
    for (size_t i = 0; i < cc.toward.size(); ++i) {
        ArcId ta = cc.toward[i], aa = cc.away[i];
        raw.cap[fwd_dart(ta)] = Cap(Rat(0));  // no arcs into x_in
        raw.cap[fwd_dart(aa)] = Cap(Rat(0));  // no arcs out of x_out
        int run = iv.slot_interval[i];
        if (run < 0) continue;  // slot carries no flow; its undo arcs are dead
        if (raw.cap[bwd_dart(ta)].is_positive()) raw.head[ta] = xin[run];
        if (raw.cap[bwd_dart(aa)].is_positive()) raw.tail[aa] = xout[run];
    }
    raw.sources = {xin[0], xin[1]};
    raw.sinks = {xout[0], xout[1]};
    return raw;
}

} // namespace

Rat beta_root(const Rat& s0, const Rat& s1) {
    if (s0 == s1) fail(Err::DegenerateDerivative, "signed excess has zero slope");
    return s0 / (s0 - s1);
}

Flow k3_flow_at_beta(const K3Trace& trace, const Rat& beta) {
    Flow fb = add_flows(trace.fo, scale_flow(beta, trace.go));
    Flow fbo = cancel_ccw_then_cw(trace.ext, trace.ext_map, fb);
    return restrict_flow(trace.base, trace.ext_map, fbo);
}

Flow almost_feasible_fixup(const FlowNetwork& net, const Flow& f, VertexId x,
                           const Rat& delta) {
    if (delta.is_zero()) return f;
    internal_check(net.sources.size() == 2 && net.sinks.size() == 1,
                   "fixup expects two sources and one sink");
    FlowNetwork fg = flow_graph_network(net, f);
    RawNet raw = raw_view(fg);

    Rat v1 = min(out_flow(net, f, net.sources[0]), delta);
    Flow g1(raw.dart_count());
    RawNet r1 = raw;
    r1.sources = {net.sources[0]};
    r1.sinks = {x};
    try {
        if (v1.is_positive()) g1 = fixed_value_flow_raw(r1, v1);
        if (delta > v1) {
            RawNet r2 = raw;
            for (DartId d = 0; d < r2.dart_count(); ++d)
                r2.cap[d] = r2.cap[d] - g1[d] + g1[rev(d)];
            r2.sources = {net.sources[1]};
            r2.sinks = {x};
            Flow g2 = fixed_value_flow_raw(r2, delta - v1);
            g1 = add_flows(g1, g2);
        }
    } catch (const Error& e) {
        if (e.code() == Err::Infeasible)
            fail(Err::FixupShortfall, "cannot route the excess back to the sources");
        throw;
    }
    RawNet r3 = raw;
    r3.sources = {x};
    r3.sinks = {net.sinks[0]};
    Flow g3;
    try {
        g3 = fixed_value_flow_raw(r3, delta);
    } catch (const Error& e) {
        if (e.code() == Err::Infeasible)
            fail(Err::FixupShortfall, "cannot route the excess on to the sink");
        throw;
    }
    for (DartId d = 0; d < raw.dart_count(); ++d)
        internal_check(!(g1[d].is_positive() && g3[d].is_positive()),
                       "fixup paths overlap on an arc");
    Flow out = f;
    for (DartId d = 0; d < raw.dart_count(); ++d) {
        out[d] -= g1[d] + g3[d];
        internal_check(!out[d].is_negative(), "fixup removed more than the flow");
    }
    return out;
}

namespace {

Flow solve_k3_core(const FlowNetwork& net, SolveStats* stats, K3Trace* trace) {
    GadgetResult ext = build_extended(net);
    Flow fo = initial_flow_k3(ext.net, ext.map);
    fo = cancel_ccw_then_cw(ext.net, ext.map, fo);
    Flow f = restrict_flow(net, ext.map, fo);
    if (strict_checks())
        internal_check(is_acyclic(net, f), "initial restriction not acyclic");

    auto finish = [&](const Flow& result) {
        if (stats) stats->value = flow_value(net, result);
        return result;
    };

    std::vector<VertexId> X = infeasible_vertices(net, f);
    if (X.empty()) return finish(f);
    internal_check(X.size() == 1, "more than one infeasible vertex with k=3");
    VertexId x = X[0];

    GadgetResult gx = build_collapsed(ext.net, ext.map, {x});
    Flow fx = collapse_flow(gx.net, gx.map, ext.net, ext.map, fo);
    RawNet h_net = build_h_k3(gx.net, gx.map, fx, net, f, x);
    Flow gh = max_flow_raw(h_net);
    gh = cancel_generic_raw(h_net, gh);
    Flow hx = add_flows(fx, gh);
    Flow ho = extend_collapsed_to_extended(gx.net, gx.map, ext.net, ext.map, hx);
    Flow go = sub_flows(ho, fo);
    if (strict_checks()) {
        internal_check(is_feasible(ext.net, ho),
                       "H flow does not extend feasibly to the extended graph");
        internal_check(flow_value(ext.net, ho) == flow_value(ext.net, fo),
                       "H circulation changed the value");
    }

    Flow f3o = cancel_ccw_then_cw(ext.net, ext.map, ho);
    Flow f3 = restrict_flow(net, ext.map, f3o);

    if (trace) {
        trace->base = net;
        trace->ext = ext.net;
        trace->ext_map = ext.map;
        trace->fo = fo;
        trace->go = go;
        trace->f0 = f;
        trace->f1 = f3;
    }

    std::vector<VertexId> Y = infeasible_vertices(net, f3);
    if (Y.empty()) return finish(f3);
    internal_check(Y.size() == 1, "more than one infeasible vertex after H");
    VertexId y = Y[0];

    if (y == x) {
        if (trace) trace->used_fixup = true;
        Rat delta = excess(net, f3, x);
        Flow fixed = almost_feasible_fixup(net, f3, x, delta);
        if (strict_checks())
            internal_check(is_feasible(net, fixed), "fixup output infeasible");
        return finish(fixed);
    }

    Rat cx = net.vcap[x].val;
    Rat s0 = in_flow(net, f, x) - cx;
    Rat s1 = in_flow(net, f3, x) - cx;
    Rat b0 = beta_root(s0, s1);
    internal_check(!b0.is_negative() && b0 <= Rat(1), "beta root outside [0,1]");
    if (trace) {
        trace->used_interpolation = true;
        trace->beta0 = b0;
    }
    Flow fb = add_flows(fo, scale_flow(b0, go));
    Flow fbo = cancel_ccw_then_cw(ext.net, ext.map, fb);
    Flow result = restrict_flow(net, ext.map, fbo);
    internal_check(is_feasible(net, result), "interpolated flow infeasible");
    return finish(result);
}

} // namespace

Flow solve_k3(const FlowNetwork& net, SolveStats* stats, K3Trace* trace) {
    if (net.terminal_count() != 3)
        fail(Err::WrongTerminalCount, "k=3 solver needs exactly three terminals");
    if (net.sources.size() == 2) return solve_k3_core(net, stats, trace);
    FlowNetwork rev_net = reversed_network(net);
    Flow r = solve_k3_core(rev_net, stats, trace);
    Flow out = reversed_flow(r);
    if (stats) stats->value = flow_value(net, out);
    return out;
}

} // namespace pmf
