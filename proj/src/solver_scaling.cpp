#include "pmf/solver_scaling.hpp"

#include <algorithm>

#include "pmf/cycle_cancel.hpp"
#include "pmf/maxflow.hpp"
#include "pmf/rounding.hpp"

namespace pmf {

namespace {

FlowNetwork with_scaled_caps(const FlowNetwork& net, const Rat& factor) {
    FlowNetwork g = net;
    for (Cap& c : g.cap)
        if (!c.inf) c.val = c.val * factor;
    for (Cap& c : g.vcap)
        if (!c.inf) c.val = c.val * factor;
    return g;
}

int log2_ceil(i128 v) {
    int b = 0;
    i128 p = 1;
    while (p < v) {
        p *= 2;
        ++b;
    }
    return b;
}

// Residual of the collapsed graph w.r.t. h, with the stage-1 overrides: the
// link of x_i removed, overflowing later links relaxed to c(x_j) + ex(f).
RawNet stage1_aux_network(const FlowNetwork& gx, const GadgetMap& mx, const Flow& h,
                          int i, const Rat& exf) {
    RawNet raw = raw_view(gx);
    for (DartId d = 0; d < raw.dart_count(); ++d) {
        Cap c = raw.cap[d];
        Cap res = c - h[d] + h[rev(d)];
        raw.cap[d] = res;
    }
    for (int j = 0; j < (int)mx.collapsed.size(); ++j) {
        const CollapsedCycle& cc = mx.collapsed[j];
        DartId lf = fwd_dart(cc.link), lb = bwd_dart(cc.link);
        Rat cx = gx.cap[lf].val;
        Rat hval = h[lf];
        if (j == i) {
            raw.cap[lf] = Cap(Rat(0));
            raw.cap[lb] = Cap(Rat(0));
        } else if (hval > cx) {
            raw.cap[lf] = Cap(cx + exf - hval);
            raw.cap[lb] = Cap(hval);
        }
    }
    for (DartId d = 0; d < raw.dart_count(); ++d)
        if (raw.cap[d].is_negative())
            fail(Err::Internal, "negative residual outside the relaxed links");
    raw.sources = {mx.collapsed[i].xin};
    raw.sinks = {mx.collapsed[i].xout};
    return raw;
}

void check_stage1_invariant(const FlowNetwork& base, const FlowNetwork& gx,
                            const GadgetMap& mx, const Flow& h,
                            const std::vector<VertexId>& X, int done, const Rat& exf) {
    Flow hr = restrict_flow(base, mx, h);
    for (int j = 0; j < (int)X.size(); ++j) {
        Rat e = excess(base, hr, X[j]);
        if (j <= done) internal_check(e.is_zero(), "excess left on a processed vertex");
        else internal_check(e <= exf, "excess above ex(f) on a later vertex");
    }
    std::vector<char> in_x(base.emb.vertex_count(), 0);
    for (VertexId x : X) in_x[x] = 1;
    Rat cap_other = Rat(done + 1) * exf;
    for (VertexId v = 0; v < base.emb.vertex_count(); ++v)
        if (!in_x[v])
            internal_check(excess(base, hr, v) <= cap_other,
                           "excess above i * ex(f) off the infeasible set");
    (void)gx;
}

} // namespace

Flow improve_stage1(const FlowNetwork& base, const FlowNetwork& ext,
                    const GadgetMap& ext_map, const Flow& f,
                    const std::vector<VertexId>& X, const Rat& exf) {
    GadgetResult gx = build_collapsed(ext, ext_map, X);
    Flow h = collapse_flow(gx.net, gx.map, ext, ext_map, f);
    for (int i = 0; i < (int)X.size(); ++i) {
        const CollapsedCycle& cc = gx.map.collapsed[i];
        Rat cx = gx.net.cap[fwd_dart(cc.link)].val;
        Rat over = h[fwd_dart(cc.link)] - cx;
        if (!over.is_positive()) continue;
        RawNet aux = stage1_aux_network(gx.net, gx.map, h, i, exf);
        Flow phi;
        try {
            phi = fixed_value_flow_raw(aux, over);
        } catch (const Error& e) {
            if (e.code() == Err::Infeasible)
                fail(Err::StageFailure, "stage 1 cannot clear the excess (guess too high)");
            throw;
        }
        phi = cancel_generic_raw(aux, phi);
        phi[bwd_dart(cc.link)] = over;  // close the circulation through x_i
        h = add_flows(h, phi);
        if (strict_checks())
            check_stage1_invariant(base, gx.net, gx.map, h, X, i, exf);
    }
    Flow ho = extend_collapsed_to_extended(gx.net, gx.map, ext, ext_map, h);
    Flow go = sub_flows(ho, f);
    if (strict_checks()) {
        Flow fr = restrict_flow(base, ext_map, ho);
        for (VertexId x : X)
            internal_check(excess(base, fr, x).is_zero(),
                           "stage 1 left excess on the infeasible set");
        int k = base.terminal_count();
        for (VertexId v = 0; v < base.emb.vertex_count(); ++v)
            internal_check(excess(base, fr, v) <= Rat(k - 2) * exf,
                           "stage 1 excess bound violated");
        internal_check(is_feasible(ext, ho), "stage 1 output infeasible in the extended graph");
    }
    return go;
}

Flow improve_stage2(const FlowNetwork& ext, const Flow& g, int k) {
    return round_flow(ext, scale_flow(Rat(i128(1), i128(k)), g));
}

namespace {
std::vector<ImprovePhaseLog>* improve_log = nullptr;
} // namespace

void set_improve_log(std::vector<ImprovePhaseLog>* sink) { improve_log = sink; }

Flow improve(const FlowNetwork& base, const FlowNetwork& ext, const GadgetMap& ext_map,
             const Flow& f, long long* iteration_counter) {
    if (iteration_counter) ++*iteration_counter;
    Flow fr = restrict_flow(base, ext_map, f);
    std::vector<VertexId> X = infeasible_vertices(base, fr);
    int k = base.terminal_count();
    internal_check((int)X.size() <= k - 2, "more than k-2 infeasible vertices");
    Rat exf = max_excess(base, fr);
    Flow go = improve_stage1(base, ext, ext_map, f, X, exf);
    Flow gk = improve_stage2(ext, go, k);
    Flow f1 = add_flows(f, gk);
    if (strict_checks()) {
        internal_check(is_feasible(ext, f1), "stage 2 output infeasible in the extended graph");
        Flow f1r = restrict_flow(base, ext_map, f1);
        Rat bound = Rat(i128(k - 1), i128(k)) * exf + Rat(base.max_degree());
        for (VertexId v = 0; v < base.emb.vertex_count(); ++v)
            internal_check(excess(base, f1r, v) <= bound,
                           "stage 2 contraction bound violated");
        internal_check(flow_value(ext, f1) == flow_value(ext, f),
                       "improvement changed the flow value");
    }
    Flow out = cancel_ccw_then_cw(ext, ext_map, f1);
    if (improve_log) {
        Flow outr = restrict_flow(base, ext_map, out);
        improve_log->push_back({exf, max_excess(base, outr), k, base.max_degree()});
    }
    return out;
}

namespace {

struct TryOutcome {
    bool accepted = false;
    Flow bar_flow;  // on the doubled split graph, when accepted
};

TryOutcome try_value(const FlowNetwork& g2, const FlowNetwork& ext, const GadgetMap& mext,
                     const FlowNetwork& bar, const GadgetMap& mbar, const Rat& lam2,
                     long long iter_cap, SolveStats* stats) {
    TryOutcome out;
    Flow fo;
    try {
        fo = fixed_value_flow(ext, lam2);
    } catch (const Error& e) {
        if (e.code() == Err::Infeasible) return out;
        throw;
    }
    fo = cancel_ccw_then_cw(ext, mext, fo);

    Rat threshold = Rat(2 * g2.terminal_count() * g2.max_degree());
    long long iters = 0;
    try {
        while (true) {
            Flow fr = restrict_flow(g2, mext, fo);
            if (!(max_excess(g2, fr) > threshold)) break;
            if (iters >= iter_cap)
                fail(Err::Internal, "improvement loop exceeded its iteration bound");
            fo = improve(g2, ext, mext, fo, &iters);
        }
    } catch (const Error& e) {
        if (e.code() == Err::StageFailure || e.code() == Err::ExtensionFailure) {
            if (stats) {
                stats->improve_iterations += iters;
                stats->max_guess_iterations = std::max(stats->max_guess_iterations, iters);
            }
            return out;
        }
        throw;
    }
    if (stats) {
        stats->improve_iterations += iters;
        stats->max_guess_iterations = std::max(stats->max_guess_iterations, iters);
    }

    // Phase 3 on the lambda-stubbed split graph: strip, extend, re-augment.
    Flow fr = restrict_flow(g2, mext, fo);
    Flow f1 = strip_excess(g2, fr);
    Flow fbar1 = extend_to_split(g2, bar, mbar, f1);
    RawNet raw = raw_view(bar);
    VertexId stub = raw.n++;
    ArcId stub_arc = raw.add_arc(stub, mbar.super_s, Cap(lam2));
    raw.sources = {stub};
    Flow base_flow = fbar1;
    base_flow.push_back(flow_value(g2, f1));
    base_flow.push_back(Rat(0));
    Flow total = max_flow_raw(raw, &base_flow);
    if (total[fwd_dart(stub_arc)] == lam2) {
        out.accepted = true;
        total.resize(bar.emb.dart_count());
        out.bar_flow = std::move(total);
    }
    return out;
}

} // namespace

bool scaling_accepts(const FlowNetwork& net, long long lambda) {
    FlowNetwork g2 = with_scaled_caps(net, Rat(2));
    GadgetResult ext = build_extended(g2);
    GadgetResult bar2 = build_split(g2);
    int k = net.terminal_count();
    Rat u = net.max_finite_vcap();
    i128 ku = k * (u.is_zero() ? i128(1) : u.num);
    long long iter_cap = 8LL * k * (log2_ceil(ku) + 2);
    return try_value(g2, ext.net, ext.map, bar2.net, bar2.map, Rat(2 * lambda), iter_cap,
                     nullptr)
        .accepted;
}

Flow solve_scaling(const FlowNetwork& net, SolveStats* stats) {
    if (net.regime != Regime::Integer)
        fail(Err::ParamError, "the scaling solver needs integer capacities");

    // All phases run on a doubled copy so the extended graph has integer
    // capacities throughout; the accepted flow is halved at the end.
    FlowNetwork g2 = with_scaled_caps(net, Rat(2));
    GadgetResult ext = build_extended(g2);
    GadgetResult bar2 = build_split(g2);

    int k = net.terminal_count();
    Rat u = net.max_finite_vcap();
    i128 ku = k * (u.is_zero() ? i128(1) : u.num);
    long long iter_cap = 8LL * k * (log2_ceil(ku) + 2);
    if (stats) stats->iteration_bound = iter_cap;

    Flow fmax = max_flow(ext.net);
    i128 hi = (flow_value(ext.net, fmax) * Rat(i128(1), i128(2))).floor();
    i128 lo = 0;
    Flow best_bar(bar2.net.emb.dart_count());
    while (lo < hi) {
        i128 mid = lo + (hi - lo + 1) / 2;
        if (stats) ++stats->guesses;
        TryOutcome r = try_value(g2, ext.net, ext.map, bar2.net, bar2.map,
                                 Rat(2 * mid), iter_cap, stats);
        if (r.accepted) {
            lo = mid;
            best_bar = std::move(r.bar_flow);
        } else {
            hi = mid - 1;
        }
    }

    // Halve back to original units, round to an integer flow, drop cycles.
    GadgetResult bar = build_split(net);
    Flow fbar = scale_flow(Rat(i128(1), i128(2)), best_bar);
    fbar = round_flow(bar.net, fbar);
    fbar = cancel_generic(bar.net, fbar);
    Flow result = restrict_flow(net, bar.map, fbar);
    if (stats) stats->value = flow_value(net, result);
    return result;
}

} // namespace pmf
