#include "pmf/solver_bounded.hpp"

#include "pmf/cycle_cancel.hpp"
#include "pmf/gadgets.hpp"
#include "pmf/maxflow.hpp"
#include "pmf/rounding.hpp"
#include "pmf/saddle.hpp"

namespace pmf {

namespace {

// Greedy walk backward from x to some source along positive in-darts,
// smallest dart first.  Conservation plus acyclicity guarantee arrival.
std::vector<DartId> walk_to_source(const FlowNetwork& net, const Flow& f, VertexId x) {
    std::vector<DartId> darts;
    VertexId cur = x;
    int guard = net.emb.vertex_count() + 1;
    while (!net.is_source(cur)) {
        DartId in = -1;
        for (DartId d : net.emb.out_darts(cur))
            if (f[rev(d)].is_positive()) { in = rev(d); break; }
        if (in < 0 || guard-- <= 0)
            fail(Err::PathNotFound, "no positive path back to a source");
        darts.push_back(in);
        cur = net.emb.tail(in);
    }
    return darts;
}

std::vector<DartId> walk_to_sink(const FlowNetwork& net, const Flow& f, VertexId x) {
    std::vector<DartId> darts;
    VertexId cur = x;
    int guard = net.emb.vertex_count() + 1;
    while (!net.is_sink(cur)) {
        DartId out = -1;
        for (DartId d : net.emb.out_darts(cur))
            if (f[d].is_positive()) { out = d; break; }
        if (out < 0 || guard-- <= 0)
            fail(Err::PathNotFound, "no positive path forward to a sink");
        darts.push_back(out);
        cur = net.emb.head(out);
    }
    return darts;
}

} // namespace

Flow strip_excess(const FlowNetwork& net, const Flow& f) {
    Flow g = f;
    for (VertexId x = 0; x < net.emb.vertex_count(); ++x) {
        Rat ex = excess(net, g, x);
        while (ex.is_positive()) {
            std::vector<DartId> up = walk_to_source(net, g, x);
            std::vector<DartId> down = walk_to_sink(net, g, x);
            Rat delta = ex;
            for (DartId d : up) delta = min(delta, g[d]);
            for (DartId d : down) delta = min(delta, g[d]);
            internal_check(delta.is_positive(), "zero decrement while stripping excess");
            for (DartId d : up) g[d] -= delta;
            for (DartId d : down) g[d] -= delta;
            ex = excess(net, g, x);
        }
    }
    return g;
}

namespace {

void check_saddle_bounds(const FlowNetwork& net, const Flow& f) {
    SaddleReport rep = analyze_saddles(net, f);
    int k = net.terminal_count();
    long long index_sum = 0;
    for (VertexId v : rep.saddles) index_sum += rep.index[v];
    internal_check(index_sum <= k - 2, "saddle index sum exceeds k1+k2-2");
    Rat total(0);
    int infeasible = 0;
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        if (!rep.excess[v].is_positive()) continue;
        ++infeasible;
        total += rep.excess[v];
        internal_check(!net.vcap[v].inf &&
                           rep.excess[v] <= Rat(rep.index[v]) * net.vcap[v].val,
                       "vertex excess exceeds index * capacity");
    }
    internal_check(infeasible <= k - 2, "more than k-2 infeasible vertices");
    internal_check(total <= Rat(k - 2) * net.max_finite_vcap(),
                   "total excess exceeds (k-2) U");
}

} // namespace

Flow solve_bounded(const FlowNetwork& net, SolveStats* stats) {
    GadgetResult ext = build_extended(net);
    Flow fo = max_flow(ext.net);
    fo = cancel_ccw_then_cw(ext.net, ext.map, fo);
    Flow f = restrict_flow(net, ext.map, fo);
    Rat val_ext = flow_value(ext.net, fo);
    if (strict_checks()) {
        internal_check(is_acyclic(net, f), "restriction not acyclic after cancellation");
        check_saddle_bounds(net, f);
    }

    Flow f1 = strip_excess(net, f);
    GadgetResult bar = build_split(net);
    Flow fbar1 = extend_to_split(net, bar.net, bar.map, f1);
    Flow aug = max_flow_residual(bar.net, fbar1);
    if (strict_checks()) {
        Rat aug_value = flow_value(bar.net, aug);
        internal_check(aug_value <= val_ext - flow_value(net, f1),
                       "re-augmentation exceeds the stripped excess");
        internal_check(aug_value <= Rat(net.terminal_count() - 2) * net.max_finite_vcap(),
                       "re-augmentation exceeds (k-2) U");
    }
    Flow fbar = add_flows(fbar1, aug);
    if (net.regime == Regime::Integer) fbar = round_flow(bar.net, fbar);
    fbar = cancel_generic(bar.net, fbar);
    Flow result = restrict_flow(net, bar.map, fbar);
    if (stats) stats->value = flow_value(net, result);
    return result;
}

} // namespace pmf
