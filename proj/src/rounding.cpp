#include "pmf/rounding.hpp"

namespace pmf {

std::vector<Rat> fractional_residual(const Flow& f) {
    std::vector<Rat> fr(f.size());
    for (DartId d = 0; d < (DartId)f.size(); ++d) {
        Rat delta = f[d].frac();
        if (delta.is_zero()) continue;
        fr[d] = Rat(1) - delta;
        fr[rev(d)] = delta;
    }
    return fr;
}

namespace {

void push_onto(Flow& f, DartId d, const Rat& x) {
    Rat dec = min(x, f[rev(d)]);
    f[rev(d)] -= dec;
    f[d] += x - dec;
}

} // namespace

Flow round_flow(const FlowNetwork& net, const Flow& f) {
    // Cycle saturation preserves every vertex imbalance exactly; it can only
    // terminate with an integral flow if each imbalance is integral to begin
    // with (for a flow of integral value that is automatic).
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        Rat imbalance = out_flow(net, f, v) - in_flow(net, f, v);
        if (!imbalance.is_integer())
            fail(Err::NonIntegralValue, "rounding requires integral vertex imbalances");
    }

    Flow g = f;
    int nd = net.emb.dart_count();
    int guard = net.emb.arc_count() + 1;
    std::vector<int> visit_pos(net.emb.vertex_count(), -1);

    while (guard-- > 0) {
        std::vector<Rat> fr = fractional_residual(g);
        DartId start = -1;
        for (DartId d = 0; d < nd; ++d)
            if (fr[d].is_positive()) { start = d; break; }
        if (start < 0) return g;

        // Walk forward over fractional-residual darts without immediate
        // U-turns.  Any vertex met through a fractional edge touches at
        // least two of them, so the walk closes a cycle within n steps.
        std::vector<DartId> path;
        std::vector<VertexId> verts;
        VertexId cur = net.emb.tail(start);
        visit_pos[cur] = 0;
        verts.push_back(cur);
        std::vector<DartId> cycle;
        while (cycle.empty()) {
            DartId step = -1;
            DartId back = path.empty() ? -1 : rev(path.back());
            for (DartId d : net.emb.out_darts(cur))
                if (d != back && fr[d].is_positive()) { step = d; break; }
            if (step < 0) fail(Err::NoCycle, "fractional residual walk is stuck");
            VertexId nxt = net.emb.head(step);
            path.push_back(step);
            if (visit_pos[nxt] >= 0) {
                cycle.assign(path.begin() + visit_pos[nxt], path.end());
            } else {
                visit_pos[nxt] = (int)verts.size();
                verts.push_back(nxt);
                cur = nxt;
            }
        }
        for (VertexId v : verts) visit_pos[v] = -1;

        Rat b = fr[cycle[0]];
        for (DartId d : cycle)
            if (fr[d] < b) b = fr[d];
        internal_check(b.is_positive(), "zero bottleneck in rounding cycle");
        for (DartId d : cycle) push_onto(g, d, b);
    }
    fail(Err::NoCycle, "rounding did not terminate within the arc bound");
}

} // namespace pmf
