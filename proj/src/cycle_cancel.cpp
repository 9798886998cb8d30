#include "pmf/cycle_cancel.hpp"

#include <queue>

namespace pmf {

FacePotential face_potentials(const Embedding& emb, const std::vector<Cap>& lengths) {
    DualGraph dg = dual(emb, lengths);
    int nf = dg.face_count;
    FacePotential pot;
    if (nf == 0) return pot;

    // Dual adjacency: dual arc of dart d runs left(d) -> right(d).
    std::vector<std::vector<DartId>> out(nf);
    for (DartId d = 0; d < (DartId)dg.from.size(); ++d)
        if (dg.from[d] >= 0 && !dg.len[d].inf) out[dg.from[d]].push_back(d);

    std::vector<Cap> dist(nf, Cap::infinite());
    std::vector<char> done(nf, 0);
    using Item = std::pair<Rat, FaceId>;
    auto cmp = [](const Item& a, const Item& b) { return b.first < a.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    FaceId root = emb.outer_face();
    internal_check(root >= 0, "dual distances need a designated outer face");
    dist[root] = Cap(Rat(0));
    pq.push({Rat(0), root});
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (DartId d : out[v]) {
            FaceId w = dg.to[d];
            Cap nd = Cap(dv + dg.len[d].val);
            if (nd < dist[w]) {
                dist[w] = nd;
                pq.push({nd.val, w});
            }
        }
    }
    pot.phi.resize(nf);
    for (FaceId f = 0; f < nf; ++f) {
        internal_check(!dist[f].inf, "face unreachable in the dual graph");
        pot.phi[f] = dist[f].val;
    }
    return pot;
}

Flow potential_circulation(const Embedding& emb, const std::vector<Cap>& lengths,
                           KillResidual kill) {
    Flow g(emb.dart_count());
    if (emb.face_count() == 0) return g;
    if (kill == KillResidual::Clockwise) {
        FacePotential pot = face_potentials(emb, lengths);
        for (DartId d = 0; d < emb.dart_count(); ++d) {
            if (emb.face_of(d) < 0) continue;
            Rat diff = pot.phi[emb.right_face(d)] - pot.phi[emb.left_face(d)];
            if (diff.is_positive()) g[d] = diff;
        }
        return g;
    }
    // Mirror pass: distances over the reversed dual (crossing each dart
    // right-to-left costs its own length), realized by swapping the dart
    // pair lengths, then the flipped potential difference.
    std::vector<Cap> swapped(lengths.size());
    for (DartId d = 0; d < (DartId)lengths.size(); ++d) swapped[d] = lengths[rev(d)];
    FacePotential pot = face_potentials(emb, swapped);
    for (DartId d = 0; d < emb.dart_count(); ++d) {
        if (emb.face_of(d) < 0) continue;
        Rat diff = pot.phi[emb.left_face(d)] - pot.phi[emb.right_face(d)];
        if (diff.is_positive()) g[d] = diff;
    }
    return g;
}

namespace {

// Residual lengths of the planar darts w.r.t. flow f and a capacity function
// that pins base arcs at `pin` and keeps network capacities elsewhere.
std::vector<Cap> pinned_residual(const FlowNetwork& ext, const GadgetMap& map,
                                 const Flow& pin, const Flow& f) {
    int nd = ext.emb.dart_count();
    std::vector<Cap> r(nd, Cap(Rat(0)));
    int base_darts = 2 * map.base_arcs;
    for (DartId d = 0; d < nd; ++d) {
        if (ext.emb.face_of(d) < 0) continue;
        Cap c = d < base_darts ? Cap(pin[d]) : ext.cap[d];
        Cap res = c - f[d] + f[rev(d)];
        if (res.is_negative())
            fail(Err::InfeasibleInput, "negative residual in cycle cancellation");
        r[d] = res;
    }
    return r;
}

Flow one_pass(const FlowNetwork& ext, const GadgetMap& map, const Flow& f,
              KillResidual kill) {
    std::vector<Cap> r = pinned_residual(ext, map, f, f);
    Flow g = potential_circulation(ext.emb, r, kill);
    return add_flows(f, g);
}

} // namespace

Flow cancel_ccw_then_cw(const FlowNetwork& ext, const GadgetMap& map, const Flow& f) {
    Flow f1 = one_pass(ext, map, f, KillResidual::Clockwise);
    Flow f2 = one_pass(ext, map, f1, KillResidual::CounterClockwise);
    if (strict_checks()) {
        for (DartId d = 0; d < 2 * map.base_arcs; ++d)
            internal_check(f2[d] <= f[d], "cancellation increased a base arc");
        internal_check(flow_value(ext, f2) == flow_value(ext, f),
                       "cancellation changed the flow value");
    }
    return f2;
}

} // namespace pmf
