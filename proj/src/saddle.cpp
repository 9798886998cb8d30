#include "pmf/saddle.hpp"

namespace pmf {

namespace {

// Direction labels of the flow-carrying edges around v in rotation order:
// +1 out, -1 in.
std::vector<int> flow_pattern(const FlowNetwork& net, const Flow& f, VertexId v) {
    std::vector<int> pat;
    for (DartId d : net.emb.rotation(v)) {
        if (f[d].is_positive()) pat.push_back(+1);
        else if (f[rev(d)].is_positive()) pat.push_back(-1);
    }
    return pat;
}

int alternations(const std::vector<int>& pat) {
    if (pat.size() < 2) return 0;
    int a = 0;
    for (size_t i = 0; i < pat.size(); ++i)
        if (pat[i] != pat[(i + 1) % pat.size()]) ++a;
    return a;
}

} // namespace

SaddleReport analyze_saddles(const FlowNetwork& net, const Flow& f) {
    if (!is_acyclic(net, f))
        fail(Err::NotAcyclic, "saddle analysis requires an acyclic flow");
    int n = net.emb.vertex_count();
    SaddleReport rep;
    rep.alpha.resize(n);
    rep.index.resize(n);
    rep.excess.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        rep.alpha[v] = net.emb.is_apex(v) ? 0 : alternations(flow_pattern(net, f, v));
        rep.index[v] = rep.alpha[v] / 2 - 1;
        rep.excess[v] = excess(net, f, v);
        if (rep.index[v] >= 1) rep.saddles.push_back(v);
    }
    return rep;
}

bool check_index_identity(const FlowNetwork& net, const Flow& f) {
    // Build the sub-embedding of the positive-flow edges.
    int n = net.emb.vertex_count();
    int m = net.emb.arc_count();
    std::vector<ArcId> keep_id(m, -1);
    std::vector<ArcDef> arcs;
    std::vector<char> flow_dart;  // per kept dart: carries flow in that direction
    for (ArcId a = 0; a < m; ++a) {
        if (!f[fwd_dart(a)].is_positive() && !f[bwd_dart(a)].is_positive()) continue;
        keep_id[a] = (ArcId)arcs.size();
        arcs.push_back({net.emb.tail(fwd_dart(a)), net.emb.head(fwd_dart(a))});
        flow_dart.push_back(f[fwd_dart(a)].is_positive());
        flow_dart.push_back(f[bwd_dart(a)].is_positive());
    }
    std::vector<std::vector<ArcId>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        if (net.emb.is_apex(v)) continue;
        for (DartId d : net.emb.rotation(v))
            if (keep_id[arc_of(d)] >= 0) rot[v].push_back(keep_id[arc_of(d)]);
    }
    Embedding sub(n, arcs, rot, std::vector<char>(n, 0));

    // Component of each flow vertex in the sub-embedding.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (VertexId v0 = 0; v0 < n; ++v0) {
        if (comp[v0] >= 0 || rot[v0].empty()) continue;
        std::vector<VertexId> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (DartId d : sub.rotation(v)) {
                VertexId w = sub.head(d);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp == 0) return true;  // empty flow

    std::vector<long long> esum(ncomp, 0), valpha(ncomp, 0), falpha(ncomp, 0);
    std::vector<long long> vindex(ncomp, 0), findex(ncomp, 0);
    for (ArcId a = 0; a < (int)arcs.size(); ++a) ++esum[comp[arcs[a].tail]];
    for (VertexId v = 0; v < n; ++v) {
        if (comp[v] < 0) continue;
        std::vector<int> pat;
        for (DartId d : sub.rotation(v)) pat.push_back(flow_dart[d] ? +1 : -1);
        int a = alternations(pat);
        valpha[comp[v]] += a;
        vindex[comp[v]] += a / 2 - 1;
    }
    for (FaceId h = 0; h < sub.face_count(); ++h) {
        const auto& boundary = sub.face_darts(h);
        std::vector<int> pat;
        for (DartId d : boundary) pat.push_back(flow_dart[d] ? +1 : -1);
        int a = alternations(pat);
        int c = comp[sub.tail(boundary.front())];
        falpha[c] += a;
        findex[c] += a / 2 - 1;
    }
    for (int c = 0; c < ncomp; ++c) {
        if (2 * esum[c] != valpha[c] + falpha[c]) return false;
        if (vindex[c] + findex[c] != -2) return false;
    }
    return true;
}

} // namespace pmf
