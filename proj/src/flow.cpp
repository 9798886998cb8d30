#include "pmf/flow.hpp"

#include <algorithm>

namespace pmf {

Rat in_flow(const FlowNetwork& net, const Flow& f, VertexId v) {
    Rat s(0);
    for (DartId d : net.emb.out_darts(v)) s += f[rev(d)];
    return s;
}

Rat out_flow(const FlowNetwork& net, const Flow& f, VertexId v) {
    Rat s(0);
    for (DartId d : net.emb.out_darts(v)) s += f[d];
    return s;
}

bool conserves(const FlowNetwork& net, const Flow& f) {
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        if (net.is_terminal(v)) continue;
        if (in_flow(net, f, v) != out_flow(net, f, v)) return false;
    }
    return true;
}

Rat flow_value(const FlowNetwork& net, const Flow& f) {
    if (!conserves(net, f))
        fail(Err::ConservationViolation, "flow does not conserve at a non-terminal");
    Rat v(0);
    for (VertexId s : net.sources) v += out_flow(net, f, s);
    return v;
}

Rat excess(const FlowNetwork& net, const Flow& f, VertexId v) {
    if (net.is_terminal(v) || net.vcap[v].inf) return Rat(0);
    Rat e = in_flow(net, f, v) - net.vcap[v].val;
    return e.is_positive() ? e : Rat(0);
}

Rat max_excess(const FlowNetwork& net, const Flow& f) {
    Rat m(0);
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        Rat e = excess(net, f, v);
        if (e > m) m = e;
    }
    return m;
}

std::vector<VertexId> infeasible_vertices(const FlowNetwork& net, const Flow& f) {
    std::vector<VertexId> xs;
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v)
        if (excess(net, f, v).is_positive()) xs.push_back(v);
    return xs;
}

std::vector<Cap> residual_caps(const FlowNetwork& net, const Flow& f) {
    int nd = net.emb.dart_count();
    std::vector<Cap> r(nd);
    for (DartId d = 0; d < nd; ++d) {
        if (!(f[d] <= net.cap[d]))
            fail(Err::InfeasibleInput, "flow exceeds an arc capacity");
        r[d] = net.cap[d] - f[d] + f[rev(d)];
    }
    return r;
}

Flow add_flows(const Flow& f, const Flow& g) {
    internal_check(f.size() == g.size(), "flow size mismatch in add");
    Flow out(f.size());
    for (size_t a = 0; a * 2 < f.size(); ++a) {
        DartId d = (DartId)(2 * a);
        Rat net = (f[d] + g[d]) - (f[d + 1] + g[d + 1]);
        if (net.is_positive()) out[d] = net;
        else out[d + 1] = -net;
    }
    return out;
}

Flow sub_flows(const Flow& f, const Flow& g) {
    internal_check(f.size() == g.size(), "flow size mismatch in sub");
    Flow out(f.size());
    for (size_t a = 0; a * 2 < f.size(); ++a) {
        DartId d = (DartId)(2 * a);
        Rat net = (f[d] - f[d + 1]) - (g[d] - g[d + 1]);
        if (net.is_positive()) out[d] = net;
        else out[d + 1] = -net;
    }
    return out;
}

Flow scale_flow(const Rat& c, const Flow& f) {
    if (c.is_negative()) fail(Err::NegativeScalar, "scale factor below zero");
    Flow out(f.size());
    for (size_t d = 0; d < f.size(); ++d) out[d] = c * f[d];
    return out;
}

FeasibilityReport check_feasible(const FlowNetwork& net, const Flow& f) {
    FeasibilityReport rep;
    auto add = [&](Violation::Kind k, int id, Rat m) {
        rep.ok = false;
        rep.violations.push_back({k, id, m});
    };
    for (DartId d = 0; d < net.emb.dart_count(); ++d) {
        if (f[d].is_negative()) add(Violation::Negative, d, -f[d]);
        if (!(f[d] <= net.cap[d])) add(Violation::ArcCap, d, f[d] - net.cap[d].val);
    }
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) {
        if (!net.is_terminal(v)) {
            Rat in = in_flow(net, f, v), out = out_flow(net, f, v);
            if (in != out) add(Violation::Conservation, v, abs(in - out));
            Rat e = excess(net, f, v);
            if (e.is_positive()) add(Violation::VertexCap, v, e);
        }
    }
    return rep;
}

namespace {

// Smallest positive out-dart at v, or -1.
DartId first_positive(const FlowNetwork& net, const Flow& f, VertexId v) {
    for (DartId d : net.emb.out_darts(v))
        if (f[d].is_positive()) return d;
    return -1;
}

void subtract_component(Flow& f, const std::vector<DartId>& darts, const Rat& amt) {
    for (DartId d : darts) f[d] -= amt;
}

Rat bottleneck(const Flow& f, const std::vector<DartId>& darts) {
    Rat b = f[darts[0]];
    for (DartId d : darts)
        if (f[d] < b) b = f[d];
    return b;
}

} // namespace

std::vector<FlowComponent> decompose(const FlowNetwork& net, const Flow& f) {
    Flow rem = f;
    std::vector<FlowComponent> comps;
    std::vector<int> pos_in_path(net.emb.vertex_count(), -1);

    auto walk_from = [&](VertexId start) {
        std::vector<DartId> path;
        std::vector<VertexId> verts{start};
        pos_in_path[start] = 0;
        VertexId cur = start;
        while (true) {
            DartId d = first_positive(net, rem, cur);
            if (d < 0) break;
            VertexId nxt = net.emb.head(d);
            path.push_back(d);
            if (pos_in_path[nxt] >= 0) {
                // Found a cycle; peel it off and continue from nxt.
                int at = pos_in_path[nxt];
                std::vector<DartId> cyc(path.begin() + at, path.end());
                Rat b = bottleneck(rem, cyc);
                subtract_component(rem, cyc, b);
                comps.push_back({true, std::move(cyc), b});
                for (size_t i = at + 1; i < verts.size(); ++i) pos_in_path[verts[i]] = -1;
                path.resize(at);
                verts.resize(at + 1);
                cur = nxt;
                continue;
            }
            pos_in_path[nxt] = (int)verts.size();
            verts.push_back(nxt);
            cur = nxt;
        }
        if (!path.empty()) {
            Rat b = bottleneck(rem, path);
            subtract_component(rem, path, b);
            comps.push_back({false, std::move(path), b});
        }
        for (VertexId v : verts) pos_in_path[v] = -1;
    };

    for (VertexId s : net.sources)
        while (first_positive(net, rem, s) >= 0) walk_from(s);

    // Whatever remains is circulation; peel cycles.
    for (DartId d0 = 0; d0 < net.emb.dart_count(); ++d0)
        while (rem[d0].is_positive()) walk_from(net.emb.tail(d0));

    return comps;
}

bool is_acyclic(const FlowNetwork& net, const Flow& f) {
    int n = net.emb.vertex_count();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<VertexId, size_t>> stack;
    for (VertexId v0 = 0; v0 < n; ++v0) {
        if (state[v0]) continue;
        stack.push_back({v0, 0});
        state[v0] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back().first;
            const auto& outs = net.emb.out_darts(v);
            bool pushed = false;
            while (stack.back().second < outs.size()) {
                DartId d = outs[stack.back().second++];
                if (!f[d].is_positive()) continue;
                VertexId w = net.emb.head(d);
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                    pushed = true;
                    break;
                }
            }
            if (!pushed) {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

FlowNetwork flow_graph_network(const FlowNetwork& net, const Flow& f) {
    FlowNetwork g = net;
    for (DartId d = 0; d < net.emb.dart_count(); ++d) g.cap[d] = Cap(f[d]);
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v) g.vcap[v] = Cap::infinite();
    return g;
}

} // namespace pmf
