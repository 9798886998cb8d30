#include "pmf/maxflow.hpp"

#include <algorithm>
#include <deque>

namespace pmf {

RawNet raw_view(const FlowNetwork& net) {
    RawNet r;
    r.n = net.emb.vertex_count();
    int m = net.emb.arc_count();
    r.tail.resize(m);
    r.head.resize(m);
    for (ArcId a = 0; a < m; ++a) {
        r.tail[a] = net.emb.tail(fwd_dart(a));
        r.head[a] = net.emb.head(fwd_dart(a));
    }
    r.cap = net.cap;
    r.sources = net.sources;
    r.sinks = net.sinks;
    return r;
}

namespace {

class Dinic {
public:
    Dinic(const RawNet& net, const Flow* base) : net_(net) {
        f_ = base ? *base : Flow(net.dart_count());
        internal_check((int)f_.size() == net.dart_count(), "base flow size mismatch");
        adj_.assign(net.n, {});
        for (DartId d = 0; d < net.dart_count(); ++d)
            adj_[net.dart_tail(d)].push_back(d);
        is_sink_.assign(net.n, 0);
        for (VertexId t : net.sinks) is_sink_[t] = 1;
        level_.assign(net.n, -1);
        it_.assign(net.n, 0);
    }

    Flow run() {
        while (bfs()) {
            std::fill(it_.begin(), it_.end(), 0);
            for (VertexId s : net_.sources)
                while (dfs(s, Cap::infinite()).is_positive()) {}
        }
        return std::move(f_);
    }

private:
    Cap residual(DartId d) const { return net_.cap[d] - f_[d] + f_[rev(d)]; }

    void push(DartId d, const Rat& x) {
        Rat dec = min(x, f_[rev(d)]);
        f_[rev(d)] -= dec;
        f_[d] += x - dec;
    }

    bool bfs() {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<VertexId> q;
        for (VertexId s : net_.sources) {
            level_[s] = 0;
            q.push_back(s);
        }
        bool reached = false;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            for (DartId d : adj_[v]) {
                VertexId w = net_.dart_head(d);
                if (level_[w] >= 0 || !residual(d).is_positive()) continue;
                level_[w] = level_[v] + 1;
                if (is_sink_[w]) reached = true;
                q.push_back(w);
            }
        }
        return reached;
    }

    Rat dfs(VertexId v, Cap limit) {
        if (is_sink_[v]) {
            if (limit.inf) fail(Err::UnboundedFlow, "augmenting path with infinite capacity");
            return limit.val;
        }
        for (int& i = it_[v]; i < (int)adj_[v].size(); ++i) {
            DartId d = adj_[v][i];
            VertexId w = net_.dart_head(d);
            if (level_[w] != level_[v] + 1) continue;
            Cap r = residual(d);
            if (!r.is_positive()) continue;
            Rat got = dfs(w, min(limit, r));
            if (got.is_positive()) {
                push(d, got);
                return got;
            }
        }
        level_[v] = -1;
        return Rat(0);
    }

    const RawNet& net_;
    Flow f_;
    std::vector<std::vector<DartId>> adj_;
    std::vector<char> is_sink_;
    std::vector<int> level_;
    std::vector<int> it_;
};

void check_no_vertex_caps(const FlowNetwork& net) {
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v)
        internal_check(net.vcap[v].inf || net.is_terminal(v),
                       "max flow called on a vertex-capacitated network");
}

} // namespace

Flow max_flow_raw(const RawNet& net, const Flow* base) {
    return Dinic(net, base).run();
}

Flow max_flow(const FlowNetwork& net) {
    check_no_vertex_caps(net);
    return max_flow_raw(raw_view(net));
}

Flow max_flow_residual(const FlowNetwork& net, const Flow& base) {
    check_no_vertex_caps(net);
    Flow total = max_flow_raw(raw_view(net), &base);
    return sub_flows(total, base);
}

Flow fixed_value_flow_raw(const RawNet& net, const Rat& value) {
    if (value.is_negative()) fail(Err::ParamError, "negative target value");
    internal_check(net.sources.size() == 1, "fixed-value flow needs a single source");
    RawNet stubbed = net;
    VertexId sstub = stubbed.n++;
    ArcId sa = stubbed.add_arc(sstub, net.sources[0], Cap(value));
    stubbed.sources = {sstub};
    if (net.sinks.size() == 1) {
        VertexId tstub = stubbed.n++;
        stubbed.add_arc(net.sinks[0], tstub, Cap(value));
        stubbed.sinks = {tstub};
    }
    Flow f = max_flow_raw(stubbed);
    if (f[fwd_dart(sa)] != value)
        fail(Err::Infeasible, "network cannot carry the requested value");
    f.resize(net.dart_count());
    return f;
}

Flow fixed_value_flow(const FlowNetwork& net, const Rat& value) {
    check_no_vertex_caps(net);
    return fixed_value_flow_raw(raw_view(net), value);
}

Flow saturate_demands(const RawNet& net, const std::vector<Rat>& demand) {
    internal_check((int)demand.size() == net.n, "demand vector size mismatch");
    Rat total(0);
    for (const Rat& d : demand) total += d;
    internal_check(total.is_zero(), "demands do not sum to zero");

    RawNet stubbed = net;
    stubbed.sources.clear();
    stubbed.sinks.clear();
    Rat want(0);
    bool any = false;
    std::vector<ArcId> sink_stubs;
    for (VertexId v = 0; v < net.n; ++v) {
        if (demand[v].is_zero()) continue;
        any = true;
        VertexId nv = stubbed.n++;
        if (demand[v].is_negative()) {
            stubbed.add_arc(nv, v, Cap(-demand[v]));
            stubbed.sources.push_back(nv);
        } else {
            sink_stubs.push_back(stubbed.add_arc(v, nv, Cap(demand[v])));
            stubbed.sinks.push_back(nv);
            want += demand[v];
        }
    }
    if (!any) return Flow(net.dart_count());
    Flow f = max_flow_raw(stubbed);
    Rat got(0);
    for (ArcId a : sink_stubs) got += f[fwd_dart(a)];
    if (got != want)
        fail(Err::ExtensionFailure, "demand stubs could not be saturated");
    f = cancel_generic_raw(stubbed, f);
    f.resize(net.dart_count());
    return f;
}

namespace {

// One positive-flow cycle, or empty.
std::vector<DartId> find_flow_cycle(const RawNet& net,
                                    const std::vector<std::vector<DartId>>& adj,
                                    const Flow& f) {
    std::vector<int> state(net.n, 0);
    std::vector<int> parent(net.n, -1);  // dart used to enter
    std::vector<std::pair<VertexId, size_t>> stack;
    for (VertexId v0 = 0; v0 < net.n; ++v0) {
        if (state[v0]) continue;
        state[v0] = 1;
        stack.push_back({v0, 0});
        while (!stack.empty()) {
            VertexId v = stack.back().first;
            bool pushed = false;
            while (stack.back().second < adj[v].size()) {
                DartId d = adj[v][stack.back().second++];
                if (!f[d].is_positive()) continue;
                VertexId w = net.dart_head(d);
                if (state[w] == 1) {
                    std::vector<DartId> cyc{d};
                    for (VertexId u = v; u != w; u = net.dart_tail(parent[u]))
                        cyc.push_back(parent[u]);
                    std::reverse(cyc.begin(), cyc.end());
                    return cyc;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = d;
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
    return {};
}

} // namespace

Flow cancel_generic_raw(const RawNet& net, const Flow& f) {
    std::vector<std::vector<DartId>> adj(net.n);
    for (DartId d = 0; d < net.dart_count(); ++d)
        adj[net.dart_tail(d)].push_back(d);
    Flow g = f;
    while (true) {
        std::vector<DartId> cyc = find_flow_cycle(net, adj, g);
        if (cyc.empty()) break;
        Rat b = g[cyc[0]];
        for (DartId d : cyc)
            if (g[d] < b) b = g[d];
        for (DartId d : cyc) g[d] -= b;
    }
    return g;
}

Flow cancel_generic(const FlowNetwork& net, const Flow& f) {
    return cancel_generic_raw(raw_view(net), f);
}

Flow acyclic_max_flow(const FlowNetwork& net) {
    return cancel_generic(net, max_flow(net));
}

} // namespace pmf
