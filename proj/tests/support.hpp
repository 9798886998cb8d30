#pragma once

#include <vector>

#include "pmf/flow.hpp"
#include "pmf/instance.hpp"

namespace pmftest {

using namespace pmf;

struct ArcSpec {
    VertexId tail, head;
    Cap cf;
    Cap cb = Cap(Rat(0));
};

// Network without an embedding (every vertex an apex); enough for flow
// arithmetic and max-flow tests.
inline FlowNetwork abstract_net(int n, const std::vector<ArcSpec>& arcs,
                                const std::vector<VertexId>& sources,
                                const std::vector<VertexId>& sinks,
                                const std::vector<std::pair<VertexId, Cap>>& vcaps = {}) {
    NetworkBuilder b;
    for (int v = 0; v < n; ++v) b.add_vertex(Cap::infinite(), Role::None, true);
    for (const ArcSpec& a : arcs) b.add_arc(a.tail, a.head, a.cf, a.cb);
    FlowNetwork net = b.build();
    for (VertexId s : sources) net.role[s] = Role::Source;
    for (VertexId t : sinks) net.role[t] = Role::Sink;
    net.sources = sources;
    net.sinks = sinks;
    for (auto& [v, c] : vcaps) net.vcap[v] = c;
    return net;
}

struct PlanarSpec {
    int n;
    std::vector<ArcSpec> arcs;
    std::vector<std::vector<ArcId>> rotations;
    std::vector<VertexId> sources, sinks;
    std::vector<std::pair<VertexId, Cap>> vcaps;
    DartId outer = -1;
};

inline FlowNetwork planar_net(const PlanarSpec& s) {
    NetworkBuilder b;
    std::vector<Role> role(s.n, Role::None);
    for (VertexId v : s.sources) role[v] = Role::Source;
    for (VertexId v : s.sinks) role[v] = Role::Sink;
    std::vector<Cap> vc(s.n, Cap::infinite());
    for (auto& [v, c] : s.vcaps) vc[v] = c;
    for (int v = 0; v < s.n; ++v) b.add_vertex(vc[v], role[v]);
    for (const ArcSpec& a : s.arcs) b.add_arc(a.tail, a.head, a.cf, a.cb);
    for (int v = 0; v < s.n; ++v) b.set_rotation(v, s.rotations[v]);
    b.set_outer(s.outer);
    return b.build();
}

// Directed triangle 0->1->2->0 with clockwise rotations; two faces.
inline PlanarSpec triangle_spec(Cap c01 = Cap(Rat(1)), Cap c12 = Cap(Rat(1)),
                                Cap c20 = Cap(Rat(1))) {
    PlanarSpec s;
    s.n = 3;
    s.arcs = {{0, 1, c01}, {1, 2, c12}, {2, 0, c20}};
    s.rotations = {{0, 2}, {0, 1}, {1, 2}};
    return s;
}

// K4: outer triangle 0,1,2 (counterclockwise in the drawing) and center 3.
inline PlanarSpec k4_spec() {
    PlanarSpec s;
    s.n = 4;
    s.arcs = {{0, 1, Cap(Rat(1))}, {1, 2, Cap(Rat(1))}, {2, 0, Cap(Rat(1))},
              {0, 3, Cap(Rat(1))}, {1, 3, Cap(Rat(1))}, {2, 3, Cap(Rat(1))}};
    s.rotations = {{0, 2, 3}, {0, 4, 1}, {1, 5, 2}, {4, 3, 5}};
    return s;
}

// Independent max-flow oracle: matrix-based augmenting paths, nothing shared
// with the library engine.
Rat naive_max_flow(std::vector<std::vector<Rat>> cap, const std::vector<int>& sources,
                   const std::vector<int>& sinks);

// Exhaustive minimum s-t cut by subset enumeration (n <= ~16).
Rat enumerated_min_cut(const std::vector<std::vector<Rat>>& cap,
                       const std::vector<int>& sources, const std::vector<int>& sinks);

// Adjacency-matrix view of a network's arc capacities; infinite capacities
// become `huge` (callers pick something above any possible flow).
std::vector<std::vector<Rat>> cap_matrix(const FlowNetwork& net, const Rat& huge);

// Independent vertex-capacitated max flow: test-local split graph plus the
// naive matrix solver.
Rat naive_vertex_capacitated_value(const FlowNetwork& net);

// Deterministic feasible flow of roughly `fraction` of the maximum value in
// the extended graph of `net` (used to fuzz cancellation and rounding).
} // namespace pmftest
