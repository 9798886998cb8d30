#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "pmf/cycle_cancel.hpp"
#include "pmf/maxflow.hpp"

using namespace pmf;
using namespace pmftest;

namespace {

// Exhaustive simple-cycle search over positive-capacity darts; reports
// whether some cycle of the asked orientation exists.  Orientation is
// decided by which side of the cycle contains the outer face.
bool has_residual_cycle(const Embedding& emb, const std::vector<Cap>& caps,
                        bool clockwise) {
    int nd = emb.dart_count();
    std::vector<DartId> stack;
    std::vector<char> on_vertex(emb.vertex_count(), 0);

    // Enumerate simple cycles by DFS over darts (tiny graphs only).
    std::vector<std::vector<DartId>> cycles;
    std::vector<DartId> path;
    auto orientation_is_clockwise = [&](const std::vector<DartId>& cyc) {
        // Faces reachable from the outer face in the dual without crossing
        // the cycle form the outside; a clockwise cycle (y-up drawing) has
        // its left faces on the outside.
        std::vector<char> crossed(nd, 0);
        for (DartId d : cyc) crossed[d] = crossed[rev(d)] = 1;
        std::vector<char> outside(emb.face_count(), 0);
        std::vector<FaceId> q{emb.outer_face()};
        outside[emb.outer_face()] = 1;
        while (!q.empty()) {
            FaceId h = q.back();
            q.pop_back();
            for (DartId d = 0; d < nd; ++d) {
                if (emb.face_of(d) != h || crossed[d]) continue;
                FaceId o = emb.right_face(d);
                if (!outside[o]) {
                    outside[o] = 1;
                    q.push_back(o);
                }
            }
        }
        return outside[emb.left_face(cyc.front())] != 0;
    };
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId cur) {
        for (DartId d = 0; d < nd; ++d) {
            if (emb.tail(d) != cur || emb.face_of(d) < 0 || !caps[d].is_positive())
                continue;
            if (!path.empty() && d == rev(path.back())) continue;  // no edge reuse
            VertexId w = emb.head(d);
            if (w == start) {
                path.push_back(d);
                if (path.size() > 1) cycles.push_back(path);
                path.pop_back();
                continue;
            }
            if (on_vertex[w] || w < start) continue;  // canonical: min vertex first
            on_vertex[w] = 1;
            path.push_back(d);
            dfs(start, w);
            path.pop_back();
            on_vertex[w] = 0;
        }
    };
    for (VertexId v = 0; v < emb.vertex_count(); ++v) {
        on_vertex[v] = 1;
        dfs(v, v);
        on_vertex[v] = 0;
    }
    for (const auto& cyc : cycles)
        if (orientation_is_clockwise(cyc) == clockwise) return true;
    return false;
}

} // namespace

TEST_CASE("triangle potentials route the minimum around the inner face") {
    // Hand-computed: Phi(inner) = min over the three darts whose left face
    // is the outer one; the circulation uses exactly those darts.
    FlowNetwork net = planar_net(triangle_spec(Cap(Rat(5)), Cap(Rat(7)), Cap(Rat(3))));
    std::vector<Cap> len(net.emb.dart_count());
    len[fwd_dart(0)] = Cap(Rat(5));
    len[bwd_dart(0)] = Cap(Rat(5));
    len[fwd_dart(1)] = Cap(Rat(7));
    len[bwd_dart(1)] = Cap(Rat(7));
    len[fwd_dart(2)] = Cap(Rat(3));
    len[bwd_dart(2)] = Cap(Rat(3));
    FacePotential pot = face_potentials(net.emb, len);
    FaceId outer = net.emb.outer_face();
    FaceId inner = 1 - outer;
    CHECK(pot.phi[outer] == Rat(0));
    CHECK(pot.phi[inner] == Rat(3));

    Flow g = potential_circulation(net.emb, len, KillResidual::Clockwise);
    // The three darts with the outer face on their left carry Phi(inner).
    for (DartId d = 0; d < net.emb.dart_count(); ++d) {
        if (net.emb.left_face(d) == outer) CHECK(g[d] == Rat(3));
        else CHECK(g[d] == Rat(0));
    }
    // It is a circulation and respects the lengths as capacities.
    for (VertexId v = 0; v < 3; ++v)
        CHECK(in_flow(net, g, v) == out_flow(net, g, v));
    for (DartId d = 0; d < net.emb.dart_count(); ++d) CHECK(g[d] <= len[d]);
    // No clockwise residual cycle w.r.t. the lengths remains.
    std::vector<Cap> res(net.emb.dart_count());
    for (DartId d = 0; d < net.emb.dart_count(); ++d)
        res[d] = len[d] - g[d] + g[rev(d)];
    CHECK(!has_residual_cycle(net.emb, res, true));
    CHECK(has_residual_cycle(net.emb, res, false));
}

TEST_CASE("orientation regression: the two kill directions are mirror images") {
    FlowNetwork net = planar_net(triangle_spec(Cap(Rat(2)), Cap(Rat(2)), Cap(Rat(2))));
    std::vector<Cap> len(net.emb.dart_count(), Cap(Rat(2)));
    Flow cw = potential_circulation(net.emb, len, KillResidual::Clockwise);
    Flow ccw = potential_circulation(net.emb, len, KillResidual::CounterClockwise);
    for (DartId d = 0; d < net.emb.dart_count(); ++d) CHECK(cw[d] == ccw[rev(d)]);
}

TEST_CASE("tree graphs have a single face and a zero circulation") {
    PlanarSpec s;
    s.n = 4;
    s.arcs = {{0, 1, Cap(Rat(2))}, {1, 2, Cap(Rat(2))}, {1, 3, Cap(Rat(2))}};
    s.rotations = {{0}, {0, 1, 2}, {1}, {2}};
    FlowNetwork net = planar_net(s);
    CHECK(net.emb.face_count() == 1);
    Flow g = potential_circulation(net.emb, net.cap, KillResidual::Clockwise);
    for (const Rat& v : g) CHECK(v.is_zero());
}

TEST_CASE("cancel keeps an acyclic restriction unchanged on the base arcs") {
    GenParams p;
    p.seed = 7;
    p.n = 12;
    p.k = 3;
    FlowNetwork net = generate(p);
    GadgetResult ext = build_extended(net);
    Flow fo = max_flow(ext.net);
    Flow f2o = cancel_ccw_then_cw(ext.net, ext.map, fo);
    Flow f2 = restrict_flow(net, ext.map, f2o);
    REQUIRE(is_acyclic(net, f2));
    // Canceling again changes nothing on the base arcs.
    Flow f3o = cancel_ccw_then_cw(ext.net, ext.map, f2o);
    CHECK(restrict_flow(net, ext.map, f3o) == f2);
    CHECK(flow_value(ext.net, f3o) == flow_value(ext.net, f2o));
}

TEST_CASE("a planted circulation on the base arcs is canceled away") {
    // Path s -> 1 -> 2 -> t plus a 2-cycle between 1 and 2 (both directions
    // capacitated): the circulation dies, the path stays.
    PlanarSpec s;
    s.n = 4;
    s.arcs = {{0, 1, Cap(Rat(3))}, {1, 2, Cap(Rat(3)), Cap(Rat(3))},
              {2, 1, Cap(Rat(3)), Cap(Rat(3))}, {2, 3, Cap(Rat(3))}};
    s.rotations = {{0}, {0, 1, 2}, {2, 1, 3}, {3}};
    s.sources = {0};
    s.sinks = {3};
    FlowNetwork net = planar_net(s);
    GadgetResult ext = build_extended(net);
    Flow f = zero_flow(ext.net);
    // Path carrying 1 plus a 2-unit circulation around arcs 1 and 2.
    f[fwd_dart(0)] = Rat(1);
    f[fwd_dart(1)] = Rat(1) + Rat(2);
    f[fwd_dart(2)] = Rat(2);
    f[fwd_dart(3)] = Rat(1);
    f[fwd_dart(ext.map.source_arcs[0])] = Rat(1);
    f[fwd_dart(ext.map.sink_arcs[0])] = Rat(1);
    REQUIRE(is_feasible(ext.net, f));
    Flow out = cancel_ccw_then_cw(ext.net, ext.map, f);
    Flow r = restrict_flow(net, ext.map, out);
    CHECK(flow_value(net, r) == Rat(1));
    CHECK(is_acyclic(net, r));
    CHECK(r[fwd_dart(0)] == Rat(1));
    CHECK(r[fwd_dart(1)] == Rat(1));
    CHECK(r[fwd_dart(2)] == Rat(0));
    CHECK(r[fwd_dart(3)] == Rat(1));
}

TEST_CASE("cancellation: value kept, base arcs monotone, restriction acyclic") {
    int checked = 0;
    for (unsigned long long seed = 200; seed < 240; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9 + (int)(seed % 8);
        p.k = 2 + (int)(seed % 4);
        FlowNetwork net = generate(p);
        GadgetResult ext = build_extended(net);
        Flow fo = max_flow(ext.net);
        Flow out = cancel_ccw_then_cw(ext.net, ext.map, fo);
        CHECK(flow_value(ext.net, out) == flow_value(ext.net, fo));
        CHECK(is_feasible(ext.net, out));
        for (ArcId a = 0; a < ext.map.base_arcs; ++a) {
            CHECK(out[fwd_dart(a)] <= fo[fwd_dart(a)]);
            CHECK(out[bwd_dart(a)] <= fo[bwd_dart(a)]);
        }
        CHECK(is_acyclic(net, restrict_flow(net, ext.map, out)));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("pass one kills clockwise residual cycles w.r.t. its capacities") {
    for (unsigned long long seed = 300; seed < 312; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9;
        p.k = 2 + (int)(seed % 3);
        FlowNetwork net = generate(p);
        GadgetResult ext = build_extended(net);
        if (ext.net.emb.face_count() > 14) continue;
        Flow fo = max_flow(ext.net);

        // Pass one by hand: pin base arcs at their flow, add the potential
        // circulation of the residual.
        std::vector<Cap> pinned(ext.net.emb.dart_count(), Cap(Rat(0)));
        for (DartId d = 0; d < ext.net.emb.dart_count(); ++d) {
            if (ext.net.emb.face_of(d) < 0) continue;
            pinned[d] = d < 2 * ext.map.base_arcs ? Cap(fo[d]) : ext.net.cap[d];
        }
        std::vector<Cap> res(ext.net.emb.dart_count(), Cap(Rat(0)));
        for (DartId d = 0; d < ext.net.emb.dart_count(); ++d)
            if (ext.net.emb.face_of(d) >= 0) res[d] = pinned[d] - fo[d] + fo[rev(d)];
        Flow g = potential_circulation(ext.net.emb, res, KillResidual::Clockwise);
        Flow f1 = add_flows(fo, g);
        std::vector<Cap> res1(ext.net.emb.dart_count(), Cap(Rat(0)));
        for (DartId d = 0; d < ext.net.emb.dart_count(); ++d)
            if (ext.net.emb.face_of(d) >= 0) res1[d] = pinned[d] - f1[d] + f1[rev(d)];
        CHECK(!has_residual_cycle(ext.net.emb, res1, true));
    }
}
