#include <doctest.h>

#include "support.hpp"
#include "pmf/cycle_cancel.hpp"
#include "pmf/maxflow.hpp"
#include "pmf/saddle.hpp"

using namespace pmf;
using namespace pmftest;

namespace {

// Star with clockwise pattern in, out, in, out at the hub (hub = 0).
FlowNetwork saddle_star(Cap hub_cap) {
    PlanarSpec s;
    s.n = 5;
    s.arcs = {{1, 0, Cap(Rat(2))},
              {2, 0, Cap(Rat(2))},
              {0, 3, Cap(Rat(2))},
              {0, 4, Cap(Rat(2))}};
    s.rotations = {{0, 2, 1, 3}, {0}, {1}, {2}, {3}};
    s.sources = {1, 2};
    s.sinks = {3, 4};
    s.vcaps = {{0, hub_cap}};
    return planar_net(s);
}

Flow both_routes(const FlowNetwork& net, Rat amount) {
    Flow f = zero_flow(net);
    for (ArcId a = 0; a < 4; ++a) f[fwd_dart(a)] = amount;
    return f;
}

} // namespace

TEST_CASE("straight through-flow has alternation two and index zero") {
    PlanarSpec s;
    s.n = 3;
    s.arcs = {{0, 1, Cap(Rat(3))}, {1, 2, Cap(Rat(3))}};
    s.rotations = {{0}, {0, 1}, {1}};
    s.sources = {0};
    s.sinks = {2};
    FlowNetwork net = planar_net(s);
    Flow f = zero_flow(net);
    f[fwd_dart(0)] = Rat(2);
    f[fwd_dart(1)] = Rat(2);
    SaddleReport rep = analyze_saddles(net, f);
    CHECK(rep.alpha[1] == 2);
    CHECK(rep.index[1] == 0);
    CHECK(rep.saddles.empty());
    CHECK(rep.alpha[0] == 0);   // terminal
    CHECK(rep.index[0] == -1);
}

TEST_CASE("interleaved in/out pattern is a saddle of index one") {
    FlowNetwork net = saddle_star(Cap(Rat(1)));
    Flow f = both_routes(net, Rat(1));
    SaddleReport rep = analyze_saddles(net, f);
    CHECK(rep.alpha[0] == 4);
    CHECK(rep.index[0] == 1);
    CHECK(rep.saddles == std::vector<VertexId>{0});
    // Lemma 6 at the boundary: ex = 1 = index * c(v).
    CHECK(rep.excess[0] == Rat(1));
    CHECK(rep.excess[0] <= Rat(rep.index[0]) * net.vcap[0].val);
}

TEST_CASE("grouped in/out pattern is not a saddle") {
    FlowNetwork net = saddle_star(Cap(Rat(1)));
    // Same star but rotation in, in, out, out.
    PlanarSpec s;
    s.n = 5;
    s.arcs = {{1, 0, Cap(Rat(2))},
              {2, 0, Cap(Rat(2))},
              {0, 3, Cap(Rat(2))},
              {0, 4, Cap(Rat(2))}};
    s.rotations = {{0, 1, 2, 3}, {0}, {1}, {2}, {3}};
    s.sources = {1, 2};
    s.sinks = {3, 4};
    FlowNetwork grouped = planar_net(s);
    Flow f = both_routes(grouped, Rat(1));
    SaddleReport rep = analyze_saddles(grouped, f);
    CHECK(rep.alpha[0] == 2);
    CHECK(rep.index[0] == 0);
    CHECK(rep.saddles.empty());
    (void)net;
}

TEST_CASE("cyclic flows are rejected") {
    FlowNetwork net = planar_net(triangle_spec(Cap(Rat(2)), Cap(Rat(2)), Cap(Rat(2))));
    Flow f = zero_flow(net);
    for (ArcId a : {0, 1, 2}) f[fwd_dart(a)] = Rat(1);
    CHECK_THROWS_WITH_AS(analyze_saddles(net, f), doctest::Contains("NotAcyclic"), Error);
}

TEST_CASE("single source and sink flows have no saddles") {
    for (unsigned long long seed = 400; seed < 410; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 12;
        p.k = 2;
        FlowNetwork net = generate(p);
        GadgetResult ext = build_extended(net);
        Flow fo = cancel_ccw_then_cw(ext.net, ext.map, max_flow(ext.net));
        Flow f = restrict_flow(net, ext.map, fo);
        SaddleReport rep = analyze_saddles(net, f);
        CHECK(rep.saddles.empty());
        CHECK(max_excess(net, f).is_zero());
    }
}

TEST_CASE("index identity holds for simple flows and random restrictions") {
    FlowNetwork net = saddle_star(Cap(Rat(1)));
    Flow f = both_routes(net, Rat(1));
    CHECK(check_index_identity(net, f));
    CHECK(check_index_identity(net, zero_flow(net)));  // vacuous

    for (unsigned long long seed = 420; seed < 440; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 10 + (int)(seed % 9);
        p.k = 2 + (int)(seed % 4);
        FlowNetwork g = generate(p);
        GadgetResult ext = build_extended(g);
        Flow fo = cancel_ccw_then_cw(ext.net, ext.map, max_flow(ext.net));
        Flow fr = restrict_flow(g, ext.map, fo);
        REQUIRE(is_acyclic(g, fr));
        CHECK(check_index_identity(g, fr));
    }
}

TEST_CASE("saddle bounds across random extended-graph restrictions") {
    for (unsigned long long seed = 440; seed < 470; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 10 + (int)(seed % 9);
        p.k = 2 + (int)(seed % 5);
        FlowNetwork g = generate(p);
        int k = g.terminal_count();
        GadgetResult ext = build_extended(g);
        Flow fo = cancel_ccw_then_cw(ext.net, ext.map, max_flow(ext.net));
        Flow fr = restrict_flow(g, ext.map, fo);
        SaddleReport rep = analyze_saddles(g, fr);
        long long sum = 0;
        for (VertexId v : rep.saddles) sum += rep.index[v];
        CHECK(sum <= k - 2);
        CHECK((int)rep.saddles.size() <= k - 2);
        Rat total(0);
        int bad = 0;
        for (VertexId v = 0; v < g.emb.vertex_count(); ++v) {
            if (in_flow(g, fr, v).is_positive() && !g.is_terminal(v) && !g.vcap[v].inf)
                CHECK(rep.excess[v] <= Rat(rep.index[v]) * g.vcap[v].val);
            if (rep.excess[v].is_positive()) {
                ++bad;
                total += rep.excess[v];
            }
        }
        CHECK(bad <= k - 2);
        CHECK(total <= Rat(k - 2) * g.max_finite_vcap());
    }
}
