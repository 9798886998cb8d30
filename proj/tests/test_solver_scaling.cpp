#include <doctest.h>

#include "support.hpp"
#include "pmf/cycle_cancel.hpp"
#include "pmf/maxflow.hpp"
#include "pmf/solver_scaling.hpp"

using namespace pmf;
using namespace pmftest;

TEST_CASE("stage 1 with an empty infeasible set returns the zero circulation") {
    GenParams p;
    p.seed = 5;
    p.n = 10;
    p.k = 2;
    FlowNetwork net = generate(p);
    GadgetResult ext = build_extended(net);
    Flow fo = cancel_ccw_then_cw(ext.net, ext.map, max_flow(ext.net));
    Flow fr = restrict_flow(net, ext.map, fo);
    REQUIRE(infeasible_vertices(net, fr).empty());
    Flow go = improve_stage1(net, ext.net, ext.map, fo, {}, Rat(0));
    for (const Rat& v : go) CHECK(v.is_zero());
}

TEST_CASE("stage 1 clears the infeasible set at lambda = optimum") {
    int exercised = 0;
    for (unsigned long long seed = 800; seed < 860 && exercised < 12; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9 + (int)(seed % 8);
        p.k = 3 + (int)(seed % 3);
        p.max_cap = 6;
        FlowNetwork net = generate(p);
        FlowNetwork g2 = net;
        for (auto& c : g2.cap)
            if (!c.inf) c.val = c.val * Rat(2);
        for (auto& c : g2.vcap)
            if (!c.inf) c.val = c.val * Rat(2);
        GadgetResult ext = build_extended(g2);
        OracleResult o = oracle_maxflow(g2);
        Flow fo;
        try {
            fo = fixed_value_flow(ext.net, o.value);
        } catch (const Error&) {
            continue;
        }
        fo = cancel_ccw_then_cw(ext.net, ext.map, fo);
        Flow fr = restrict_flow(g2, ext.map, fo);
        std::vector<VertexId> X = infeasible_vertices(g2, fr);
        if (X.empty()) continue;
        ++exercised;
        Rat exf = max_excess(g2, fr);
        Flow go = improve_stage1(g2, ext.net, ext.map, fo, X, exf);
        Flow ho = add_flows(fo, go);
        CHECK(is_feasible(ext.net, ho));
        Flow hr = restrict_flow(g2, ext.map, ho);
        int k = g2.terminal_count();
        for (VertexId x : X) CHECK(excess(g2, hr, x).is_zero());
        for (VertexId v = 0; v < g2.emb.vertex_count(); ++v)
            CHECK(excess(g2, hr, v) <= Rat(k - 2) * exf);
        CHECK(flow_value(ext.net, ho) == flow_value(ext.net, fo));
    }
    CHECK(exercised > 0);
}

TEST_CASE("stage 2 divides a cycle circulation by k and rounds") {
    // g = 4 units around a triangle, k = 4: exactly one unit survives.
    FlowNetwork net = planar_net(triangle_spec(Cap(Rat(8)), Cap(Rat(8)), Cap(Rat(8))));
    GadgetResult ext = build_gst(net);  // no capacitated vertices: same graph
    Flow g = zero_flow(ext.net);
    for (ArcId a : {0, 1, 2}) g[fwd_dart(a)] = Rat(4);
    Flow gk = improve_stage2(ext.net, g, 4);
    for (ArcId a : {0, 1, 2}) CHECK(gk[fwd_dart(a)] == Rat(1));
    Flow zero = improve_stage2(ext.net, zero_flow(ext.net), 3);
    for (const Rat& v : zero) CHECK(v.is_zero());
}

TEST_CASE("improvement bound arithmetic: substitution example") {
    // ex(f)=40, k=4, delta=4 gives the lemma bound (3/4)*40 + 4 = 34.
    Rat bound = Rat(i128(4 - 1), i128(4)) * Rat(40) + Rat(4);
    CHECK(bound == Rat(34));
}

TEST_CASE("scaling solver equals plain max flow without vertex caps") {
    GenParams p;
    p.seed = 31;
    p.n = 12;
    p.k = 3;
    p.max_cap = 1000;
    FlowNetwork net = generate(p);
    for (auto& c : net.vcap) c = Cap::infinite();
    SolveStats st;
    Flow f = solve_scaling(net, &st);
    GadgetResult bar = build_split(net);
    CHECK(st.value == flow_value(bar.net, max_flow(bar.net)));
}

TEST_CASE("cut-off sources give the zero flow") {
    // Sources exist but every outgoing capacity is zero.
    PlanarSpec s;
    s.n = 4;
    s.arcs = {{0, 1, Cap(Rat(0))}, {1, 2, Cap(Rat(5))}, {2, 3, Cap(Rat(5))}};
    s.rotations = {{0}, {0, 1}, {1, 2}, {2}};
    s.sources = {0};
    s.sinks = {3};
    FlowNetwork net = planar_net(s);
    SolveStats st;
    Flow f = solve_scaling(net, &st);
    CHECK(st.value == Rat(0));
    for (const Rat& v : f) CHECK(v.is_zero());
}

TEST_CASE("scaling solver matches the oracle across regimes of U") {
    for (unsigned long long seed = 900; seed < 930; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9 + (int)(seed % 8);
        p.k = 2 + (int)(seed % 4);
        p.max_cap = (seed % 2) ? 1000 : 9;
        FlowNetwork net = generate(p);
        SolveStats st;
        Flow f = solve_scaling(net, &st);
        CHECK(is_feasible(net, f));
        OracleResult o = oracle_maxflow(net);
        CHECK(st.value == o.value);
        for (const Rat& v : f) CHECK(v.is_integer());
    }
}

TEST_CASE("acceptance sweep: accepted guesses are exactly 0..optimum") {
    for (unsigned long long seed = 950; seed < 956; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9;
        p.k = 3;
        p.max_cap = 4;
        FlowNetwork net = generate(p);
        OracleResult o = oracle_maxflow(net);
        long long opt = (long long)o.value.num;
        for (long long lam = 0; lam <= opt + 2; ++lam)
            CHECK(scaling_accepts(net, lam) == (lam <= opt));
    }
}
