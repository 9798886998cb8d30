#include <doctest.h>

#include "support.hpp"
#include "pmf/maxflow.hpp"

using namespace pmf;
using namespace pmftest;

TEST_CASE("single arc carries its capacity") {
    FlowNetwork net = abstract_net(2, {{0, 1, Cap(Rat(7))}}, {0}, {1});
    Flow f = max_flow(net);
    CHECK(flow_value(net, f) == Rat(7));
}

TEST_CASE("unit diamond carries two") {
    FlowNetwork net = abstract_net(4,
                                   {{0, 1, Cap(Rat(1))},
                                    {0, 2, Cap(Rat(1))},
                                    {1, 3, Cap(Rat(1))},
                                    {2, 3, Cap(Rat(1))}},
                                   {0}, {3});
    CHECK(flow_value(net, max_flow(net)) == Rat(2));
}

TEST_CASE("max flow value matches exhaustive min cut on random instances") {
    for (unsigned long long seed = 1; seed <= 20; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 9 + (int)(seed % 4);
        p.k = 2 + (int)(seed % 2);
        p.max_cap = 6;
        FlowNetwork net = generate(p);
        for (auto& c : net.vcap) c = Cap::infinite();
        Rat v = flow_value(net, max_flow(net));
        auto m = cap_matrix(net, Rat(1000000));
        std::vector<int> S(net.sources.begin(), net.sources.end());
        std::vector<int> T(net.sinks.begin(), net.sinks.end());
        CHECK(v == enumerated_min_cut(m, S, T));
        CHECK(v == naive_max_flow(m, S, T));
    }
}

TEST_CASE("identical inputs give identical flows") {
    GenParams p;
    p.seed = 42;
    p.n = 20;
    p.k = 4;
    FlowNetwork net = generate(p);
    for (auto& c : net.vcap) c = Cap::infinite();
    CHECK(max_flow(net) == max_flow(net));
}

TEST_CASE("integer capacities give an integer flow") {
    GenParams p;
    p.seed = 13;
    p.n = 16;
    p.k = 2;
    FlowNetwork net = generate(p);
    for (auto& c : net.vcap) c = Cap::infinite();
    Flow f = max_flow(net);
    for (const Rat& v : f) CHECK(v.is_integer());
}

TEST_CASE("unbounded flow is detected") {
    FlowNetwork net = abstract_net(2, {{0, 1, Cap::infinite()}}, {0}, {1});
    CHECK_THROWS_WITH_AS(max_flow(net), doctest::Contains("UnboundedFlow"), Error);
}

TEST_CASE("residual max flow completes a partial flow") {
    FlowNetwork net = abstract_net(3, {{0, 1, Cap(Rat(6))}, {1, 2, Cap(Rat(6))}}, {0}, {2});
    Flow base = zero_flow(net);
    base[fwd_dart(0)] = Rat(3);
    base[fwd_dart(1)] = Rat(3);
    Flow g = max_flow_residual(net, base);
    CHECK(flow_value(net, g) == Rat(3));
    CHECK(flow_value(net, add_flows(base, g)) == Rat(6));
    // Already maximum: nothing to add.
    Flow zero = max_flow_residual(net, add_flows(base, g));
    CHECK(flow_value(net, zero) == Rat(0));
}

TEST_CASE("base plus residual max equals max on random instances") {
    for (unsigned long long seed = 31; seed <= 50; ++seed) {
        GenParams p;
        p.seed = seed;
        p.n = 14;
        p.k = 2;
        FlowNetwork net = generate(p);
        for (auto& c : net.vcap) c = Cap::infinite();
        Rat full = flow_value(net, max_flow(net));
        Rat half = Rat(full.floor() / 2);
        Flow base = fixed_value_flow(net, half);
        Flow g = max_flow_residual(net, base);
        CHECK(flow_value(net, base) + flow_value(net, g) == full);
    }
}

TEST_CASE("fixed value flows hit the requested value or throw") {
    FlowNetwork net = abstract_net(3, {{0, 1, Cap(Rat(4))}, {1, 2, Cap(Rat(4))}}, {0}, {2});
    CHECK(flow_value(net, fixed_value_flow(net, Rat(0))) == Rat(0));
    CHECK(flow_value(net, fixed_value_flow(net, Rat(4))) == Rat(4));
    CHECK_THROWS_WITH_AS(fixed_value_flow(net, Rat(5)), doctest::Contains("Infeasible"),
                         Error);
}

TEST_CASE("acyclic max flow has no flow cycles and full value") {
    // Network with a gratuitous cycle alongside the path.
    FlowNetwork net = abstract_net(4,
                                   {{0, 1, Cap(Rat(3))},
                                    {1, 2, Cap(Rat(3))},
                                    {1, 3, Cap(Rat(2)), Cap(Rat(2))},
                                    {3, 1, Cap(Rat(2)), Cap(Rat(2))}},
                                   {0}, {2});
    Flow f = acyclic_max_flow(net);
    CHECK(flow_value(net, f) == Rat(3));
    CHECK(is_acyclic(net, f));
}

TEST_CASE("cancel_generic removes circulation, keeps value and monotonicity") {
    FlowNetwork net = abstract_net(4,
                                   {{0, 1, Cap(Rat(9))},
                                    {1, 2, Cap(Rat(9))},
                                    {1, 3, Cap(Rat(9))},
                                    {3, 1, Cap(Rat(9))}},
                                   {0}, {2});
    Flow f = zero_flow(net);
    f[fwd_dart(0)] = Rat(2);
    f[fwd_dart(1)] = Rat(2);
    SUBCASE("acyclic input unchanged") { CHECK(cancel_generic(net, f) == f); }
    SUBCASE("pure circulation vanishes") {
        Flow c = zero_flow(net);
        c[fwd_dart(2)] = Rat(5);
        c[fwd_dart(3)] = Rat(5);
        Flow out = cancel_generic(net, c);
        CHECK(flow_value(net, out) == Rat(0));
        for (const Rat& v : out) CHECK(v.is_zero());
    }
    SUBCASE("path plus cycle keeps only the path") {
        Flow mixed = f;
        mixed[fwd_dart(2)] += Rat(5);
        mixed[fwd_dart(3)] += Rat(5);
        Flow out = cancel_generic(net, mixed);
        CHECK(out == f);
        for (DartId d = 0; d < net.emb.dart_count(); ++d) CHECK(out[d] <= mixed[d]);
    }
}

TEST_CASE("demand saturation routes around a cycle") {
    // Degree-2 cycle gadget: demands 3 out of vertex 0, 3 into vertex 1,
    // cycle edges of capacity 3/2 each; both edges carry exactly 3/2.
    RawNet cyc;
    cyc.n = 2;
    Cap half(Rat(i128(3), i128(2)));
    cyc.add_arc(0, 1, half, half);
    cyc.add_arc(1, 0, half, half);
    std::vector<Rat> demand{Rat(-3), Rat(3)};
    Flow f = saturate_demands(cyc, demand);
    CHECK(f[fwd_dart(0)] == Rat(i128(3), i128(2)));  // 0 -> 1 along edge A
    CHECK(f[bwd_dart(1)] == Rat(i128(3), i128(2)));  // 0 -> 1 along edge B
    // Infeasible demands must fail loudly.
    std::vector<Rat> too_much{Rat(-4), Rat(4)};
    CHECK_THROWS_WITH_AS(saturate_demands(cyc, too_much),
                         doctest::Contains("ExtensionFailure"), Error);
}
