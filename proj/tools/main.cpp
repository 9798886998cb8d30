#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pmf/instance.hpp"
#include "pmf/solver_bounded.hpp"
#include "pmf/solver_k3.hpp"
#include "pmf/solver_scaling.hpp"

namespace {

using namespace pmf;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

enum class Algo { Auto, Bounded, Scaling, K3 };

Algo pick_algo(const FlowNetwork& net) {
    if (net.terminal_count() == 3) return Algo::K3;
    if (net.regime != Regime::Integer)
        fail(Err::ParamError, "rational capacities need the k=3 solver");
    Rat biggest = net.max_finite_vcap();
    for (const Cap& c : net.cap)
        if (!c.inf && c.val > biggest) biggest = c.val;
    return biggest <= Rat(16) ? Algo::Bounded : Algo::Scaling;
}

Flow run_algo(const FlowNetwork& net, Algo algo) {
    switch (algo) {
        case Algo::Bounded: return solve_bounded(net);
        case Algo::Scaling: return solve_scaling(net);
        case Algo::K3: return solve_k3(net);
        case Algo::Auto: break;
    }
    return run_algo(net, pick_algo(net));
}

struct CompareReport {
    bool ok = true;
    std::string text;
};

CompareReport compare_one(const FlowNetwork& net, const std::string& label) {
    std::ostringstream out;
    CompareReport rep;
    OracleResult oracle = oracle_maxflow(net);
    out << label << ": oracle " << oracle.value.str();
    auto check = [&](const char* name, Flow (*solver)(const FlowNetwork&, SolveStats*)) {
        Flow f = solver(net, nullptr);
        Rat v = flow_value(net, f);
        bool feasible = is_feasible(net, f);
        out << ", " << name << " " << v.str() << (feasible ? "" : " INFEASIBLE");
        if (v != oracle.value || !feasible) rep.ok = false;
    };
    if (net.regime == Regime::Integer) {
        check("bounded", [](const FlowNetwork& n, SolveStats* s) { return solve_bounded(n, s); });
        check("scaling", [](const FlowNetwork& n, SolveStats* s) { return solve_scaling(n, s); });
    }
    if (net.terminal_count() == 3)
        check("k3", [](const FlowNetwork& n, SolveStats* s) { return solve_k3(n, s); });
    out << (rep.ok ? " ok" : " MISMATCH");
    rep.text = out.str();
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"planar max flow with vertex capacities"};
    app.require_subcommand(1);

    std::string file, out_path, algo_name = "auto", flow_path, regime = "integer";
    bool dump_flow = false;

    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("file", file)->required();
    solve->add_option("--algo", algo_name, "bounded|scaling|k3|auto");
    solve->add_flag("--flow", dump_flow, "print the flow as well");

    CLI::App* oracle = app.add_subcommand("oracle", "baseline split-graph max flow");
    oracle->add_option("file", file)->required();
    oracle->add_flag("--flow", dump_flow);

    CLI::App* check = app.add_subcommand("check", "validate a flow dump");
    check->add_option("file", file)->required();
    check->add_option("flow", flow_path)->required();

    GenParams gp;
    CLI::App* gen = app.add_subcommand("gen", "generate a random planar instance");
    gen->add_option("--seed", gp.seed);
    gen->add_option("--n", gp.n);
    gen->add_option("--k", gp.k);
    gen->add_option("--U", gp.max_cap);
    gen->add_option("--density", gp.density_pct, "diagonal percentage");
    gen->add_option("--regime", regime, "integer|rational");
    gen->add_flag("--inner-terminals", gp.inner_terminals);
    gen->add_option("--out", out_path);

    std::vector<std::string> files;
    int seeds = 0, jobs = 1;
    CLI::App* compare = app.add_subcommand("compare", "all applicable solvers vs oracle");
    compare->add_option("files", files);
    compare->add_option("--seeds", seeds, "generate this many seeded instances instead");
    compare->add_option("--n", gp.n);
    compare->add_option("--k", gp.k);
    compare->add_option("--U", gp.max_cap);
    compare->add_option("--regime", regime);
    compare->add_option("--jobs", jobs);

    CLI11_PARSE(app, argc, argv);

    if (regime == "rational") gp.regime = Regime::Rational;
    else if (regime != "integer") fail(Err::ParamError, "regime must be integer or rational");

    if (solve->parsed()) {
        Instance inst = parse_instance(slurp(file));
        Algo algo = Algo::Auto;
        if (algo_name == "bounded") algo = Algo::Bounded;
        else if (algo_name == "scaling") algo = Algo::Scaling;
        else if (algo_name == "k3") algo = Algo::K3;
        else if (algo_name != "auto") fail(Err::ParamError, "unknown algorithm");
        Flow f = run_algo(inst.net, algo);
        std::cout << "value " << flow_value(inst.net, f).str() << "\n";
        if (dump_flow) std::cout << write_flow(inst.net, f);
        return 0;
    }
    if (oracle->parsed()) {
        Instance inst = parse_instance(slurp(file));
        OracleResult r = oracle_maxflow(inst.net);
        std::cout << "value " << r.value.str() << "\n";
        if (dump_flow) std::cout << write_flow(inst.net, r.flow);
        return 0;
    }
    if (check->parsed()) {
        Instance inst = parse_instance(slurp(file));
        Flow f = parse_flow(inst.net, slurp(flow_path));
        FeasibilityReport rep = check_feasible(inst.net, f);
        if (rep.ok) {
            std::cout << "feasible, value " << flow_value(inst.net, f).str() << "\n";
            return 0;
        }
        for (const Violation& v : rep.violations) {
            const char* kind = v.kind == Violation::ArcCap       ? "arc capacity"
                               : v.kind == Violation::VertexCap  ? "vertex capacity"
                               : v.kind == Violation::Negative   ? "negative flow"
                                                                 : "conservation";
            std::cout << kind << " violated at " << v.id << " by " << v.magnitude.str()
                      << "\n";
        }
        return 1;
    }
    if (gen->parsed()) {
        FlowNetwork net = generate(gp);
        std::string text = write_instance(net);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
        return 0;
    }
    if (compare->parsed()) {
        std::vector<FlowNetwork> nets;
        std::vector<std::string> labels;
        for (const std::string& fpath : files) {
            nets.push_back(parse_instance(slurp(fpath)).net);
            labels.push_back(fpath);
        }
        for (int i = 0; i < seeds; ++i) {
            GenParams g = gp;
            g.seed = gp.seed + (unsigned long long)i;
            nets.push_back(generate(g));
            labels.push_back("seed " + std::to_string(g.seed));
        }
        if (nets.empty()) fail(Err::ParamError, "nothing to compare");
        std::vector<CompareReport> reports(nets.size());
        jobs = std::max(1, jobs);
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&] {
                for (size_t i = next++; i < nets.size(); i = next++)
                    reports[i] = compare_one(nets[i], labels[i]);
            });
        for (auto& t : workers) t.join();
        bool ok = true;
        for (const CompareReport& r : reports) {
            std::cout << r.text << "\n";
            ok = ok && r.ok;
        }
        return ok ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pmf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
