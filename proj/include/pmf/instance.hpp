#pragma once

#include <string>
#include <vector>

#include "pmf/flow.hpp"

namespace pmf {

struct Instance {
    FlowNetwork net;
    std::vector<std::string> notes;  // applied rewrites, echoed as comments
};

// Text instance format, one record per line:
//   pmf 1 integer|rational
//   n <vertices> <arcs>
//   v <id> <cap|inf> [source|sink]
//   a <tail> <head> <cap> [<reverse cap>]
//   r <vertex> <arc> <arc> ...          clockwise rotation
//   outer <arc> l|r                     side whose face is infinite
// Finite-capacity terminals are rewritten via the stub reduction on parse.
Instance parse_instance(const std::string& text);
std::string write_instance(const FlowNetwork& net,
                           const std::vector<std::string>& notes = {});

Rat parse_rat(const std::string& tok);   // "p/q", "3", "1.25"
Cap parse_cap(const std::string& tok);   // additionally "inf"

struct GenParams {
    unsigned long long seed = 1;
    int n = 16;
    int k = 3;
    long long max_cap = 8;  // U
    Regime regime = Regime::Integer;
    int density_pct = 100;  // chance of each cell diagonal
    bool inner_terminals = false;
};

// Deterministic pseudo-random planar instance: a triangulated grid with
// random orientations and capacities, terminals on the outer face.
FlowNetwork generate(const GenParams& params);

// Flow dump: one line per arc, "tail head <net value>".
std::string write_flow(const FlowNetwork& net, const Flow& f);
Flow parse_flow(const FlowNetwork& net, const std::string& text);

struct OracleResult {
    Rat value;
    Flow flow;
};

// Ford-Fulkerson-reduction baseline: maximum flow in the split graph,
// restricted back.  Ground truth for the acceptance suite.
OracleResult oracle_maxflow(const FlowNetwork& net);

} // namespace pmf
