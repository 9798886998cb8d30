#pragma once

#include <vector>

#include "pmf/embedding.hpp"

namespace pmf {

enum class Regime { Integer, Rational };

enum class Role : char { None = 0, Source = 1, Sink = 2 };

// A flow network: an embedded (possibly apex-augmented) graph with per-dart
// arc capacities, per-vertex capacities, and terminal sets.  Terminals always
// carry infinite vertex capacity.
struct FlowNetwork {
    Embedding emb;
    std::vector<Cap> cap;    // per dart
    std::vector<Cap> vcap;   // per vertex
    std::vector<Role> role;  // per vertex
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    Regime regime = Regime::Integer;

    bool is_source(VertexId v) const { return role[v] == Role::Source; }
    bool is_sink(VertexId v) const { return role[v] == Role::Sink; }
    bool is_terminal(VertexId v) const { return role[v] != Role::None; }
    int terminal_count() const { return (int)(sources.size() + sinks.size()); }

    // Largest finite vertex capacity (zero if none), the paper's U.
    Rat max_finite_vcap() const;
    // Largest vertex degree, the paper's Delta.
    int max_degree() const;
};

class NetworkBuilder {
public:
    VertexId add_vertex(Cap vertex_cap = Cap::infinite(), Role role = Role::None,
                        bool apex = false);
    ArcId add_arc(VertexId tail, VertexId head, Cap cap_fwd, Cap cap_bwd = Cap(Rat(0)));
    void set_rotation(VertexId v, std::vector<ArcId> arcs_clockwise);
    void set_outer(DartId d) { outer_dart_ = d; }
    void set_regime(Regime r) { regime_ = r; }

    int vertex_count() const { return (int)vcap_.size(); }
    int arc_count() const { return (int)arcs_.size(); }

    FlowNetwork build();

private:
    std::vector<ArcDef> arcs_;
    std::vector<Cap> cap_;
    std::vector<Cap> vcap_;
    std::vector<Role> role_;
    std::vector<char> apex_;
    std::vector<std::vector<ArcId>> rot_;
    DartId outer_dart_ = -1;
    Regime regime_ = Regime::Integer;
};

// Structural checks for user-facing instances (gadget networks are exempt):
// terminal sets disjoint, no capacitated terminal, no positive-capacity dart
// into a source or out of a sink.
void validate_instance(const FlowNetwork& net);

} // namespace pmf
