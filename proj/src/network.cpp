#include "pmf/network.hpp"

namespace pmf {

Rat FlowNetwork::max_finite_vcap() const {
    Rat u(0);
    for (VertexId v = 0; v < emb.vertex_count(); ++v)
        if (!vcap[v].inf && vcap[v].val > u) u = vcap[v].val;
    return u;
}

int FlowNetwork::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < emb.vertex_count(); ++v)
        if (!emb.is_apex(v)) d = std::max(d, emb.degree(v));
    return d;
}

VertexId NetworkBuilder::add_vertex(Cap vertex_cap, Role role, bool apex) {
    vcap_.push_back(vertex_cap);
    role_.push_back(role);
    apex_.push_back(apex ? 1 : 0);
    rot_.emplace_back();
    return (VertexId)vcap_.size() - 1;
}

ArcId NetworkBuilder::add_arc(VertexId tail, VertexId head, Cap cap_fwd, Cap cap_bwd) {
    if (cap_fwd.is_negative() || cap_bwd.is_negative())
        fail(Err::ValidationError, "negative arc capacity");
    arcs_.push_back({tail, head});
    cap_.push_back(cap_fwd);
    cap_.push_back(cap_bwd);
    return (ArcId)arcs_.size() - 1;
}

void NetworkBuilder::set_rotation(VertexId v, std::vector<ArcId> arcs_clockwise) {
    rot_[v] = std::move(arcs_clockwise);
}

FlowNetwork NetworkBuilder::build() {
    FlowNetwork net;
    net.emb = Embedding((int)vcap_.size(), arcs_, rot_, apex_, outer_dart_);
    net.cap = std::move(cap_);
    net.vcap = std::move(vcap_);
    net.role = role_;
    net.regime = regime_;
    for (VertexId v = 0; v < (int)net.role.size(); ++v) {
        if (net.role[v] == Role::Source) net.sources.push_back(v);
        if (net.role[v] == Role::Sink) net.sinks.push_back(v);
        if (net.role[v] != Role::None) net.vcap[v] = Cap::infinite();
    }
    return net;
}

void validate_instance(const FlowNetwork& net) {
    if (net.sources.empty() || net.sinks.empty())
        fail(Err::ValidationError, "instance needs at least one source and one sink");
    for (DartId d = 0; d < net.emb.dart_count(); ++d) {
        if (!net.cap[d].is_positive()) continue;
        if (net.is_source(net.emb.head(d)))
            fail(Err::ValidationError, "source has an incoming arc of positive capacity");
        if (net.is_sink(net.emb.tail(d)))
            fail(Err::ValidationError, "sink has an outgoing arc of positive capacity");
    }
    for (VertexId v = 0; v < net.emb.vertex_count(); ++v)
        if (net.is_terminal(v) && !net.vcap[v].inf)
            fail(Err::ValidationError, "terminal with finite vertex capacity");
}

} // namespace pmf
