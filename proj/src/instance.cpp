#include "pmf/instance.hpp"

#include <random>
#include <sstream>

#include "pmf/gadgets.hpp"
#include "pmf/maxflow.hpp"

namespace pmf {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(Err::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long long to_ll(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line, "bad integer '" + tok + "'");
    }
}

} // namespace

Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        Rat num(i128(to_ll(tok.substr(0, slash), 0)));
        Rat den(i128(to_ll(tok.substr(slash + 1), 0)));
        if (den.is_zero()) fail(Err::ParseError, "zero denominator in '" + tok + "'");
        return num / den;
    }
    auto dot = tok.find('.');
    if (dot != std::string::npos) {
        std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
        int places = (int)(tok.size() - dot - 1);
        i128 den = 1;
        for (int i = 0; i < places; ++i) den *= 10;
        return Rat(i128(to_ll(digits, 0)), den);
    }
    return Rat(i128(to_ll(tok, 0)), i128(1));
}

Cap parse_cap(const std::string& tok) {
    if (tok == "inf") return Cap::infinite();
    return Cap(parse_rat(tok));
}

namespace {

struct RawInstance {
    int nv = -1, na = -1;
    Regime regime = Regime::Integer;
    std::vector<Cap> vcap;
    std::vector<Role> role;
    std::vector<ArcDef> arcs;
    std::vector<Cap> capf, capb;
    std::vector<std::vector<ArcId>> rot;
    std::vector<int> rot_line;
    std::vector<char> rot_seen;
    ArcId outer_arc = -1;
    bool outer_left = true;
};

RawInstance parse_records(const std::string& text) {
    RawInstance ri;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto need = [&](std::string* out) {
            if (!(ls >> *out)) parse_fail(lineno, "missing field after '" + tag + "'");
        };
        std::string t1, t2, t3;
        if (tag == "pmf") {
            need(&t1);
            need(&t2);
            if (t1 != "1") parse_fail(lineno, "unsupported format version");
            if (t2 == "integer") ri.regime = Regime::Integer;
            else if (t2 == "rational") ri.regime = Regime::Rational;
            else parse_fail(lineno, "regime must be integer or rational");
            header = true;
        } else if (tag == "n") {
            need(&t1);
            need(&t2);
            ri.nv = (int)to_ll(t1, lineno);
            ri.na = (int)to_ll(t2, lineno);
            if (ri.nv <= 0 || ri.na < 0) parse_fail(lineno, "bad counts");
            ri.vcap.assign(ri.nv, Cap::infinite());
            ri.role.assign(ri.nv, Role::None);
            ri.rot.assign(ri.nv, {});
            ri.rot_line.assign(ri.nv, 0);
            ri.rot_seen.assign(ri.nv, 0);
        } else if (tag == "v") {
            if (ri.nv < 0) parse_fail(lineno, "v before n");
            need(&t1);
            need(&t2);
            int id = (int)to_ll(t1, lineno);
            if (id < 0 || id >= ri.nv) parse_fail(lineno, "vertex id out of range");
            ri.vcap[id] = parse_cap(t2);
            if (ri.vcap[id].is_negative()) parse_fail(lineno, "negative vertex capacity");
            if (ls >> t3) {
                if (t3 == "source") ri.role[id] = Role::Source;
                else if (t3 == "sink") ri.role[id] = Role::Sink;
                else parse_fail(lineno, "bad role '" + t3 + "'");
            }
        } else if (tag == "a") {
            if (ri.nv < 0) parse_fail(lineno, "a before n");
            need(&t1);
            need(&t2);
            need(&t3);
            int u = (int)to_ll(t1, lineno), w = (int)to_ll(t2, lineno);
            if (u < 0 || u >= ri.nv || w < 0 || w >= ri.nv)
                parse_fail(lineno, "arc endpoint out of range");
            if (u == w) parse_fail(lineno, "self-loops are not allowed");
            Cap cf = parse_cap(t3);
            Cap cb = Cap(Rat(0));
            std::string t4;
            if (ls >> t4) cb = parse_cap(t4);
            if (cf.is_negative() || cb.is_negative())
                parse_fail(lineno, "negative arc capacity");
            ri.arcs.push_back({u, w});
            ri.capf.push_back(cf);
            ri.capb.push_back(cb);
        } else if (tag == "r") {
            if (ri.nv < 0) parse_fail(lineno, "r before n");
            need(&t1);
            int v = (int)to_ll(t1, lineno);
            if (v < 0 || v >= ri.nv) parse_fail(lineno, "rotation vertex out of range");
            if (ri.rot_seen[v]) parse_fail(lineno, "duplicate rotation for vertex");
            ri.rot_seen[v] = 1;
            ri.rot_line[v] = lineno;
            std::string tok;
            while (ls >> tok) ri.rot[v].push_back((ArcId)to_ll(tok, lineno));
        } else if (tag == "outer") {
            need(&t1);
            need(&t2);
            ri.outer_arc = (ArcId)to_ll(t1, lineno);
            if (t2 == "l") ri.outer_left = true;
            else if (t2 == "r") ri.outer_left = false;
            else parse_fail(lineno, "outer side must be l or r");
        } else {
            parse_fail(lineno, "unknown record '" + tag + "'");
        }
    }
    if (!header) fail(Err::ParseError, "missing 'pmf 1 <regime>' header");
    if (ri.nv < 0) fail(Err::ParseError, "missing 'n' record");
    if ((int)ri.arcs.size() != ri.na)
        fail(Err::ParseError, "arc count does not match the n record");
    for (int v = 0; v < ri.nv; ++v)
        for (ArcId a : ri.rot[v])
            if (a < 0 || a >= (ArcId)ri.arcs.size())
                parse_fail(ri.rot_line[v], "rotation references unknown arc");
    return ri;
}

} // namespace

Instance parse_instance(const std::string& text) {
    RawInstance ri = parse_records(text);
    Instance inst;

    // Terminal-capacity reduction: a finite-capacity terminal keeps its
    // capacity as an internal vertex and a fresh infinite-capacity terminal
    // is attached by a stub arc of that capacity.
    for (int v = 0; v < ri.nv; ++v) {
        if (ri.role[v] == Role::None || ri.vcap[v].inf) continue;
        int nv = (int)ri.vcap.size();
        Role r = ri.role[v];
        ri.role[v] = Role::None;
        ri.vcap.push_back(Cap::infinite());
        ri.role.push_back(r);
        ri.rot.push_back({});
        ArcId stub;
        if (r == Role::Source) stub = (ArcId)ri.arcs.size(), ri.arcs.push_back({nv, v});
        else stub = (ArcId)ri.arcs.size(), ri.arcs.push_back({v, nv});
        ri.capf.push_back(ri.vcap[v]);
        ri.capb.push_back(Cap(Rat(0)));
        ri.rot[v].push_back(stub);
        ri.rot[nv].push_back(stub);
        inst.notes.push_back("# reduced: capacitated " +
                             std::string(r == Role::Source ? "source " : "sink ") +
                             std::to_string(v) + " via vertex " + std::to_string(nv));
        ++ri.nv;
    }

    NetworkBuilder b;
    b.set_regime(ri.regime);
    for (int v = 0; v < ri.nv; ++v) b.add_vertex(ri.vcap[v], ri.role[v]);
    for (ArcId a = 0; a < (ArcId)ri.arcs.size(); ++a) {
        if (ri.arcs[a].tail >= ri.nv || ri.arcs[a].head >= ri.nv)
            fail(Err::ParseError, "arc endpoint out of range");
        b.add_arc(ri.arcs[a].tail, ri.arcs[a].head, ri.capf[a], ri.capb[a]);
    }
    for (int v = 0; v < ri.nv; ++v) b.set_rotation(v, ri.rot[v]);
    if (ri.outer_arc >= 0) {
        if (ri.outer_arc >= (ArcId)ri.arcs.size())
            fail(Err::ParseError, "outer arc out of range");
        b.set_outer(ri.outer_left ? fwd_dart(ri.outer_arc) : bwd_dart(ri.outer_arc));
    }
    inst.net = b.build();
    validate_instance(inst.net);
    return inst;
}

std::string write_instance(const FlowNetwork& net, const std::vector<std::string>& notes) {
    std::ostringstream out;
    out << "pmf 1 " << (net.regime == Regime::Integer ? "integer" : "rational") << "\n";
    for (const std::string& note : notes) out << note << "\n";
    int n = net.emb.vertex_count(), m = net.emb.arc_count();
    out << "n " << n << " " << m << "\n";
    for (VertexId v = 0; v < n; ++v) {
        out << "v " << v << " " << net.vcap[v].str();
        if (net.is_source(v)) out << " source";
        if (net.is_sink(v)) out << " sink";
        out << "\n";
    }
    for (ArcId a = 0; a < m; ++a) {
        out << "a " << net.emb.tail(fwd_dart(a)) << " " << net.emb.head(fwd_dart(a))
            << " " << net.cap[fwd_dart(a)].str();
        if (net.cap[bwd_dart(a)].is_positive()) out << " " << net.cap[bwd_dart(a)].str();
        out << "\n";
    }
    for (VertexId v = 0; v < n; ++v) {
        if (net.emb.rotation(v).empty()) continue;
        out << "r " << v;
        for (DartId d : net.emb.rotation(v)) out << " " << arc_of(d);
        out << "\n";
    }
    FaceId of = net.emb.outer_face();
    if (of >= 0) {
        DartId d = net.emb.face_darts(of).front();
        out << "outer " << arc_of(d) << " " << (is_fwd(d) ? "l" : "r") << "\n";
    }
    return out.str();
}

namespace {

long long rng_below(std::mt19937_64& rng, long long n) {
    return (long long)(rng() % (unsigned long long)n);
}

Cap random_cap(std::mt19937_64& rng, const GenParams& p) {
    if (p.regime == Regime::Integer) return Cap(Rat(i128(1 + rng_below(rng, p.max_cap))));
    long long q = 1 + rng_below(rng, 10);
    long long num = 1 + rng_below(rng, p.max_cap * q);
    return Cap(Rat(i128(num), i128(q)));
}

// Crossing core for three-terminal instances: both sources must pass the
// central hub, whose in/out arcs interleave in rotation, and the western
// exit reaches the sink through an insulated pipe around the south border.
// Every max flow of the extended graph then overloads the hub whenever its
// capacity binds.  Pure capacity surgery; the embedding is untouched.
void plant_crossing_core(FlowNetwork& net, int w, int h, std::mt19937_64& rng,
                         const GenParams& p) {
    int hx = w / 2, hy = h / 2;
    // When there is room, a second crossing hub with its own feeders sits
    // west of the main one.  With both exits and both supplies modest, the
    // stream swap has slack to sit at either hub, which is what lets the
    // auxiliary-network step move it and the interpolation branch fire.
    int gx = hx - 2 >= 1 ? hx - 2 : -1;
    bool twin = false;
    auto big = [&]() {
        Cap c = random_cap(rng, p);
        return Cap(c.val + Rat(i128(2 * p.max_cap)));
    };
    auto kill = [&](ArcId a) {
        net.cap[fwd_dart(a)] = Cap(Rat(0));
        net.cap[bwd_dart(a)] = Cap(Rat(0));
    };
    for (ArcId a = 0; a < net.emb.arc_count(); ++a) {
        VertexId u = net.emb.tail(fwd_dart(a)), v = net.emb.head(fwd_dart(a));
        int ux = u % w, uy = u / w, vx = v % w, vy = v / w;
        auto orient_cap = [&](bool from_u, Cap c) {
            net.cap[from_u ? fwd_dart(a) : bwd_dart(a)] = c;
            net.cap[from_u ? bwd_dart(a) : fwd_dart(a)] = Cap(Rat(0));
        };
        auto orient = [&](bool from_u) { orient_cap(from_u, big()); };
        auto both_ways = [&]() {
            net.cap[fwd_dart(a)] = big();
            net.cap[bwd_dart(a)] = big();
        };
        bool vertical = ux == vx;
        bool horizontal = uy == vy;
        int lo_y = std::min(uy, vy), hi_y = std::max(uy, vy);
        if (vertical && (ux == hx || ux == gx)) {
            bool supply_end = ux == hx && (hi_y == h - 1 || lo_y == 1);
            if (lo_y == 0) kill(a);                         // insulate below s2
            else if (hi_y <= hy) {                          // south feeder, up
                if (supply_end) orient_cap(uy < vy, random_cap(rng, p));
                else orient(uy < vy);
            } else {                                        // north feeder, down
                if (supply_end) orient_cap(uy > vy, random_cap(rng, p));
                else orient(uy > vy);
            }
            continue;
        }
        if (horizontal && uy == hy) {
            if (std::max(ux, vx) == w - 1) {
                // The sink's direct intake stays modest, so the western
                // exit through the pipe carries a real share.
                Cap gate = random_cap(rng, p);
                net.cap[ux < vx ? fwd_dart(a) : bwd_dart(a)] = gate;
                net.cap[ux < vx ? bwd_dart(a) : fwd_dart(a)] = Cap(Rat(0));
            } else {
                both_ways();  // exit row serves both exits of both vertices
            }
            continue;
        }
        bool in_band = (lo_y == hy - 1 && hi_y == hy) || (lo_y == hy && hi_y == hy + 1);
        if (in_band) {
            if (vertical && ux == 0 && lo_y == hy - 1) orient(uy > vy);  // pipe entry
            else if (vertical && ux == w - 1 && lo_y == hy - 1)
                orient_cap(uy < vy, random_cap(rng, p));  // pipe exit, modest
            else kill(a);
            continue;
        }
        if (vertical && (ux == 0 || ux == w - 1) && hi_y <= hy - 1) {
            orient(ux == 0 ? uy > vy : uy < vy);  // pipe walls
            continue;
        }
        if (horizontal && uy == 0) {
            orient(ux < vx);  // pipe floor, eastbound
            continue;
        }
        // Insulation of the pipe and of the stretch below s2.
        bool touches_pipe_wall =
            (ux == 0 || vx == 0 || ux == w - 1 || vx == w - 1) && lo_y <= hy - 1 &&
            !(vertical && (ux == 0 || ux == w - 1));
        bool touches_floor = lo_y == 0;
        bool touches_dead_column = (u == hx || v == hx);  // vertex (hx, 0)
        if (touches_pipe_wall || touches_floor || touches_dead_column) {
            kill(a);
            continue;
        }
    }
    // The designated infrastructure must not be throttled by stray vertex
    // capacities; only the hubs stay tight.
    auto clear_vcap = [&](int x, int y) {
        if (x >= 0 && x < w && y >= 0 && y < h) net.vcap[y * w + x] = Cap::infinite();
    };
    for (int y = 0; y < h; ++y) {
        clear_vcap(hx, y);  // feeder columns
        if (gx >= 1) clear_vcap(gx, y);
        if (y <= hy) {
            clear_vcap(0, y);      // pipe west wall
            clear_vcap(w - 1, y);  // pipe east wall
        }
    }
    for (int x = 0; x < w; ++x) {
        clear_vcap(x, hy);  // exit row
        clear_vcap(x, 0);   // pipe floor
    }
    long long u_cap = std::max(1LL, p.max_cap);
    net.vcap[hy * w + hx] = Cap(Rat(i128(1 + rng_below(rng, u_cap))));
    if (gx >= 1) net.vcap[hy * w + gx] = Cap(Rat(i128(1 + rng_below(rng, u_cap))));
    (void)twin;
}

} // namespace

FlowNetwork generate(const GenParams& p) {
    if (p.n < 4 || p.k < 2 || p.max_cap < 1 || p.density_pct < 0 || p.density_pct > 100)
        fail(Err::ParamError, "generator parameters out of range");
    int w = 2;
    while ((w + 1) * (w + 1) <= p.n) ++w;
    int h = std::max(2, p.n / w);
    int n = w * h;
    auto vid = [&](int x, int y) { return y * w + x; };

    std::mt19937_64 rng(p.seed);

    // A share of the three-terminal instances get the planted crossing core,
    // which is what makes the k=3 saddle scenario common.
    bool planted = p.k == 3 && w >= 4 && h >= 4 && p.seed % 5 < 2;
    std::vector<Role> role(n, Role::None);
    if (planted) {
        role[vid(w / 2, h - 1)] = Role::Source;
        role[vid(w / 2, 1)] = Role::Source;
        role[vid(w - 1, h / 2)] = Role::Sink;
    } else {
        // Terminals on the outer face unless asked otherwise.
        std::vector<VertexId> pool;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (p.inner_terminals || x == 0 || x == w - 1 || y == 0 || y == h - 1)
                    pool.push_back(vid(x, y));
        if ((int)pool.size() < p.k)
            fail(Err::ParamError, "too many terminals for this size");
        std::vector<VertexId> picked;
        for (int i = 0; i < p.k; ++i) {
            long long j = rng_below(rng, (long long)pool.size());
            picked.push_back(pool[j]);
            pool.erase(pool.begin() + j);
        }
        int k1 = 1 + (int)rng_below(rng, p.k - 1);
        for (int i = 0; i < p.k; ++i)
            role[picked[i]] = i < k1 ? Role::Source : Role::Sink;
    }

    // Grid edges: horizontals, verticals, one diagonal per kept cell.
    // dir: 0 E, 1 NE, 2 N, 3 NW (the rest are reverses).
    std::vector<std::vector<std::pair<int, ArcId>>> at(n);  // (compass dir 0..7, arc)
    struct EdgeRec {
        int u, v, du;  // du: compass direction of v as seen from u
    };
    std::vector<EdgeRec> edges;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) edges.push_back({vid(x, y), vid(x + 1, y), 0});
            if (y + 1 < h) edges.push_back({vid(x, y), vid(x, y + 1), 2});
            if (x + 1 < w && y + 1 < h && rng_below(rng, 100) < p.density_pct) {
                if (rng_below(rng, 2) == 0)
                    edges.push_back({vid(x, y), vid(x + 1, y + 1), 1});
                else
                    edges.push_back({vid(x + 1, y), vid(x, y + 1), 3});
            }
        }

    NetworkBuilder b;
    b.set_regime(p.regime);
    for (int v = 0; v < n; ++v) {
        Cap vc = Cap::infinite();
        if (role[v] == Role::None && rng_below(rng, 2) == 0) vc = random_cap(rng, p);
        b.add_vertex(vc, role[v]);
    }
    ArcId bottom_arc = -1;
    bool bottom_east = true;
    for (const EdgeRec& e : edges) {
        int u = e.u, v = e.v, du = e.du;
        if (rng_below(rng, 2) == 0) {
            std::swap(u, v);
            du = (du + 4) % 8;
        }
        Cap cf = random_cap(rng, p);
        Cap cb = rng_below(rng, 2) == 0 ? Cap(Rat(0)) : random_cap(rng, p);
        // Strip terminal-violating directions.
        if (role[v] == Role::Source || role[u] == Role::Sink) cf = Cap(Rat(0));
        if (role[u] == Role::Source || role[v] == Role::Sink) cb = Cap(Rat(0));
        ArcId a = b.add_arc(u, v, cf, cb);
        at[u].push_back({du, a});
        at[v].push_back({(du + 4) % 8, a});
        if (e.u == vid(0, 0) && e.v == vid(1, 0)) {
            bottom_arc = a;
            bottom_east = (u == e.u);
        }
    }
    // Clockwise from north: N, NE, E, SE, S, SW, W, NW.
    const int order[8] = {2, 1, 0, 7, 6, 5, 4, 3};
    std::vector<int> rank(8);
    for (int i = 0; i < 8; ++i) rank[order[i]] = i;
    for (int v = 0; v < n; ++v) {
        std::sort(at[v].begin(), at[v].end(),
                  [&](const std::pair<int, ArcId>& a, const std::pair<int, ArcId>& c) {
                      return rank[a.first] < rank[c.first];
                  });
        std::vector<ArcId> rot;
        for (auto& [d, a] : at[v]) rot.push_back(a);
        b.set_rotation(v, rot);
    }
    internal_check(bottom_arc >= 0, "grid lost its bottom edge");
    // The face below the bottom row is the infinite one.
    b.set_outer(bottom_east ? bwd_dart(bottom_arc) : fwd_dart(bottom_arc));
    FlowNetwork net = b.build();
    if (planted) {
        plant_crossing_core(net, w, h, rng, p);
        for (DartId d = 0; d < net.emb.dart_count(); ++d) {
            if (net.is_source(net.emb.head(d)) || net.is_sink(net.emb.tail(d)))
                net.cap[d] = Cap(Rat(0));
        }
    }
    validate_instance(net);
    return net;
}

std::string write_flow(const FlowNetwork& net, const Flow& f) {
    std::ostringstream out;
    for (ArcId a = 0; a < net.emb.arc_count(); ++a) {
        Rat v = f[fwd_dart(a)] - f[bwd_dart(a)];
        out << net.emb.tail(fwd_dart(a)) << " " << net.emb.head(fwd_dart(a)) << " "
            << v.str() << "\n";
    }
    return out.str();
}

Flow parse_flow(const FlowNetwork& net, const std::string& text) {
    Flow f = zero_flow(net);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    ArcId a = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string t1, t2, t3;
        if (!(ls >> t1) || t1[0] == '#') continue;
        if (!(ls >> t2 >> t3)) parse_fail(lineno, "flow line needs 'tail head value'");
        if (a >= net.emb.arc_count()) parse_fail(lineno, "more flow lines than arcs");
        if (to_ll(t1, lineno) != net.emb.tail(fwd_dart(a)) ||
            to_ll(t2, lineno) != net.emb.head(fwd_dart(a)))
            parse_fail(lineno, "flow line does not match arc " + std::to_string(a));
        Rat v = parse_rat(t3);
        if (v.is_negative()) f[bwd_dart(a)] = -v;
        else f[fwd_dart(a)] = v;
        ++a;
    }
    if (a != net.emb.arc_count()) fail(Err::ParseError, "missing flow lines");
    return f;
}

OracleResult oracle_maxflow(const FlowNetwork& net) {
    GadgetResult bar = build_split(net);
    Flow fbar = max_flow(bar.net);
    OracleResult r;
    r.flow = restrict_flow(net, bar.map, fbar);
    r.value = flow_value(net, r.flow);
    if (strict_checks())
        internal_check(is_feasible(net, r.flow), "oracle flow infeasible");
    return r;
}

} // namespace pmf
