#include "pmf/embedding.hpp"

#include <numeric>

namespace pmf {

Embedding::Embedding(int vertex_count,
                     std::vector<ArcDef> arcs,
                     const std::vector<std::vector<ArcId>>& rotations,
                     std::vector<char> apex,
                     DartId outer_dart)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), apex_(std::move(apex)) {
    if ((int)apex_.size() != vertex_count_)
        fail(Err::ValidationError, "apex mask size mismatch");
    if ((int)rotations.size() != vertex_count_)
        fail(Err::ValidationError, "rotation count mismatch");

    int m = (int)arcs_.size();
    for (int a = 0; a < m; ++a) {
        const ArcDef& e = arcs_[a];
        if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
            fail(Err::ValidationError, "arc endpoint out of range");
        if (e.tail == e.head)
            fail(Err::ValidationError, "self-loops are not supported");
    }

    out_.assign(vertex_count_, {});
    for (int a = 0; a < m; ++a) {
        out_[arcs_[a].tail].push_back(fwd_dart(a));
        out_[arcs_[a].head].push_back(bwd_dart(a));
    }

    // Resolve rotation entries (arc ids) to the dart tailed at that vertex.
    rot_.assign(vertex_count_, {});
    rot_pos_.assign(2 * m, -1);
    std::vector<int> seen(2 * m, 0);
    for (VertexId v = 0; v < vertex_count_; ++v) {
        if (apex_[v]) {
            if (!rotations[v].empty())
                fail(Err::MalformedRotation, "apex vertex has a rotation");
            continue;
        }
        rot_[v].reserve(rotations[v].size());
        for (ArcId a : rotations[v]) {
            if (a < 0 || a >= m)
                fail(Err::MalformedRotation, "rotation references unknown arc");
            DartId d;
            if (arcs_[a].tail == v) d = fwd_dart(a);
            else if (arcs_[a].head == v) d = bwd_dart(a);
            else fail(Err::MalformedRotation, "rotation lists non-incident arc");
            if (seen[d]++)
                fail(Err::MalformedRotation, "dart appears twice in rotations");
            rot_pos_[d] = (int)rot_[v].size();
            rot_[v].push_back(d);
        }
    }
    for (DartId d = 0; d < 2 * m; ++d) {
        bool planar = planar_dart(d);
        if (planar && !seen[d])
            fail(Err::MalformedRotation, "dart missing from its vertex's rotation");
        if (!planar && seen[d])
            fail(Err::MalformedRotation, "apex-incident dart listed in a rotation");
    }

    trace_faces();
    check_euler();

    if (outer_dart >= 0) {
        if (outer_dart >= 2 * m || face_of_[outer_dart] < 0)
            fail(Err::ValidationError, "outer-face dart is not a planar dart");
        outer_ = face_of_[outer_dart];
    } else {
        outer_ = faces_.empty() ? -1 : 0;
    }
}

void Embedding::trace_faces() {
    int nd = dart_count();
    face_of_.assign(nd, -1);
    faces_.clear();
    for (DartId d0 = 0; d0 < nd; ++d0) {
        if (face_of_[d0] >= 0 || !planar_dart(d0)) continue;
        FaceId f = (FaceId)faces_.size();
        faces_.emplace_back();
        DartId d = d0;
        do {
            internal_check(face_of_[d] < 0, "face trace revisits a dart");
            face_of_[d] = f;
            faces_[f].push_back(d);
            d = face_next(d);
        } while (d != d0);
    }
}

void Embedding::check_euler() const {
    // Euler per connected component of the planar part (components with at
    // least one dart): V - E + F = 2, with F counting traced face cycles.
    std::vector<int> comp(vertex_count_, -1);
    int ncomp = 0;
    std::vector<VertexId> stack;
    for (VertexId v0 = 0; v0 < vertex_count_; ++v0) {
        if (comp[v0] >= 0 || apex_[v0] || rot_[v0].empty()) continue;
        comp[v0] = ncomp;
        stack.push_back(v0);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (DartId d : rot_[v]) {
                VertexId w = head(d);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<long long> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
    for (VertexId v = 0; v < vertex_count_; ++v)
        if (comp[v] >= 0) ++vcnt[comp[v]];
    for (ArcId a = 0; a < (int)arcs_.size(); ++a)
        if (planar_dart(fwd_dart(a))) ++ecnt[comp[arcs_[a].tail]];
    for (const auto& f : faces_)
        ++fcnt[comp[tail(f.front())]];
    for (int c = 0; c < ncomp; ++c) {
        if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
            fail(Err::EulerViolation,
                 "V-E+F = " + std::to_string(vcnt[c] - ecnt[c] + fcnt[c]) +
                     " on a planar component");
    }
}

DualGraph dual(const Embedding& emb, const std::vector<Cap>& lengths) {
    if ((int)lengths.size() != emb.dart_count())
        fail(Err::ValidationError, "length vector size mismatch");
    DualGraph g;
    g.face_count = emb.face_count();
    int nd = emb.dart_count();
    g.from.assign(nd, -1);
    g.to.assign(nd, -1);
    g.len.assign(nd, Cap());
    for (DartId d = 0; d < nd; ++d) {
        if (emb.face_of(d) < 0) continue;
        if (lengths[d].is_negative())
            fail(Err::NegativeLength, "dual length below zero");
        g.from[d] = emb.left_face(d);
        g.to[d] = emb.right_face(d);
        g.len[d] = lengths[d];
    }
    return g;
}

} // namespace pmf
