#pragma once

#include <vector>

#include "pmf/rational.hpp"

namespace pmf {

using VertexId = int;
using ArcId = int;
using DartId = int;
using FaceId = int;

// Each input arc owns a dart pair: dart 2a runs tail->head, dart 2a+1 is its
// reversal.  rev is the fixed-point-free involution d ^ 1.
inline DartId fwd_dart(ArcId a) { return 2 * a; }
inline DartId bwd_dart(ArcId a) { return 2 * a + 1; }
inline ArcId arc_of(DartId d) { return d >> 1; }
inline DartId rev(DartId d) { return d ^ 1; }
inline bool is_fwd(DartId d) { return (d & 1) == 0; }

struct ArcDef {
    VertexId tail;
    VertexId head;
};

// Combinatorial embedding of a directed planar multigraph, given as a
// rotation system: the clockwise order of incident darts at each vertex.
// Apex vertices are exempt from the planar structure; darts touching an
// apex appear in no rotation and belong to no face.
class Embedding {
public:
    Embedding() = default;
    // rotations[v] lists incident arc ids in clockwise order; the dart at v
    // is inferred from which endpoint v is.  outer_dart designates the face
    // on its left as the infinite face (-1: first traced face).
    Embedding(int vertex_count,
              std::vector<ArcDef> arcs,
              const std::vector<std::vector<ArcId>>& rotations,
              std::vector<char> apex,
              DartId outer_dart = -1);

    int vertex_count() const { return vertex_count_; }
    int arc_count() const { return (int)arcs_.size(); }
    int dart_count() const { return 2 * (int)arcs_.size(); }
    int face_count() const { return (int)faces_.size(); }

    VertexId tail(DartId d) const { return is_fwd(d) ? arcs_[arc_of(d)].tail : arcs_[arc_of(d)].head; }
    VertexId head(DartId d) const { return tail(rev(d)); }
    bool is_apex(VertexId v) const { return apex_[v] != 0; }
    bool planar_dart(DartId d) const { return !is_apex(tail(d)) && !is_apex(head(d)); }

    const std::vector<DartId>& rotation(VertexId v) const { return rot_[v]; }
    // All darts with tail v (planar and apex alike), ascending ids.
    const std::vector<DartId>& out_darts(VertexId v) const { return out_[v]; }
    int degree(VertexId v) const { return (int)out_[v].size(); }

    // Next dart clockwise around tail(d); undefined for apex-incident darts.
    DartId rot_next(DartId d) const {
        VertexId v = tail(d);
        int p = rot_pos_[d];
        const auto& r = rot_[v];
        return r[(p + 1 == (int)r.size()) ? 0 : p + 1];
    }
    DartId rot_prev(DartId d) const {
        VertexId v = tail(d);
        int p = rot_pos_[d];
        const auto& r = rot_[v];
        return r[p == 0 ? (int)r.size() - 1 : p - 1];
    }
    int rot_pos(DartId d) const { return rot_pos_[d]; }

    // Walks the face boundary on the left of d.
    DartId face_next(DartId d) const { return rot_next(rev(d)); }

    FaceId face_of(DartId d) const { return face_of_[d]; }           // -1 for apex darts
    FaceId left_face(DartId d) const { return face_of_[d]; }
    FaceId right_face(DartId d) const { return face_of_[rev(d)]; }
    const std::vector<DartId>& face_darts(FaceId f) const { return faces_[f]; }
    FaceId outer_face() const { return outer_; }

private:
    void trace_faces();
    void check_euler() const;

    int vertex_count_ = 0;
    std::vector<ArcDef> arcs_;
    std::vector<char> apex_;
    std::vector<std::vector<DartId>> rot_;
    std::vector<std::vector<DartId>> out_;
    std::vector<int> rot_pos_;
    std::vector<FaceId> face_of_;
    std::vector<std::vector<DartId>> faces_;
    FaceId outer_ = -1;
};

// Dual of the planar part: one vertex per face, one arc per planar dart,
// directed from the dart's left face to its right face, l(e*) = length(e).
struct DualGraph {
    int face_count = 0;
    std::vector<FaceId> from;   // per dart; -1 for apex darts
    std::vector<FaceId> to;
    std::vector<Cap> len;
};

DualGraph dual(const Embedding& emb, const std::vector<Cap>& lengths);

} // namespace pmf
