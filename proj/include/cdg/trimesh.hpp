#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "cdg/geometry.hpp"
#include "cdg/predicates.hpp"

namespace cdg {

// Undirected edge between two vertex indices, canonicalized so a < b.
struct EdgeRef {
    int a = -1;
    int b = -1;

    EdgeRef() = default;
    EdgeRef(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend bool operator<(const EdgeRef& l, const EdgeRef& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

struct EdgeRefHash {
    std::size_t operator()(const EdgeRef& e) const {
        return std::hash<std::uint64_t>()((std::uint64_t(std::uint32_t(e.a)) << 32) |
                                          std::uint32_t(e.b));
    }
};

using EdgeSet = std::unordered_set<EdgeRef, EdgeRefHash>;

// Triangulation of a planar point set. Faces are CCW triangles storing vertex
// indices and, per corner, the neighboring face across the opposite edge
// (-1 on the boundary). A corner (face, i) doubles as the half-edge opposite
// vertex i, which is all the connectivity the flip and insertion walks need.
class TriMesh {
public:
    struct Face {
        std::array<int, 3> v{-1, -1, -1};
        std::array<int, 3> nb{-1, -1, -1};
    };

    TriMesh() = default;

    // Builds neighbor links from a triangle list and validates the complex.
    static TriMesh from_faces(std::vector<Point2> points, std::vector<std::array<int, 3>> tris);

    const std::vector<Point2>& points() const { return pts_; }
    const std::vector<Face>& faces() const { return faces_; }
    int vertex_count() const { return static_cast<int>(pts_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    Point2 point(int v) const { return pts_[v]; }
    Triangle triangle(int f) const {
        return {pts_[faces_[f].v[0]], pts_[faces_[f].v[1]], pts_[faces_[f].v[2]]};
    }

    EdgeRef edge_of(int f, int corner) const {
        return EdgeRef(faces_[f].v[(corner + 1) % 3], faces_[f].v[(corner + 2) % 3]);
    }

    // Every undirected edge exactly once.
    std::vector<EdgeRef> edges() const;
    int edge_count() const;

    bool has_edge(const EdgeRef& e) const { return find_edge(e).first >= 0; }
    // (face, corner) with the corner opposite e; face == -1 if absent.
    std::pair<int, int> find_edge(const EdgeRef& e) const;
    bool is_boundary_edge(const EdgeRef& e) const;

    // Vertex indices opposite e in its one or two incident faces (second is -1
    // for a boundary edge).
    std::pair<int, int> opposite_vertices(const EdgeRef& e) const;

    // Boundary edges in order around the (single) boundary loop.
    std::vector<EdgeRef> boundary() const;

    std::vector<int> vertex_star_faces(int v) const;
    std::vector<int> vertex_neighbors(int v) const;

    // Diagonal flip of an interior edge whose quad is strictly convex.
    // Returns the new edge.
    EdgeRef flip(const EdgeRef& e);

    // True when the two faces at e form a strictly convex quadrilateral, the
    // geometric admissibility condition for flip().
    bool flip_quad_convex(const EdgeRef& e) const;

    struct Location {
        enum Kind { InFace, OnEdge, OnVertex, Outside } kind = Outside;
        int face = -1;   // containing face (InFace/OnEdge), or last face visited
        int corner = -1; // for OnEdge: corner opposite the edge
        int vertex = -1; // for OnVertex
    };
    // Straight-walk point location with exact orientation tests.
    Location locate(Point2 p, int hint_face = 0) const;

    // Inserts p by splitting the containing face or edge; no flips are made.
    // Returns the new vertex index, or the existing one if p coincides with a
    // vertex. Fails with OutOfRange if p lies outside the triangulated region.
    int insert_point(Point2 p, int hint_face = 0);

    // Consistency check: CCW faces, symmetric neighbor links, each directed
    // edge used once, Euler relation for a disk. Throws Internal on failure.
    void validate() const;

    // Sum of face areas (serial, deterministic order).
    double polyhedron_area() const;

private:
    friend class MeshBuilder;
    int corner_of(int f, int va, int vb) const; // corner opposite edge (va, vb)
    void rebuild_links();

    std::vector<Point2> pts_;
    std::vector<Face> faces_;
    std::vector<int> vf_; // some incident face per vertex (-1 if none)
};

} // namespace cdg
