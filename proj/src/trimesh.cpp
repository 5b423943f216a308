#include "cdg/trimesh.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cdg {

namespace {
inline std::uint64_t dir_key(int a, int b) {
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}
} // namespace

TriMesh TriMesh::from_faces(std::vector<Point2> points, std::vector<std::array<int, 3>> tris) {
    TriMesh m;
    m.pts_ = std::move(points);
    m.faces_.reserve(tris.size());
    for (auto& t : tris) {
        Face f;
        f.v = t;
        for (int j = 0; j < 3; ++j) {
            require(t[j] >= 0 && t[j] < m.vertex_count(), Errc::InvalidInput,
                    "triangle index out of range");
        }
        if (orientation(m.pts_[t[0]], m.pts_[t[1]], m.pts_[t[2]]) != Orientation::CCW) {
            std::swap(f.v[1], f.v[2]);
        }
        m.faces_.push_back(f);
    }
    m.rebuild_links();
    return m;
}

void TriMesh::rebuild_links() {
    std::unordered_map<std::uint64_t, int> by_edge;
    by_edge.reserve(faces_.size() * 3);
    for (int f = 0; f < face_count(); ++f) {
        for (int j = 0; j < 3; ++j) {
            const int s = faces_[f].v[(j + 1) % 3], t = faces_[f].v[(j + 2) % 3];
            const auto [it, fresh] = by_edge.emplace(dir_key(s, t), f);
            require(fresh, Errc::Internal, "directed edge used twice");
            (void)it;
            faces_[f].nb[j] = -1;
        }
    }
    for (int f = 0; f < face_count(); ++f) {
        for (int j = 0; j < 3; ++j) {
            const int s = faces_[f].v[(j + 1) % 3], t = faces_[f].v[(j + 2) % 3];
            const auto it = by_edge.find(dir_key(t, s));
            if (it != by_edge.end()) faces_[f].nb[j] = it->second;
        }
    }
    vf_.assign(vertex_count(), -1);
    for (int f = 0; f < face_count(); ++f)
        for (int j = 0; j < 3; ++j) vf_[faces_[f].v[j]] = f;
}

int TriMesh::corner_of(int f, int va, int vb) const {
    for (int j = 0; j < 3; ++j) {
        const int s = faces_[f].v[(j + 1) % 3], t = faces_[f].v[(j + 2) % 3];
        if ((s == va && t == vb) || (s == vb && t == va)) return j;
    }
    return -1;
}

std::vector<EdgeRef> TriMesh::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(faces_.size() * 3 / 2);
    for (int f = 0; f < face_count(); ++f) {
        for (int j = 0; j < 3; ++j) {
            const int g = faces_[f].nb[j];
            if (g < 0 || f < g) out.push_back(edge_of(f, j));
        }
    }
    return out;
}

int TriMesh::edge_count() const {
    int n = 0;
    for (int f = 0; f < face_count(); ++f)
        for (int j = 0; j < 3; ++j)
            if (faces_[f].nb[j] < 0 || f < faces_[f].nb[j]) ++n;
    return n;
}

std::pair<int, int> TriMesh::find_edge(const EdgeRef& e) const {
    if (e.a < 0 || e.b >= vertex_count() || vf_[e.a] < 0) return {-1, -1};
    // Rotate around e.a looking for a face that also contains e.b.
    const int start = vf_[e.a];
    int f = start;
    for (int dir = 0; dir < 2; ++dir) {
        f = start;
        int guard = 0;
        while (f >= 0 && guard++ <= face_count()) {
            int i = -1;
            for (int j = 0; j < 3; ++j)
                if (faces_[f].v[j] == e.a) i = j;
            if (i < 0) break; // stale incidence; fall through to scan
            const int c = corner_of(f, e.a, e.b);
            if (c >= 0) return {f, c};
            f = faces_[f].nb[(i + 1 + dir) % 3];
            if (f == start) break;
        }
    }
    for (int g = 0; g < face_count(); ++g) {
        const int c = corner_of(g, e.a, e.b);
        if (c >= 0) return {g, c};
    }
    return {-1, -1};
}

bool TriMesh::is_boundary_edge(const EdgeRef& e) const {
    const auto [f, c] = find_edge(e);
    require(f >= 0, Errc::InvalidInput, "edge not in mesh");
    return faces_[f].nb[c] < 0;
}

std::pair<int, int> TriMesh::opposite_vertices(const EdgeRef& e) const {
    const auto [f, c] = find_edge(e);
    require(f >= 0, Errc::InvalidInput, "edge not in mesh");
    const int g = faces_[f].nb[c];
    if (g < 0) return {faces_[f].v[c], -1};
    return {faces_[f].v[c], faces_[g].v[corner_of(g, e.a, e.b)]};
}

std::vector<EdgeRef> TriMesh::boundary() const {
    std::unordered_map<int, int> next_of; // boundary directed edges s -> t
    for (int f = 0; f < face_count(); ++f) {
        for (int j = 0; j < 3; ++j) {
            if (faces_[f].nb[j] < 0)
                next_of[faces_[f].v[(j + 1) % 3]] = faces_[f].v[(j + 2) % 3];
        }
    }
    std::vector<EdgeRef> loop;
    if (next_of.empty()) return loop;
    const int first = next_of.begin()->first;
    int s = first;
    do {
        const auto it = next_of.find(s);
        require(it != next_of.end(), Errc::Internal, "open boundary chain");
        loop.emplace_back(s, it->second);
        s = it->second;
    } while (s != first && loop.size() <= next_of.size());
    return loop;
}

std::vector<int> TriMesh::vertex_star_faces(int v) const {
    std::vector<int> out;
    if (v < 0 || v >= vertex_count() || vf_[v] < 0) return out;
    const auto corner_with = [&](int f) {
        for (int j = 0; j < 3; ++j)
            if (faces_[f].v[j] == v) return j;
        fail(Errc::Internal, "stale vertex incidence");
    };
    const int start = vf_[v];
    int f = start;
    while (f >= 0) {
        out.push_back(f);
        f = faces_[f].nb[(corner_with(f) + 1) % 3];
        if (f == start) return out; // closed fan
    }
    // Hit the boundary; sweep the other way from start.
    f = faces_[start].nb[(corner_with(start) + 2) % 3];
    while (f >= 0) {
        out.push_back(f);
        f = faces_[f].nb[(corner_with(f) + 2) % 3];
    }
    return out;
}

std::vector<int> TriMesh::vertex_neighbors(int v) const {
    std::vector<int> out;
    for (const int f : vertex_star_faces(v)) {
        for (int j = 0; j < 3; ++j) {
            const int w = faces_[f].v[j];
            if (w != v && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
    }
    return out;
}

bool TriMesh::flip_quad_convex(const EdgeRef& e) const {
    const auto [f, c] = find_edge(e);
    require(f >= 0, Errc::InvalidInput, "edge not in mesh");
    const int g = faces_[f].nb[c];
    if (g < 0) return false;
    const int p = faces_[f].v[c];
    const int q = faces_[g].v[corner_of(g, e.a, e.b)];
    const Orientation ou = orientation(pts_[p], pts_[q], pts_[e.a]);
    const Orientation ov = orientation(pts_[p], pts_[q], pts_[e.b]);
    return (ou == Orientation::CCW && ov == Orientation::CW) ||
           (ou == Orientation::CW && ov == Orientation::CCW);
}

EdgeRef TriMesh::flip(const EdgeRef& e) {
    const auto [f, cf] = find_edge(e);
    require(f >= 0, Errc::InvalidInput, "edge not in mesh");
    const int g = faces_[f].nb[cf];
    require(g >= 0, Errc::BoundaryEdge, "cannot flip a boundary edge");
    require(flip_quad_convex(e), Errc::Internal, "flip of a non-convex quad");
    const int cg = corner_of(g, e.a, e.b);

    const int p = faces_[f].v[cf];
    const int q = faces_[g].v[cg];
    const int u = faces_[f].v[(cf + 1) % 3];
    const int v = faces_[f].v[(cf + 2) % 3];

    const int A = faces_[f].nb[(cf + 1) % 3]; // across (v, p)
    const int B = faces_[f].nb[(cf + 2) % 3]; // across (p, u)
    // In g the shared edge runs v -> u, so v sits at cg+1 and u at cg+2.
    const int C = faces_[g].nb[(cg + 1) % 3]; // across (u, q)
    const int D = faces_[g].nb[(cg + 2) % 3]; // across (q, v)

    faces_[f].v = {p, u, q};
    faces_[f].nb = {C, g, B};
    faces_[g].v = {q, v, p};
    faces_[g].nb = {A, f, D};

    const auto repoint = [&](int h, int from, int to) {
        if (h < 0) return;
        for (int j = 0; j < 3; ++j)
            if (faces_[h].nb[j] == from) faces_[h].nb[j] = to;
    };
    repoint(A, f, g);
    repoint(C, g, f);

    vf_[p] = f;
    vf_[q] = g;
    vf_[u] = f;
    vf_[v] = g;
    return EdgeRef(p, q);
}

TriMesh::Location TriMesh::locate(Point2 p, int hint_face) const {
    Location loc;
    if (faces_.empty()) return loc;
    int f = (hint_face >= 0 && hint_face < face_count()) ? hint_face : 0;
    int steps = 0;
    const int max_steps = 4 * face_count() + 16;
    int prev = -1;
    while (steps++ < max_steps) {
        int n_colinear = 0;
        int colinear[3] = {-1, -1, -1};
        int exit = -1;
        for (int j = 0; j < 3; ++j) {
            const int s = faces_[f].v[(j + 1) % 3], t = faces_[f].v[(j + 2) % 3];
            const Orientation o = orientation(pts_[s], pts_[t], p);
            if (o == Orientation::CW) {
                const int g = faces_[f].nb[j];
                if (g >= 0 && g != prev) {
                    exit = j;
                    break;
                }
                if (g < 0) {
                    loc.kind = Location::Outside;
                    loc.face = f;
                    return loc;
                }
                if (exit < 0) exit = j;
            } else if (o == Orientation::Colinear) {
                colinear[n_colinear++] = j;
            }
        }
        if (exit >= 0) {
            prev = f;
            f = faces_[f].nb[exit];
            continue;
        }
        // p is inside the closed face
        for (int j = 0; j < 3 && n_colinear > 0; ++j) {
            if (p == pts_[faces_[f].v[j]]) {
                loc.kind = Location::OnVertex;
                loc.vertex = faces_[f].v[j];
                return loc;
            }
        }
        if (n_colinear == 1) {
            loc.kind = Location::OnEdge;
            loc.face = f;
            loc.corner = colinear[0];
            return loc;
        }
        require(n_colinear == 0, Errc::Internal, "inconsistent location classification");
        loc.kind = Location::InFace;
        loc.face = f;
        return loc;
    }
    // Walk did not settle (possible in badly non-Delaunay meshes): scan.
    for (int g = 0; g < face_count(); ++g) {
        bool inside = true;
        int colinear_at = -1;
        for (int j = 0; j < 3; ++j) {
            const Orientation o =
                orientation(pts_[faces_[g].v[(j + 1) % 3]], pts_[faces_[g].v[(j + 2) % 3]], p);
            if (o == Orientation::CW) inside = false;
            if (o == Orientation::Colinear) colinear_at = j;
        }
        if (!inside) continue;
        for (int j = 0; j < 3; ++j) {
            if (p == pts_[faces_[g].v[j]]) {
                loc.kind = Location::OnVertex;
                loc.vertex = faces_[g].v[j];
                return loc;
            }
        }
        if (colinear_at >= 0) {
            loc.kind = Location::OnEdge;
            loc.face = g;
            loc.corner = colinear_at;
        } else {
            loc.kind = Location::InFace;
            loc.face = g;
        }
        return loc;
    }
    loc.kind = Location::Outside;
    loc.face = f;
    return loc;
}

int TriMesh::insert_point(Point2 p, int hint_face) {
    require(finite(p), Errc::InvalidInput, "non-finite point");
    const Location loc = locate(p, hint_face);
    if (loc.kind == Location::OnVertex) return loc.vertex;
    require(loc.kind != Location::Outside, Errc::OutOfRange,
            "point outside the triangulated region");

    const int w = vertex_count();
    pts_.push_back(p);
    vf_.push_back(-1);

    if (loc.kind == Location::InFace) {
        const int f = loc.face;
        const auto [a, b, c] = faces_[f].v;
        const int na = faces_[f].nb[0], nbb = faces_[f].nb[1], nc = faces_[f].nb[2];
        const int t1 = face_count(), t2 = t1 + 1;
        faces_[f].v = {a, b, w};
        faces_[f].nb = {t1, t2, nc};
        faces_.push_back(Face{{b, c, w}, {t2, f, na}});
        faces_.push_back(Face{{c, a, w}, {f, t1, nbb}});
        const auto repoint = [&](int h, int from, int to) {
            if (h < 0) return;
            for (int j = 0; j < 3; ++j)
                if (faces_[h].nb[j] == from) faces_[h].nb[j] = to;
        };
        repoint(na, f, t1);
        repoint(nbb, f, t2);
        vf_[a] = f;
        vf_[b] = t1;
        vf_[c] = t2;
        vf_[w] = f;
        return w;
    }

    // OnEdge: split the edge in its one or two incident faces.
    const int f = loc.face, cf = loc.corner;
    const int x = faces_[f].v[cf];
    const int u = faces_[f].v[(cf + 1) % 3];
    const int v = faces_[f].v[(cf + 2) % 3];
    const int g = faces_[f].nb[cf];
    const int nVX = faces_[f].nb[(cf + 1) % 3];
    const int nXU = faces_[f].nb[(cf + 2) % 3];

    const int fn = face_count();
    faces_[f].v = {x, u, w};
    faces_.push_back(Face{{x, w, v}, {-1, nVX, f}});
    const auto repoint = [&](int h, int from, int to) {
        if (h < 0) return;
        for (int j = 0; j < 3; ++j)
            if (faces_[h].nb[j] == from) faces_[h].nb[j] = to;
    };
    repoint(nVX, f, fn);

    if (g < 0) {
        faces_[f].nb = {-1, fn, nXU};
        vf_[x] = f;
        vf_[u] = f;
        vf_[v] = fn;
        vf_[w] = f;
        return w;
    }

    const int cg = corner_of(g, u, v);
    const int y = faces_[g].v[cg];
    const int nUY = faces_[g].nb[(cg + 1) % 3];
    const int nYV = faces_[g].nb[(cg + 2) % 3];
    const int gn = face_count();
    faces_[g].v = {y, v, w};
    faces_[g].nb = {fn, gn, nYV};
    faces_.push_back(Face{{y, w, u}, {f, nUY, g}});
    repoint(nUY, g, gn);

    faces_[f].nb = {gn, fn, nXU};
    faces_[fn].nb = {g, nVX, f};

    vf_[x] = f;
    vf_[u] = f;
    vf_[v] = fn;
    vf_[y] = g;
    vf_[w] = f;
    return w;
}

void TriMesh::validate() const {
    std::unordered_map<std::uint64_t, int> seen;
    std::vector<char> referenced(vertex_count(), 0);
    for (int f = 0; f < face_count(); ++f) {
        const auto& fc = faces_[f];
        require(orientation(pts_[fc.v[0]], pts_[fc.v[1]], pts_[fc.v[2]]) == Orientation::CCW,
                Errc::Internal, "face not CCW");
        for (int j = 0; j < 3; ++j) {
            referenced[fc.v[j]] = 1;
            const int s = fc.v[(j + 1) % 3], t = fc.v[(j + 2) % 3];
            require(seen.emplace(dir_key(s, t), f).second, Errc::Internal,
                    "directed edge reused");
            const int g = fc.nb[j];
            if (g >= 0) {
                require(g < face_count(), Errc::Internal, "dangling neighbor");
                require(corner_of(g, s, t) >= 0, Errc::Internal, "asymmetric neighbor link");
                require(faces_[g].nb[corner_of(g, s, t)] == f, Errc::Internal,
                        "asymmetric neighbor link");
            }
        }
    }
    int nv = 0;
    for (const char r : referenced) nv += r;
    const int ne = edge_count();
    const int nf = face_count();
    if (nf > 0) {
        require(nv - ne + nf == 1, Errc::Internal, "Euler relation violated");
        const auto loop = boundary();
        int nb_edges = 0;
        for (int f = 0; f < nf; ++f)
            for (int j = 0; j < 3; ++j)
                if (faces_[f].nb[j] < 0) ++nb_edges;
        require(static_cast<int>(loop.size()) == nb_edges, Errc::Internal,
                "boundary is not a single loop");
    }
}

double TriMesh::polyhedron_area() const {
    double a = 0.0;
    for (int f = 0; f < face_count(); ++f) a += triangle_area(triangle(f));
    return a;
}

} // namespace cdg
