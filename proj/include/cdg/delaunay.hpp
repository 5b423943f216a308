#pragma once

#include <optional>

#include "cdg/grid.hpp"
#include "cdg/trimesh.hpp"

namespace cdg {

enum class FlipDecision { Replace, Keep, Tie };

// Incircle-based flip test for an interior edge. Tie is the exactly
// cocircular case. A non-convex flip quad always reports Keep (the flip
// would be geometrically inadmissible). Throws BoundaryEdge.
FlipDecision angle_flip_test(const TriMesh& mesh, const EdgeRef& e);

// Sum of the two angles opposite e across its incident faces.
double opposite_angle_sum(const TriMesh& mesh, const EdgeRef& e);

enum class EpsFlip { Pass, Fail };

// Pass iff the opposite-angle sum is <= pi + eps. Near the threshold the
// floating sum is retried in long double; eps == 0 delegates to the exact
// incircle predicate.
EpsFlip epsilon_angle_flip_test(const TriMesh& mesh, const EdgeRef& e, double eps);

// A valid (not necessarily Delaunay) triangulation of the convex hull whose
// vertex set is exactly the input. Throws AllColinear / DuplicatePoints.
TriMesh triangulate(const std::vector<Point2>& points);

struct LegalizeOptions {
    EdgeSet protected_edges;   // never flipped; a strict Replace verdict on one is an error
    EdgeSet frozen_edges;      // never flipped, no verdict enforced (relaxed complexes)
    bool flips_must_involve(int) const; // placeholder, see restrict_to_vertices
    std::optional<std::vector<char>> flip_touch_mask; // if set, only edges with an
                                                      // endpoint marked true are flipped
};

// Lawson legalization: FIFO queue over suspect edges until every flippable
// interior edge passes (Keep or Tie). Cocircular ties keep the incumbent
// unless flipping creates a protected edge; protected edges themselves are
// never flipped. Returns the legalized mesh.
TriMesh lawson_legalize(TriMesh mesh, const EdgeSet& protected_edges);
void lawson_legalize_inplace(TriMesh& mesh, const LegalizeOptions& opt);

// Restores missing target edges by flipping the crossing diagonals, which is
// only attempted through Tie or Replace verdicts (cocircular steering). A
// target whose restoration would need a strictly illegal flip raises
// ProtectedEdgeIllegal.
void force_edges(TriMesh& mesh, const std::vector<EdgeRef>& targets, const EdgeSet& protect);

// Triangulate + legalize in one go (local flips during insertion).
TriMesh delaunay_triangulation(const std::vector<Point2>& points);

// Edges present in every Delaunay triangulation: the closed disk with the
// edge as diameter contains no other point (exact test).
EdgeSet delaunay_graph(const std::vector<Point2>& points);

// Same criterion for one candidate pair.
bool in_delaunay_graph(const std::vector<Point2>& points, const EdgeRef& e);
bool in_delaunay_graph(const std::vector<Point2>& points, const EdgeRef& e,
                       const PointGrid& grid);

// True iff every vertex lying inside a face's circumdisk is within kappa of
// the disk boundary. kappa == 0 is the exact empty-circumdisk property.
bool verify_kappa_delaunay(const TriMesh& mesh, double kappa);

} // namespace cdg
