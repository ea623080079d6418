#pragma once

#include <map>
#include <vector>

#include "graphprod/automorphisms.hpp"
#include "graphprod/geometry.hpp"
#include "graphprod/word.hpp"

namespace gp {

// One coset g<lambda> with lambda complete (the empty set included). The
// representative is suffix-stripped, so coset equality is field equality.
struct DavisVertex {
  VertexSet lambda;
  NormalForm rep;
  auto operator<=>(const DavisVertex&) const = default;
};

// Cosets nested by adding one vertex: lambda(upper) = lambda(lower) + label.
struct DavisEdge {
  int lower = 0;  // indices into DavisBall::vertices
  int upper = 0;
  VertexId label = 0;
};

// Interval cube: corners are keys of rep<lambda + T> over subsets T of axes.
struct DavisCube {
  int bottom = 0;
  VertexSet axes;  // pairwise adjacent, disjoint from the bottom's lambda
};

// All cosets g<lambda> with the canonical representative of length at most
// radius, with the edges and cubes they span. Vertices are sorted by
// shortlex representative, then lambda, so the fundamental domain (rep = 1)
// comes first and indices are reproducible.
struct DavisBall {
  int radius = 0;
  std::vector<DavisVertex> vertices;
  std::vector<DavisEdge> edges;
  std::vector<DavisCube> cubes;  // |axes| >= 2; squares have exactly two
  std::map<DavisVertex, int> index;

  int index_of(const DavisVertex& v) const;  // -1 when absent
};

// Canonical key of g<lambda>; throws InputError unless lambda is a complete
// set of valid vertices.
DavisVertex davis_key(const GraphProduct& p, const Word& g, const VertexSet& lambda);

// Throws UnsupportedError when some vertex group is infinite.
DavisBall build_davis_ball(const GraphProduct& p, int radius);

// Corner indices of a cube, ordered by the subset of axes taken (empty set
// first, bit i of the position toggling axes[i]).
std::vector<int> cube_corners(const GraphProduct& p, const DavisBall& ball,
                              const DavisCube& cube);

// Image of a coset vertex under left translation by g composed after the
// local automorphism: the key of g * local(rep) <sigma(lambda)>. Composing
// two such moves gives (g2 * local2(g1), local2 after local1).
DavisVertex aut_action(const GraphProduct& p, const Word& g,
                       const LocalAutomorphism& local, const DavisVertex& v);

// Number of squares of the ball containing the edge. Exact only for interior
// edges (both endpoint representatives shorter than the radius); boundary
// edges throw PreconditionError since truncation could hide squares.
int edge_square_count(const GraphProduct& p, const DavisBall& ball, const DavisEdge& e);

// Whether the simplicial link of the vertex is flag: every pairwise
// square-linked set of incident edges spans a cube corner. Throws
// PreconditionError for vertices close enough to the boundary that a cube
// could be truncated (rep longer than radius minus the clique number).
bool link_is_flag(const GraphProduct& p, const DavisBall& ball, int vertex_index);

// Desk-scale check that parallelism classes of coset-ball edges correspond
// to the hyperplane keys of the group ball: classes are key-consistent, deep
// keys match bijectively, and square-crossing agrees with transversality.
// Order-two vertex groups only; throws UnsupportedError otherwise.
bool crossing_correspondence(const GraphProduct& p, const DavisBall& ball,
                             const QmBall& qm_ball);

// Product of one chosen non-identity element per vertex along the
// lexicographically first closed vertex sequence (length at most 2|V|)
// that exhausts the graph with cyclically consecutive entries distinct and
// non-adjacent. The resulting normal form admits exactly one reduced word.
// chosen[v] defaults to the first generator of G_v; throws PreconditionError
// when the graph is not atomic.
NormalForm rigid_element(const GraphProduct& p, std::vector<GroupValue> chosen = {});

// All local automorphisms fixing g. Finite vertex groups only.
std::vector<LocalAutomorphism> fixing_locals(const GraphProduct& p, const Word& g);

// Finite piece of the combinatorial axis of g = s3*s1 for an induced
// geodesic v1..v4: the coset path through chambers g^k and g^k*s3 for
// |k| <= k_range. geodesic reports whether the chamber word stays reduced.
struct AxisSegment {
  std::vector<DavisVertex> path;  // consecutive entries are nested cosets
  bool geodesic = false;
};
AxisSegment axis_path(const GraphProduct& p, const std::vector<VertexId>& vpath,
                      const std::vector<GroupValue>& s, int k_range);

}  // namespace gp
