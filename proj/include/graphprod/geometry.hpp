#pragma once

#include <map>
#include <set>
#include <vector>

#include "graphprod/word.hpp"

namespace gp {

// A hyperplane of the quasi-median Cayley graph, stored as its canonical key:
// the label u plus the minimal-length representative of the carrier coset
// g<star(u)>. Two hyperplanes are equal iff their keys are.
struct Hyperplane {
  VertexId label = 0;
  NormalForm base;
  auto operator<=>(const Hyperplane&) const = default;
};

// Projection of a point onto a clique base*G_u. 0 names the sector containing
// the clique representative base; any other value v names the sector reached
// through base*v.
using SectorLabel = GroupValue;
inline constexpr SectorLabel kIdentitySector = 0;

// A coset rep<lambda>; rep is the unique minimal-length member (suffix-free
// on lambda).
struct ParabolicCoset {
  VertexSet lambda;
  NormalForm rep;
  auto operator<=>(const ParabolicCoset&) const = default;
};

// Mutually gated pair realizing the distance between two parabolic cosets.
// The cosets intersect iff distance == 0 (then in_a == in_b).
struct GatePair {
  NormalForm in_a;
  NormalForm in_b;
  int distance = 0;
};

// The subgroup conjugator * G_vertex * conjugator^-1, kept symbolic.
struct ConjugateFactor {
  NormalForm conjugator;
  VertexId vertex = 0;
  auto operator<=>(const ConjugateFactor&) const = default;
};

struct QmEdge {
  int from = 0;  // index into QmBall::vertices; from < to always
  int to = 0;
  Syllable gen;     // vertices[to] = vertices[from] * gen
  Hyperplane dual;  // key of the hyperplane the edge crosses
};

// Ball around the identity: all elements of length <= radius, listed in BFS
// layers with each layer sorted shortlex, so indices are reproducible.
struct QmBall {
  int radius = 0;
  std::vector<NormalForm> vertices;
  std::vector<QmEdge> edges;
  std::map<NormalForm, int> index;
  std::vector<int> layer_start;  // layer d = [layer_start[d], layer_start[d+1])

  int index_of(const NormalForm& v) const;  // -1 when absent
  int sphere_size(int d) const { return layer_start[d + 1] - layer_start[d]; }
};

struct TransversalityGraph {
  std::vector<Hyperplane> nodes;  // sorted, duplicate-free
  std::vector<std::vector<bool>> adj;
};

// --- Distances and hyperplane keys ---------------------------------------

int distance(const GraphProduct& p, const Word& x, const Word& y);
int distance(const GraphProduct& p, const NormalForm& x, const NormalForm& y);

// Sector of g with respect to the clique base*G_u: the unique head syllable
// of base^-1 * g lying in G_u, or the identity sector when there is none.
SectorLabel project_clique(const GraphProduct& p, VertexId u, const Word& base,
                           const Word& g);

// Canonical key (u, base) with u given and base the minimal-length
// representative of g<star(u)>.
Hyperplane make_hyperplane(const GraphProduct& p, VertexId u, const Word& g);

// Key of the hyperplane dual to the edge (x, x*s). Independent of the edge
// orientation and of which edge of the hyperplane is given.
Hyperplane hyperplane_of_edge(const GraphProduct& p, const Word& x, const Syllable& s);

SectorLabel sector_of(const GraphProduct& p, const Hyperplane& j, const Word& g);
SectorLabel sector_of(const GraphProduct& p, const Hyperplane& j, const NormalForm& g);

bool separates(const GraphProduct& p, const Hyperplane& j, const Word& x, const Word& y);

// Duals of the edges along the canonical geodesic from x to y; pairwise
// distinct, and their count equals distance(x, y).
std::vector<Hyperplane> separating_hyperplanes(const GraphProduct& p, const Word& x,
                                               const Word& y);

// The carrier coset base<star(label)>.
ParabolicCoset carrier(const GraphProduct& p, const Hyperplane& j);

// Distinct hyperplanes are transverse iff their labels are adjacent in the
// graph and their carriers intersect.
bool transverse(const GraphProduct& p, const Hyperplane& a, const Hyperplane& b);

// Key of the translated hyperplane t * j.
Hyperplane translate_hyperplane(const GraphProduct& p, const Word& t, const Hyperplane& j);

// True when j separates the identity vertex from the whole of k: the two are
// distinct, not transverse, and k's carrier sits in a non-identity sector of
// j. (A carrier meets no edge of a distinct non-transverse hyperplane, so it
// lies in a single sector.)
bool separates_identity_from(const GraphProduct& p, const Hyperplane& j, const Hyperplane& k);

// --- Parabolic cosets and gates -------------------------------------------

// Coset g<lambda> by its canonical key.
ParabolicCoset make_parabolic(const GraphProduct& p, const VertexSet& lambda, const Word& g);

// The gate of g: the unique coset member closest to g, namely
// rep * strip_prefix(rep^-1 * g, lambda).prefix.
NormalForm project_parabolic(const GraphProduct& p, const ParabolicCoset& c, const Word& g);
NormalForm project_parabolic(const GraphProduct& p, const ParabolicCoset& c, const NormalForm& g);

// Alternating gate projections from a.rep until a full round changes
// nothing; the result realizes the distance between the cosets.
GatePair coset_gate_pair(const GraphProduct& p, const ParabolicCoset& a,
                         const ParabolicCoset& b);

// The rotative stabiliser base * G_label * base^-1 of a hyperplane.
ConjugateFactor rotative_stabiliser(const Hyperplane& j);

// The gate of g in the clique base*G_label, as a group element.
NormalForm clique_gate(const GraphProduct& p, const Hyperplane& j, const Word& g);

// --- Balls and derived graphs ---------------------------------------------

// Throws UnsupportedError when some vertex group is infinite.
QmBall build_ball(const GraphProduct& p, int radius);

// Distinct hyperplane keys over the ball's edges, sorted.
std::vector<Hyperplane> ball_hyperplanes(const QmBall& ball);

TransversalityGraph transversality_graph(const GraphProduct& p, const QmBall& ball);

// Whether two conjugated vertex groups commute elementwise, decided on
// generator pairs by word arithmetic.
bool factor_graph_edge(const GraphProduct& p, const ConjugateFactor& a,
                       const ConjugateFactor& b);

// Verifies the family is peripheral (no member separates the identity from
// another member; PreconditionError otherwise), then reports whether g is
// moved off the identity sector by some member of the family.
bool pingpong_check(const GraphProduct& p, const std::vector<Hyperplane>& family,
                    const Word& g);

}  // namespace gp
