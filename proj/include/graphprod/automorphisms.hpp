#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphprod/geometry.hpp"
#include "graphprod/word.hpp"

namespace gp {

// Conjugates the vertex groups of one component of the graph minus star(u)
// by the element h of G_u; everything else is fixed.
struct PartialConjugation {
  VertexId u = 0;
  VertexSet component;
  GroupValue h = 0;
  auto operator<=>(const PartialConjugation&) const = default;
};

// A graph self-isometry together with one group isomorphism per vertex:
// the syllable (v, a) maps to (sigma[v], phis[v](a)).
struct LocalAutomorphism {
  std::vector<VertexId> sigma;
  std::vector<GroupIso> phis;
  bool operator==(const LocalAutomorphism&) const = default;
};

struct AutoGen {
  enum class Kind { Inner, Partial, Local };
  Kind kind = Kind::Inner;
  Word inner_g;               // Kind::Inner
  PartialConjugation partial;  // Kind::Partial
  LocalAutomorphism local;     // Kind::Local
};

// A composition word over the three generator kinds, applied left to right.
struct Automorphism {
  std::vector<AutoGen> gens;
};

Automorphism inner_auto(Word g);
Automorphism partial_auto(PartialConjugation pc);
Automorphism local_auto(LocalAutomorphism la);
LocalAutomorphism identity_local(const GraphProduct& p);
// a followed by b.
Automorphism compose(Automorphism a, const Automorphism& b);

// Throw InputError unless the generator is well formed over p.
void validate_partial(const GraphProduct& p, const PartialConjugation& pc);
void validate_local(const GraphProduct& p, const LocalAutomorphism& la);

NormalForm apply(const GraphProduct& p, const AutoGen& gen, const Word& w);
NormalForm apply(const GraphProduct& p, const Automorphism& phi, const Word& w);

// Every local automorphism of p, ordered by isometry then per-vertex iso
// choice. Finite because vertex-group isomorphism lists are.
std::vector<LocalAutomorphism> enumerate_locals(const GraphProduct& p);

// The map x in G_u |-> g * psi(x) * g^-1 for one source vertex.
struct VertexConjugation {
  NormalForm g;    // conjugator, a target element
  VertexId w = 0;  // target vertex
  GroupIso psi;    // G_u -> H_w
};

// A homomorphism candidate sending each source vertex group into a conjugate
// of a target vertex group.
struct ConjugatingData {
  GraphProduct source;
  GraphProduct target;
  std::vector<VertexConjugation> map;  // indexed by source vertex
};

ConjugatingData identity_conjugating(const GraphProduct& p);
// x |-> g x g^-1 as conjugating data over p.
ConjugatingData inner_conjugating(const GraphProduct& p, const Word& g);

// Substitute every syllable by its image and reduce in the target.
NormalForm apply(const ConjugatingData& d, const Word& w);

struct CommutationWitness {
  VertexId u = 0, v = 0;  // a source edge
  GroupValue a = 0, b = 0;  // elements whose images fail to commute
};

// First defining relation the data breaks, in edge order; nullopt when the
// represented map is a homomorphism. Multiplicativity inside each vertex
// group is carried by GroupIso already, so only edges need checking.
std::optional<CommutationWitness> homomorphism_failure(const ConjugatingData& d);
bool is_homomorphism(const ConjugatingData& d);

// Key of the target hyperplane whose rotative stabiliser is the image of
// G_u, namely (w_u, suffix-stripped g_u).
Hyperplane image_hyperplane(const ConjugatingData& d, VertexId u);

// Sum over source vertices of the carrier distance of the image hyperplane
// from the identity; zero exactly for local-like data.
int complexity(const ConjugatingData& d);

struct DecompositionResult {
  std::vector<PartialConjugation> partial_conjugations;  // alpha_1 .. alpha_m
  std::vector<VertexId> isometry;                        // s : source -> target
  std::vector<GroupIso> vertex_isos;                     // chi_u : G_u -> H_{s(u)}
  std::vector<int> complexity_log;                       // strictly decreasing to 0
};

// Peels off partial conjugations until the data has complexity zero, then
// reads the remaining local isomorphism. The input composed with
// alpha_1 ... alpha_m (rightmost applied first) maps each G_u onto H_{s(u)}
// via chi_u. Throws PreconditionError when the data is not a homomorphism
// and NotIsomorphismError when the reduction gets stuck or the final data is
// not a local isomorphism.
DecompositionResult decompose(ConjugatingData d);

// Best-effort bridge from raw generator images: cyclically reduces one image
// per source vertex to find the conjugator and target vertex, then verifies
// the whole vertex group lands in that conjugate. images[u][k] is the image
// word of the k-th canonical generator of G_u. Returns nullopt (with a
// human-readable reason) when the map is not conjugating.
std::optional<ConjugatingData> conjugating_data_from_images(
    const GraphProduct& source, const GraphProduct& target,
    const std::vector<std::vector<Word>>& images, std::string* why = nullptr);

// For finite vertex groups the outer automorphism group is finite exactly
// when the graph has no SIL pair.
bool out_finite(const GraphProduct& p);

// Desk-scale confirmation that no non-trivial local automorphism agrees with
// an inner automorphism by an element of the radius-2 ball.
bool inn_loc_intersection_trivial(const GraphProduct& p);

}  // namespace gp
