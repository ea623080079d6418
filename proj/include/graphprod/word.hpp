#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "graphprod/graph.hpp"
#include "graphprod/vertex_groups.hpp"

namespace gp {

// One syllable of a word: a non-identity element of a vertex group.
struct Syllable {
  VertexId vertex = 0;
  GroupValue value = 0;
  auto operator<=>(const Syllable&) const = default;
};

// A word is a plain syllable sequence; all interpretation happens through a
// GraphProduct. Words never store identity syllables.
using Word = std::vector<Syllable>;

// A reduced word in the canonical shuffle order. Only GraphProduct builds
// non-trivial instances, so equality of normal forms is equality of group
// elements.
class NormalForm {
 public:
  NormalForm() = default;  // identity element

  const Word& syllables() const { return syl_; }
  int length() const { return static_cast<int>(syl_.size()); }
  bool is_identity() const { return syl_.empty(); }

  bool operator==(const NormalForm&) const = default;
  // Lexicographic on syllables; fine for map keys. Layered orderings use
  // shortlex_less below.
  auto operator<=>(const NormalForm&) const = default;

 private:
  friend class GraphProduct;
  explicit NormalForm(Word w) : syl_(std::move(w)) {}
  Word syl_;
};

// Length first, then syllable-lexicographic: the order used whenever a layer
// of group elements has to be listed deterministically.
bool shortlex_less(const NormalForm& a, const NormalForm& b);

// A graph product of groups: one vertex group per graph vertex. All word
// arithmetic lives here.
class GraphProduct {
 public:
  GraphProduct() = default;
  // Throws InputError unless every vertex has a group.
  GraphProduct(SimplicialGraph graph, VertexGroups groups);

  const SimplicialGraph& graph() const { return graph_; }
  const VertexGroups& groups() const { return groups_; }
  const VertexGroup& group(VertexId v) const { return groups_.at(v); }

  // Canonical normal form. Absorbs syllables left to right, each either
  // cancelling against, merging with, or appending after the syllable of the
  // same vertex that shuffles to the end, then orders the result canonically.
  NormalForm reduce(const Word& w) const;
  int length(const Word& w) const { return reduce(w).length(); }

  NormalForm mul(const Word& a, const Word& b) const;
  NormalForm mul(const NormalForm& a, const NormalForm& b) const;
  NormalForm mul(const NormalForm& a, const Word& b) const;
  NormalForm mul(const Word& a, const NormalForm& b) const;
  NormalForm inv(const Word& w) const;
  NormalForm inv(const NormalForm& w) const;

  // First (resp. last) syllables over all reduced expressions, sorted by
  // vertex. At most one syllable per vertex.
  Word head(const Word& w) const;
  Word tail(const Word& w) const;
  Word head(const NormalForm& w) const;
  Word tail(const NormalForm& w) const;

  // w = prefix * rest with prefix the maximal leading part supported on lam.
  struct PrefixSplit {
    NormalForm prefix;
    NormalForm rest;
  };
  PrefixSplit strip_prefix(const Word& w, const VertexSet& lam) const;
  PrefixSplit strip_prefix(const NormalForm& w, const VertexSet& lam) const;

  // w = rest * suffix with suffix the maximal trailing part supported on lam.
  // rest is the minimal-length representative of the coset w<lam>.
  struct SuffixSplit {
    NormalForm rest;
    NormalForm suffix;
  };
  SuffixSplit strip_suffix(const Word& w, const VertexSet& lam) const;
  SuffixSplit strip_suffix(const NormalForm& w, const VertexSet& lam) const;

  // Minimal-length conjugate reachable by rotating head syllables to the
  // back while the length strictly drops; w = conjugator * core * conjugator^-1.
  struct CyclicReduction {
    NormalForm core;
    NormalForm conjugator;
  };
  CyclicReduction cyclic_reduce(const Word& w) const;

  // Helpers.
  NormalForm from_reduced_unchecked(Word reduced) const;  // canonicalizes only
  Syllable inv(const Syllable& s) const;
  void check_syllable(const Syllable& s) const;  // valid vertex + non-identity

 private:
  // Absorb one syllable into a reduced word, keeping it reduced.
  void absorb(Word& reduced, const Syllable& s) const;
  // Positions whose syllable shuffles to the front (resp. back).
  std::vector<int> front_positions(const Word& reduced) const;
  std::vector<int> back_positions(const Word& reduced) const;
  Word canonicalize(Word reduced) const;

  SimplicialGraph graph_;
  VertexGroups groups_;
};

}  // namespace gp
