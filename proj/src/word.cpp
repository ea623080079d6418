#include "graphprod/word.hpp"

#include <algorithm>

#include "graphprod/errors.hpp"

namespace gp {

bool shortlex_less(const NormalForm& a, const NormalForm& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.syllables() < b.syllables();
}

GraphProduct::GraphProduct(SimplicialGraph graph, VertexGroups groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (groups_.size() != graph_.size())
    throw InputError("every graph vertex needs exactly one vertex group");
}

void GraphProduct::check_syllable(const Syllable& s) const {
  if (s.vertex < 0 || s.vertex >= graph_.size())
    throw InputError("syllable names an unknown vertex");
  if (!group(s.vertex).is_valid(s.value))
    throw InputError("syllable value out of range");
  if (s.value == 0) throw InputError("identity syllables are not allowed");
}

Syllable GraphProduct::inv(const Syllable& s) const {
  return {s.vertex, group(s.vertex).inv(s.value)};
}

void GraphProduct::absorb(Word& reduced, const Syllable& s) const {
  if (s.value == 0) return;
  // The unique syllable of the same vertex that shuffles to the back, if any.
  // Scanning right to left keeps the invariant that everything to the right
  // of position i commutes with s, so the first hit is the one that shuffles.
  int found = -1;
  for (int i = static_cast<int>(reduced.size()) - 1; i >= 0; --i) {
    if (reduced[i].vertex == s.vertex) {
      found = i;
      break;
    }
    if (!graph_.adjacent(reduced[i].vertex, s.vertex)) break;
  }
  if (found < 0) {
    reduced.push_back(s);
    return;
  }
  GroupValue merged = group(s.vertex).mul(reduced[found].value, s.value);
  reduced.erase(reduced.begin() + found);
  if (merged != 0) reduced.push_back({s.vertex, merged});
}

std::vector<int> GraphProduct::front_positions(const Word& reduced) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(reduced.size()); ++i) {
    bool clear = true;
    for (int j = 0; j < i; ++j)
      if (!graph_.adjacent(reduced[j].vertex, reduced[i].vertex)) {
        clear = false;
        break;
      }
    if (clear) out.push_back(i);
  }
  return out;
}

std::vector<int> GraphProduct::back_positions(const Word& reduced) const {
  std::vector<int> out;
  const int n = static_cast<int>(reduced.size());
  for (int i = 0; i < n; ++i) {
    bool clear = true;
    for (int j = i + 1; j < n; ++j)
      if (!graph_.adjacent(reduced[j].vertex, reduced[i].vertex)) {
        clear = false;
        break;
      }
    if (clear) out.push_back(i);
  }
  return out;
}

Word GraphProduct::canonicalize(Word reduced) const {
  // Greedily emit the front-shufflable syllable with the smallest vertex.
  // Front-shufflable syllables have pairwise distinct vertices, so the choice
  // is unique and the result is a canonical representative of the shuffle
  // class.
  Word out;
  out.reserve(reduced.size());
  while (!reduced.empty()) {
    int best = -1;
    for (int i : front_positions(reduced))
      if (best < 0 || reduced[i].vertex < reduced[best].vertex) best = i;
    out.push_back(reduced[best]);
    reduced.erase(reduced.begin() + best);
  }
  return out;
}

NormalForm GraphProduct::reduce(const Word& w) const {
  Word reduced;
  reduced.reserve(w.size());
  for (const Syllable& s : w) {
    check_syllable(s);
    absorb(reduced, s);
  }
  return NormalForm(canonicalize(std::move(reduced)));
}

NormalForm GraphProduct::from_reduced_unchecked(Word reduced) const {
  return NormalForm(canonicalize(std::move(reduced)));
}

NormalForm GraphProduct::mul(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(w);
}

NormalForm GraphProduct::mul(const NormalForm& a, const NormalForm& b) const {
  return mul(a.syllables(), b.syllables());
}

NormalForm GraphProduct::mul(const NormalForm& a, const Word& b) const {
  return mul(a.syllables(), b);
}

NormalForm GraphProduct::mul(const Word& a, const NormalForm& b) const {
  return mul(a, b.syllables());
}

NormalForm GraphProduct::inv(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    check_syllable(*it);
    out.push_back(inv(*it));
  }
  return reduce(out);
}

NormalForm GraphProduct::inv(const NormalForm& w) const { return inv(w.syllables()); }

Word GraphProduct::head(const NormalForm& w) const {
  Word out;
  for (int i : front_positions(w.syllables())) out.push_back(w.syllables()[i]);
  std::sort(out.begin(), out.end(),
            [](const Syllable& a, const Syllable& b) { return a.vertex < b.vertex; });
  return out;
}

Word GraphProduct::tail(const NormalForm& w) const {
  Word out;
  for (int i : back_positions(w.syllables())) out.push_back(w.syllables()[i]);
  std::sort(out.begin(), out.end(),
            [](const Syllable& a, const Syllable& b) { return a.vertex < b.vertex; });
  return out;
}

Word GraphProduct::head(const Word& w) const { return head(reduce(w)); }
Word GraphProduct::tail(const Word& w) const { return tail(reduce(w)); }

GraphProduct::PrefixSplit GraphProduct::strip_prefix(const NormalForm& w,
                                                     const VertexSet& lam) const {
  Word remaining = w.syllables();
  Word prefix;
  for (;;) {
    int best = -1;
    for (int i : front_positions(remaining)) {
      if (!vertex_set_contains(lam, remaining[i].vertex)) continue;
      if (best < 0 || remaining[i].vertex < remaining[best].vertex) best = i;
    }
    if (best < 0) break;
    prefix.push_back(remaining[best]);
    remaining.erase(remaining.begin() + best);
  }
  return {from_reduced_unchecked(std::move(prefix)),
          from_reduced_unchecked(std::move(remaining))};
}

GraphProduct::PrefixSplit GraphProduct::strip_prefix(const Word& w,
                                                     const VertexSet& lam) const {
  return strip_prefix(reduce(w), lam);
}

GraphProduct::SuffixSplit GraphProduct::strip_suffix(const NormalForm& w,
                                                     const VertexSet& lam) const {
  Word remaining = w.syllables();
  Word suffix;  // built back to front
  for (;;) {
    int best = -1;
    for (int i : back_positions(remaining)) {
      if (!vertex_set_contains(lam, remaining[i].vertex)) continue;
      if (best < 0 || remaining[i].vertex < remaining[best].vertex) best = i;
    }
    if (best < 0) break;
    suffix.insert(suffix.begin(), remaining[best]);
    remaining.erase(remaining.begin() + best);
  }
  return {from_reduced_unchecked(std::move(remaining)),
          from_reduced_unchecked(std::move(suffix))};
}

GraphProduct::SuffixSplit GraphProduct::strip_suffix(const Word& w,
                                                     const VertexSet& lam) const {
  return strip_suffix(reduce(w), lam);
}

GraphProduct::CyclicReduction GraphProduct::cyclic_reduce(const Word& w) const {
  NormalForm core = reduce(w);
  NormalForm conjugator;
  for (;;) {
    bool improved = false;
    for (const Syllable& s : head(core)) {  // head() is sorted by vertex
      // core = s * rest, so s^-1 * core * s = rest * s.
      Word rotated = core.syllables();
      rotated.erase(std::find(rotated.begin(), rotated.end(), s));
      rotated.push_back(s);
      NormalForm candidate = reduce(rotated);
      if (candidate.length() < core.length()) {
        core = candidate;
        conjugator = mul(conjugator, Word{s});
        improved = true;
        break;
      }
    }
    if (!improved) return {core, conjugator};
  }
}

}  // namespace gp
