// Acceptance gate: one line per criterion, exit 0 only when every criterion
// holds. Each check recomputes its expectations from scratch (brute-force
// oracles, frozen regression values) rather than trusting the library.

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "graphprod/automorphisms.hpp"
#include "graphprod/davis.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/geometry.hpp"
#include "graphprod/word.hpp"
#include "oracles.hpp"

using gp::ConjugatingData;
using gp::DavisBall;
using gp::DavisEdge;
using gp::DavisVertex;
using gp::DecompositionResult;
using gp::GraphProduct;
using gp::GroupValue;
using gp::Hyperplane;
using gp::NormalForm;
using gp::QmBall;
using gp::QmEdge;
using gp::Syllable;
using gp::VertexId;
using gp::VertexSet;
using gp::Word;

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

Outcome pass(std::string note) { return {true, std::move(note)}; }
Outcome fail(std::string note) { return {false, std::move(note)}; }

// ---------------------------------------------------------------------------
// 1. Exhaustive normal-form agreement with the elementary-move oracle.

Outcome criterion_normal_forms() {
  long words = 0, mismatches = 0;
  for (const GraphProduct& p : {fixtures::c5_racg(), fixtures::z2_z3_z2_path()}) {
    std::vector<Syllable> alphabet;
    for (VertexId v = 0; v < p.graph().size(); ++v)
      for (GroupValue a : p.group(v).nontrivial_elements())
        alphabet.push_back(Syllable{v, a});

    std::map<Word, Word> reduced_of_class;  // oracle key -> library word
    std::map<Word, Word> class_of_reduced;  // library word -> oracle key
    std::vector<Word> layer{Word{}};
    for (int len = 0; len <= 6; ++len) {
      for (const Word& w : layer) {
        ++words;
        const NormalForm nf = p.reduce(w);
        const std::set<Word> cls = oracle::reduced_class(p, w);
        // Same length, so set order is shortlex: front = oracle key.
        const Word key = *cls.begin();
        if (cls.find(nf.syllables()) == cls.end()) {
          ++mismatches;
          continue;
        }
        auto [it, inserted] = reduced_of_class.try_emplace(key, nf.syllables());
        if (!inserted && it->second != nf.syllables()) ++mismatches;
        auto [it2, inserted2] = class_of_reduced.try_emplace(nf.syllables(), key);
        if (!inserted2 && it2->second != key) ++mismatches;
      }
      if (len == 6) break;
      std::vector<Word> next;
      next.reserve(layer.size() * alphabet.size());
      for (const Word& w : layer)
        for (const Syllable& s : alphabet) {
          Word grown = w;
          grown.push_back(s);
          next.push_back(std::move(grown));
        }
      layer = std::move(next);
    }
  }
  const std::string note = std::to_string(words) + " words, " +
                           std::to_string(mismatches) + " mismatches";
  return mismatches == 0 ? pass(note) : fail(note);
}

// ---------------------------------------------------------------------------
// 2. Radius-4 pentagon ball: frozen size, independent BFS recount, distance =
//    number of separating keys, and geodesics never recross a key.

Outcome criterion_ball_duality() {
  const GraphProduct p = fixtures::c5_racg();
  const QmBall ball = gp::build_ball(p, 4);
  const int n = static_cast<int>(ball.vertices.size());
  if (n != 166)
    return fail("ball has " + std::to_string(n) + " vertices, frozen count is 166");
  if (oracle::ball(p, 4).size() != 166)
    return fail("independent breadth-first recount disagrees with 166");

  std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] = gp::distance(p, ball.vertices[i], ball.vertices[j]);

  long pairs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++pairs;
      const Word x = ball.vertices[i].syllables();
      const Word y = ball.vertices[j].syllables();
      const auto seps = gp::separating_hyperplanes(p, x, y);
      if (static_cast<int>(seps.size()) != dist[i][j])
        return fail("separator count disagrees with distance at a pair");
      if (std::set<Hyperplane>(seps.begin(), seps.end()).size() != seps.size())
        return fail("a geodesic lists a separating key twice");
      // Any edge on any geodesic from i to j must cross a key separating the
      // endpoints; with order-two sectors a recrossed key would land both
      // endpoints on one side.
      for (const QmEdge& e : ball.edges) {
        const bool forward = dist[i][e.from] + 1 + dist[e.to][j] == dist[i][j];
        const bool backward = dist[i][e.to] + 1 + dist[e.from][j] == dist[i][j];
        if (!forward && !backward) continue;
        if (gp::sector_of(p, e.dual, ball.vertices[i]) ==
            gp::sector_of(p, e.dual, ball.vertices[j]))
          return fail("a geodesic edge crosses a key that does not separate");
      }
    }
  }
  return pass(std::to_string(n) + " vertices, " + std::to_string(pairs) +
              " pairs checked");
}

// ---------------------------------------------------------------------------
// 3. Edge/key duality three-way equivalence on the radius-4 ball.

Outcome criterion_edge_duality() {
  const GraphProduct p = fixtures::c5_racg();
  const QmBall ball = gp::build_ball(p, 4);
  const std::vector<Hyperplane> keys = gp::ball_hyperplanes(ball);
  long triples = 0;
  for (const QmEdge& e : ball.edges) {
    const Word x = ball.vertices[e.from].syllables();
    const NormalForm& yv = ball.vertices[e.to];
    const Hyperplane dual = gp::hyperplane_of_edge(p, x, e.gen);
    const NormalForm stripped =
        p.strip_suffix(ball.vertices[e.from], p.graph().star(e.gen.vertex)).rest;
    for (const Hyperplane& j : keys) {
      ++triples;
      const bool same_key = dual == j;
      const bool coset_member =
          e.gen.vertex == j.label && stripped == j.base;
      const bool sectors_split =
          gp::sector_of(p, j, ball.vertices[e.from]) != gp::sector_of(p, j, yv);
      if (same_key != coset_member || coset_member != sectors_split)
        return fail("equivalence breaks for an edge/key pair");
    }
  }
  return pass(std::to_string(ball.edges.size()) + " edges x " +
              std::to_string(keys.size()) + " keys, " + std::to_string(triples) +
              " triples");
}

// ---------------------------------------------------------------------------
// 4. Rotative stabilisers: injective on keys, commuting iff transverse (r=3).

Outcome criterion_factor_graph() {
  const GraphProduct p = fixtures::c5_racg();
  const std::vector<Hyperplane> keys = gp::ball_hyperplanes(gp::build_ball(p, 3));
  std::set<gp::ConjugateFactor> factors;
  for (const Hyperplane& k : keys) factors.insert(gp::rotative_stabiliser(k));
  if (factors.size() != keys.size())
    return fail("two keys share a rotative stabiliser");
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t j = i + 1; j < keys.size(); ++j)
      if (gp::transverse(p, keys[i], keys[j]) !=
          gp::factor_graph_edge(p, gp::rotative_stabiliser(keys[i]),
                                gp::rotative_stabiliser(keys[j])))
        return fail("transversality and elementwise commuting disagree");
  return pass(std::to_string(keys.size()) + " keys, all pairs agree");
}

// ---------------------------------------------------------------------------
// 5. No induced four-cycle in the radius-3 transversality graph.

Outcome criterion_no_induced_square() {
  const GraphProduct p = fixtures::c5_racg();
  const gp::TransversalityGraph tg =
      gp::transversality_graph(p, gp::build_ball(p, 3));
  const int n = static_cast<int>(tg.nodes.size());
  const auto adj = [&](int a, int b) { return static_cast<bool>(tg.adj[a][b]); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int cycles[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (const auto& o : cycles)
            if (adj(o[0], o[1]) && adj(o[1], o[2]) && adj(o[2], o[3]) &&
                adj(o[3], o[0]) && !adj(o[0], o[2]) && !adj(o[1], o[3]))
              return fail("induced four-cycle found");
        }
  return pass(std::to_string(n) + " keys, all quadruples checked");
}

// ---------------------------------------------------------------------------
// 6. Random conjugating compositions decompose with strictly decreasing
//    complexity and verify generator by generator.

std::string check_decomposition(const GraphProduct& p, const ConjugatingData& d,
                                const DecompositionResult& r) {
  for (size_t i = 0; i + 1 < r.complexity_log.size(); ++i)
    if (r.complexity_log[i] <= r.complexity_log[i + 1])
      return "complexity log is not strictly decreasing";
  if (r.complexity_log.empty() || r.complexity_log.back() != 0)
    return "complexity log does not end at zero";
  for (VertexId u = 0; u < p.graph().size(); ++u)
    for (GroupValue a : p.group(u).generators()) {
      Word w{Syllable{u, a}};
      for (auto it = r.partial_conjugations.rbegin();
           it != r.partial_conjugations.rend(); ++it)
        w = gp::apply(p, gp::partial_auto(*it), w).syllables();
      const NormalForm image = gp::apply(d, w);
      const NormalForm expected = p.reduce(
          Word{Syllable{r.isometry[u], r.vertex_isos[u].apply(a)}});
      if (image != expected) return "generator equation fails";
    }
  return "";
}

Outcome criterion_decomposition_roundtrip() {
  const GraphProduct p = fixtures::c5_racg();

  std::vector<gp::AutoGen> pool;
  for (VertexId u = 0; u < p.graph().size(); ++u) {
    pool.push_back(gp::AutoGen{gp::AutoGen::Kind::Inner,
                               fixtures::involutions({u}), {}, {}});
    for (const VertexSet& comp : p.graph().components_minus_star(u)) {
      gp::AutoGen g;
      g.kind = gp::AutoGen::Kind::Partial;
      g.partial = gp::PartialConjugation{u, comp, 1};
      pool.push_back(std::move(g));
    }
  }
  for (gp::LocalAutomorphism& la : gp::enumerate_locals(p)) {
    gp::AutoGen g;
    g.kind = gp::AutoGen::Kind::Local;
    g.local = std::move(la);
    pool.push_back(std::move(g));
  }

  std::mt19937 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    gp::Automorphism phi;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) phi.gens.push_back(pool[rng() % pool.size()]);

    std::vector<std::vector<Word>> images(p.graph().size());
    for (VertexId u = 0; u < p.graph().size(); ++u)
      for (GroupValue a : p.group(u).generators())
        images[u].push_back(gp::apply(p, phi, Word{Syllable{u, a}}).syllables());

    std::string why;
    const auto data = gp::conjugating_data_from_images(p, p, images, &why);
    if (!data) return fail("trial " + std::to_string(trial) + ": " + why);
    const std::string err = check_decomposition(p, *data, gp::decompose(*data));
    if (!err.empty()) return fail("trial " + std::to_string(trial) + ": " + err);
  }

  const DecompositionResult inner =
      gp::decompose(gp::inner_conjugating(p, fixtures::involutions({0})));
  if (inner.complexity_log != std::vector<int>{2, 0})
    return fail("conjugation by the first generator does not log [2,0]");
  return pass("200 random compositions, inner case logs [2,0]");
}

// ---------------------------------------------------------------------------
// 7. The transvection over the order-two free product is rejected with a
//    length-two cyclic core.

Outcome criterion_transvection_rejected() {
  const GraphProduct p = fixtures::z2_z2_free();
  const Word ab{Syllable{0, 1}, Syllable{1, 1}};
  std::vector<std::vector<Word>> images(2);
  images[0] = {ab};                       // a -> ab
  images[1] = {Word{Syllable{1, 1}}};     // b -> b
  std::string why;
  const auto data = gp::conjugating_data_from_images(p, p, images, &why);
  if (data) return fail("the transvection was accepted as conjugating");
  if (p.cyclic_reduce(ab).core.length() != 2)
    return fail("the rejected image does not have a length-two cyclic core");
  if (why.find("2") == std::string::npos)
    return fail("the refusal does not mention the core length: " + why);
  return pass("refused with: " + why);
}

// ---------------------------------------------------------------------------
// 8. Finiteness of the outer automorphism group across the three shapes.

Outcome criterion_out_finiteness() {
  if (!gp::out_finite(fixtures::c5_racg()))
    return fail("the pentagon product should have finite outer group");
  if (!gp::out_finite(fixtures::k3_racg()))
    return fail("the complete-graph product should have finite outer group");
  const GraphProduct k13 = fixtures::k13_racg();
  if (gp::out_finite(k13)) return fail("the star product should be infinite");
  const auto w = k13.graph().sil_witness();
  if (!w) return fail("missing witness for the star product");
  if (k13.graph().name(w->u) != "u" || k13.graph().name(w->v) != "v" ||
      w->component != VertexSet{k13.graph().index_of("z").value()})
    return fail("witness is not (u, v, {z})");
  return pass("pentagon and triangle finite, star infinite with witness (u,v,{z})");
}

// ---------------------------------------------------------------------------
// 9. Coset-complex ball: fundamental domain size, square counts, flag links,
//    and the wall/key crossing match.

Outcome criterion_coset_complex() {
  const GraphProduct p = fixtures::c5_racg();
  const DavisBall ball = gp::build_davis_ball(p, 2);

  int domain = 0;
  for (const DavisVertex& v : ball.vertices)
    if (v.rep.is_identity()) ++domain;
  if (domain != 11)
    return fail("fundamental domain has " + std::to_string(domain) +
                " vertices, expected 11");

  int interior_edges = 0;
  for (const DavisEdge& e : ball.edges) {
    if (ball.vertices[e.lower].rep.length() > 1 ||
        ball.vertices[e.upper].rep.length() > 1)
      continue;
    ++interior_edges;
    if (gp::edge_square_count(p, ball, e) != 2)
      return fail("an interior edge is not in exactly two squares");
  }
  if (interior_edges == 0) return fail("no interior edges to check");

  int links = 0;
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.vertices[i].rep.length() > 0) continue;
    ++links;
    if (!gp::link_is_flag(p, ball, static_cast<int>(i)))
      return fail("an interior link is not flag");
  }

  if (!gp::crossing_correspondence(p, gp::build_davis_ball(p, 3),
                                   gp::build_ball(p, 3)))
    return fail("wall classes do not match hyperplane keys at radius 3");
  return pass(std::to_string(interior_edges) + " interior edges, " +
              std::to_string(links) + " links, crossing match at radius 3");
}

// ---------------------------------------------------------------------------
// 10. Rigid elements: a covering non-adjacent cycle fixed only by the trivial
//     relabelling, and no relabelling acts as an inner move.

Outcome criterion_rigidity() {
  const GraphProduct p = fixtures::c5_racg();
  const NormalForm rigid = gp::rigid_element(p);
  const Word spelled = rigid.syllables();
  if (spelled.size() != 5) return fail("rigid element is not five syllables long");
  std::set<VertexId> covered;
  for (const Syllable& s : spelled) covered.insert(s.vertex);
  if (covered.size() != 5) return fail("rigid element misses a vertex");
  for (size_t i = 0; i < spelled.size(); ++i) {
    const VertexId a = spelled[i].vertex;
    const VertexId b = spelled[(i + 1) % spelled.size()].vertex;
    if (a == b || p.graph().adjacent(a, b))
      return fail("consecutive rigid syllables repeat or commute");
  }

  const auto locals = gp::enumerate_locals(p);
  if (locals.size() != 10)
    return fail("expected 10 relabelling automorphisms, found " +
                std::to_string(locals.size()));
  const auto fixing = gp::fixing_locals(p, spelled);
  if (fixing.size() != 1 || !(fixing.front() == gp::identity_local(p)))
    return fail("a non-trivial relabelling fixes the rigid element");

  if (!gp::inn_loc_intersection_trivial(p))
    return fail("a relabelling agrees with an inner move on the ball");
  std::string cycle;
  for (const Syllable& s : spelled) {
    if (!cycle.empty()) cycle += ",";
    cycle += std::to_string(s.vertex);
  }
  return pass("cycle " + cycle + "; only the identity among 10 relabellings fixes it");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"normal forms match the elementary-move oracle", criterion_normal_forms},
      {"radius-4 ball: frozen count, distance = separating keys, no recrossing",
       criterion_ball_duality},
      {"edge/key duality three-way equivalence on the radius-4 ball",
       criterion_edge_duality},
      {"rotative stabilisers: injective and commuting iff transverse",
       criterion_factor_graph},
      {"radius-3 transversality graph has no induced four-cycle",
       criterion_no_induced_square},
      {"random conjugating maps decompose with decreasing complexity",
       criterion_decomposition_roundtrip},
      {"transvection over the order-two free product is refused",
       criterion_transvection_rejected},
      {"outer automorphism finiteness matches the graph shape",
       criterion_out_finiteness},
      {"coset-complex ball: domain size, squares, links, crossing match",
       criterion_coset_complex},
      {"rigid element is fixed only by the trivial relabelling",
       criterion_rigidity},
  };

  int passed = 0;
  int index = 0;
  for (const Entry& e : entries) {
    ++index;
    Outcome out;
    try {
      out = e.run();
    } catch (const gp::Error& err) {
      out = fail(std::string("unexpected error: ") + err.what());
    }
    std::printf("%s  %2d  %s%s%s\n", out.ok ? "PASS" : "FAIL", index, e.name,
                out.note.empty() ? "" : " -- ", out.note.c_str());
    if (out.ok) ++passed;
  }
  std::printf("%d of 10 criteria passed\n", passed);
  return passed == 10 ? 0 : 1;
}
