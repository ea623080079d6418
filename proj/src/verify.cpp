#include "graphprod/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/automorphisms.hpp"
#include "graphprod/davis.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/geometry.hpp"

namespace gp {

namespace {

// A body returns "" on pass and a failure description otherwise.
// UnsupportedError means the product cannot feed the check at all; that is
// reported as a pass with a "skipped:" note. Every other library error is a
// genuine failure.
void run_check(VerifyReport& report, std::string name,
               const std::function<std::string()>& body) {
  VerifyCheck c{std::move(name), true, ""};
  try {
    c.detail = body();
    c.ok = c.detail.empty();
  } catch (const UnsupportedError& e) {
    c.ok = true;
    c.detail = std::string("skipped: ") + e.what();
  } catch (const Error& e) {
    c.ok = false;
    c.detail = e.what();
  }
  ++(c.ok ? report.passed : report.failed);
  report.checks.push_back(std::move(c));
}

// Balls are shared across checks but built lazily, so that an unsupported
// product skips each dependent check individually.
template <typename BallT>
struct Lazy {
  std::function<BallT()> build;
  std::optional<BallT> value;
  std::string error;

  const BallT& get() {
    if (value) return *value;
    if (!error.empty()) throw UnsupportedError(error);
    try {
      value.emplace(build());
    } catch (const UnsupportedError& e) {
      error = e.what();
      throw;
    }
    return *value;
  }
};

std::string describe(const GraphProduct& p, const NormalForm& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += " ";
    out += p.graph().name(s.vertex) + ":" + p.group(s.vertex).value_name(s.value);
  }
  return out;
}

// Small deterministic word sample: identity, one generator per vertex, and
// neighbouring generator pairs.
std::vector<Word> sample_words(const GraphProduct& p) {
  std::vector<Word> out;
  out.push_back(Word{});
  const int n = p.graph().size();
  for (VertexId v = 0; v < n; ++v)
    out.push_back(Word{Syllable{v, p.group(v).generators().front()}});
  for (VertexId v = 0; v + 1 < n; ++v)
    out.push_back(Word{Syllable{v, p.group(v).generators().front()},
                       Syllable{v + 1, p.group(v + 1).generators().front()}});
  return out;
}

bool in_coset(const GraphProduct& p, const ParabolicCoset& c, const NormalForm& m) {
  return p.strip_suffix(m, c.lambda).rest == c.rep;
}

// ---------------------------------------------------------------- qm suite

VerifyReport qm_suite(const GraphProduct& p, int radius) {
  if (radius < 0) throw InputError("negative ball radius");
  VerifyReport report;
  Lazy<QmBall> ball{[&] { return build_ball(p, radius); }, {}, {}};

  run_check(report, "qm/ball-layers-shortlex-sorted", [&]() -> std::string {
    const QmBall& b = ball.get();
    for (int d = 0; d <= b.radius; ++d) {
      for (int i = b.layer_start[d]; i < b.layer_start[d + 1]; ++i) {
        if (b.vertices[i].length() != d)
          return "vertex " + std::to_string(i) + " is in the wrong layer";
        if (i > b.layer_start[d] && !shortlex_less(b.vertices[i - 1], b.vertices[i]))
          return "layer " + std::to_string(d) + " is not shortlex sorted";
        if (b.index_of(b.vertices[i]) != i)
          return "index map disagrees at " + std::to_string(i);
      }
    }
    return "";
  });

  run_check(report, "qm/edge-duals-split-sectors", [&]() -> std::string {
    const QmBall& b = ball.get();
    for (const QmEdge& e : b.edges) {
      const NormalForm& x = b.vertices[e.from];
      const NormalForm& y = b.vertices[e.to];
      if (make_hyperplane(p, e.gen.vertex, x.syllables()) != e.dual)
        return "edge at " + describe(p, x) + " has a non-canonical dual key";
      if (sector_of(p, e.dual, x) == sector_of(p, e.dual, y))
        return "dual key fails to separate the edge at " + describe(p, x);
      const ParabolicCoset n = carrier(p, e.dual);
      if (!in_coset(p, n, project_parabolic(p, n, x)) ||
          distance(p, x, project_parabolic(p, n, x)) != 0)
        return "endpoint " + describe(p, x) + " is not on its dual's carrier";
    }
    return "";
  });

  run_check(report, "qm/distance-counts-separating-keys", [&]() -> std::string {
    const QmBall& b = ball.get();
    const int n = static_cast<int>(b.vertices.size());
    int budget = 4000;
    for (int i = 0; i < n && budget > 0; ++i) {
      for (int j = i + 1; j < n && budget > 0; ++j, --budget) {
        const NormalForm& x = b.vertices[i];
        const NormalForm& y = b.vertices[j];
        const int d = distance(p, x, y);
        const auto seps = separating_hyperplanes(p, x.syllables(), y.syllables());
        if (static_cast<int>(seps.size()) != d)
          return "pair (" + describe(p, x) + ", " + describe(p, y) +
                 ") has " + std::to_string(seps.size()) + " separators at distance " +
                 std::to_string(d);
        const std::set<Hyperplane> distinct(seps.begin(), seps.end());
        if (distinct.size() != seps.size())
          return "repeated separator between " + describe(p, x) + " and " +
                 describe(p, y);
        for (const Hyperplane& j2 : seps)
          if (!separates(p, j2, x.syllables(), y.syllables()))
            return "listed key does not separate " + describe(p, x) + " from " +
                   describe(p, y);
      }
    }
    return "";
  });

  run_check(report, "qm/transversality-matches-factor-commuting", [&]() -> std::string {
    std::vector<Hyperplane> keys = ball_hyperplanes(ball.get());
    if (keys.size() > 120) keys.resize(120);
    std::set<ConjugateFactor> factors;
    for (const Hyperplane& k : keys) factors.insert(rotative_stabiliser(k));
    if (factors.size() != keys.size())
      return "rotative stabilisers are not distinct across keys";
    for (size_t i = 0; i < keys.size(); ++i)
      for (size_t j = i + 1; j < keys.size(); ++j) {
        const bool t = transverse(p, keys[i], keys[j]);
        const bool c = factor_graph_edge(p, rotative_stabiliser(keys[i]),
                                         rotative_stabiliser(keys[j]));
        if (t != c)
          return "transversality and factor commuting disagree on keys " +
                 std::to_string(i) + "," + std::to_string(j);
      }
    return "";
  });

  run_check(report, "qm/gates-minimize-distance", [&]() -> std::string {
    const QmBall& b = ball.get();
    std::vector<Hyperplane> keys = ball_hyperplanes(b);
    if (keys.size() > 40) keys.resize(40);
    const int point_layers = std::min(b.radius, 2);
    for (const Hyperplane& k : keys) {
      const ParabolicCoset c = carrier(p, k);
      for (int i = 0; i < b.layer_start[point_layers + 1]; ++i) {
        const NormalForm& g = b.vertices[i];
        const NormalForm proj = project_parabolic(p, c, g);
        if (!in_coset(p, c, proj))
          return "gate of " + describe(p, g) + " left its coset";
        const int dg = distance(p, g, proj);
        for (const NormalForm& m : b.vertices) {
          if (!in_coset(p, c, m) || m == proj) continue;
          if (distance(p, g, m) <= dg)
            return "gate of " + describe(p, g) + " is not the unique nearest member";
        }
      }
    }
    return "";
  });

  run_check(report, "qm/molecular-transversality-square-free", [&]() -> std::string {
    if (!p.graph().classify().molecular) return "";
    const TransversalityGraph tg = transversality_graph(p, ball.get());
    int n = static_cast<int>(tg.nodes.size());
    if (n > 64) n = 64;
    const auto adj = [&](int a, int b) { return static_cast<bool>(tg.adj[a][b]); };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            const int order[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
            for (const auto& o : order) {
              if (adj(o[0], o[1]) && adj(o[1], o[2]) && adj(o[2], o[3]) &&
                  adj(o[3], o[0]) && !adj(o[0], o[2]) && !adj(o[1], o[3]))
                return "induced four-cycle on keys " + std::to_string(o[0]) + "," +
                       std::to_string(o[1]) + "," + std::to_string(o[2]) + "," +
                       std::to_string(o[3]);
            }
          }
    return "";
  });

  return report;
}

// ------------------------------------------------------------- davis suite

VerifyReport davis_suite(const GraphProduct& p, int radius) {
  if (radius < 0) throw InputError("negative ball radius");
  VerifyReport report;
  Lazy<DavisBall> ball{[&] { return build_davis_ball(p, radius); }, {}, {}};

  run_check(report, "davis/coset-keys-canonical", [&]() -> std::string {
    const DavisBall& b = ball.get();
    for (size_t i = 0; i < b.vertices.size(); ++i) {
      const DavisVertex& v = b.vertices[i];
      if (!p.graph().is_complete(v.lambda)) return "vertex type is not complete";
      if (!p.strip_suffix(v.rep, v.lambda).suffix.is_identity())
        return "representative " + describe(p, v.rep) + " is not suffix-reduced";
      if (b.index_of(v) != static_cast<int>(i)) return "index map disagrees";
    }
    return "";
  });

  run_check(report, "davis/edges-join-nested-cosets", [&]() -> std::string {
    const DavisBall& b = ball.get();
    for (const DavisEdge& e : b.edges) {
      const DavisVertex& lo = b.vertices[e.lower];
      const DavisVertex& hi = b.vertices[e.upper];
      if (vertex_set_contains(lo.lambda, e.label))
        return "edge label already lies in the lower type";
      if (vertex_set_union(lo.lambda, VertexSet{e.label}) != hi.lambda)
        return "edge types do not differ by exactly the label";
      if (davis_key(p, lo.rep.syllables(), hi.lambda) != hi)
        return "edge endpoints are not nested cosets";
    }
    return "";
  });

  run_check(report, "davis/interior-edge-square-formula", [&]() -> std::string {
    const DavisBall& b = ball.get();
    for (const DavisEdge& e : b.edges) {
      const DavisVertex& lo = b.vertices[e.lower];
      const DavisVertex& hi = b.vertices[e.upper];
      if (lo.rep.length() > b.radius - 1 || hi.rep.length() > b.radius - 1)
        continue;  // boundary edge: counts are lower bounds only
      int expected = 0;
      for (VertexId v = 0; v < p.graph().size(); ++v) {
        if (vertex_set_contains(hi.lambda, v)) continue;
        if (p.graph().is_complete(vertex_set_union(hi.lambda, VertexSet{v})))
          ++expected;
      }
      for (VertexId v : lo.lambda) expected += p.group(v).order();
      const int got = edge_square_count(p, b, e);
      if (got != expected)
        return "edge at " + describe(p, lo.rep) + " lies in " + std::to_string(got) +
               " squares, coset count predicts " + std::to_string(expected);
    }
    return "";
  });

  run_check(report, "davis/no-free-face-when-atomic", [&]() -> std::string {
    if (!p.graph().classify().atomic) return "";
    const DavisBall& b = ball.get();
    for (const DavisEdge& e : b.edges) {
      const DavisVertex& lo = b.vertices[e.lower];
      const DavisVertex& hi = b.vertices[e.upper];
      if (lo.rep.length() > b.radius - 1 || hi.rep.length() > b.radius - 1) continue;
      if (edge_square_count(p, b, e) < 2)
        return "interior edge at " + describe(p, lo.rep) + " lies in fewer than 2 squares";
    }
    return "";
  });

  run_check(report, "davis/interior-links-flag", [&]() -> std::string {
    const DavisBall& b = ball.get();
    const int margin = b.radius - p.graph().clique_number();
    for (size_t i = 0; i < b.vertices.size(); ++i) {
      if (b.vertices[i].rep.length() > margin) continue;
      if (!link_is_flag(p, b, static_cast<int>(i)))
        return "link of " + describe(p, b.vertices[i].rep) + " is not flag";
    }
    return "";
  });

  run_check(report, "davis/crossings-match-hyperplane-keys", [&]() -> std::string {
    if (!crossing_correspondence(p, ball.get(), build_ball(p, radius)))
      return "wall classes and hyperplane keys disagree";
    return "";
  });

  run_check(report, "davis/action-composes", [&]() -> std::string {
    const DavisBall& b = ball.get();
    const LocalAutomorphism id = identity_local(p);
    std::vector<LocalAutomorphism> locals = enumerate_locals(p);
    if (locals.size() > 4) locals.resize(4);
    std::vector<Word> shifts = sample_words(p);
    if (shifts.size() > 4) shifts.resize(4);

    const size_t nverts = std::min<size_t>(b.vertices.size(), 40);
    for (const Word& g1 : shifts)
      for (const Word& g2 : shifts) {
        const Word g21 = [&] {
          Word w = g2;
          w.insert(w.end(), g1.begin(), g1.end());
          return w;
        }();
        for (size_t i = 0; i < nverts; ++i) {
          const DavisVertex& x = b.vertices[i];
          const DavisVertex lhs = aut_action(p, g2, id, aut_action(p, g1, id, x));
          if (lhs != aut_action(p, g21, id, x))
            return "translation action fails to compose at " + describe(p, x.rep);
        }
      }
    for (const LocalAutomorphism& loc : locals)
      for (const Word& g : shifts)
        for (size_t i = 0; i < nverts; ++i) {
          const DavisVertex& x = b.vertices[i];
          const DavisVertex split = aut_action(p, g, id, aut_action(p, Word{}, loc, x));
          if (split != aut_action(p, g, loc, x))
            return "relabel-then-shift disagrees with the combined move at " +
                   describe(p, x.rep);
        }
    return "";
  });

  run_check(report, "davis/translations-fix-conjugated-types", [&]() -> std::string {
    const DavisBall& b = ball.get();
    const LocalAutomorphism id = identity_local(p);
    const size_t nverts = std::min<size_t>(b.vertices.size(), 60);
    for (VertexId u = 0; u < p.graph().size(); ++u) {
      const Word h{Syllable{u, p.group(u).generators().front()}};
      for (size_t i = 0; i < nverts; ++i) {
        const DavisVertex& x = b.vertices[i];
        const bool fixed = aut_action(p, h, id, x) == x;
        const NormalForm turned =
            p.mul(p.mul(p.inv(x.rep), h), x.rep.syllables());
        const bool conjugated_in =
            p.strip_prefix(turned, x.lambda).rest.is_identity();
        if (fixed != conjugated_in)
          return "stabiliser test disagrees at " + describe(p, x.rep);
      }
    }
    return "";
  });

  return report;
}

// -------------------------------------------------------------- auto suite

// chi = d composed with the partial conjugations, read on one generator.
std::string check_decomposition(const GraphProduct& p, const ConjugatingData& d,
                                const DecompositionResult& r) {
  for (size_t i = 0; i + 1 < r.complexity_log.size(); ++i)
    if (r.complexity_log[i] <= r.complexity_log[i + 1])
      return "complexity log is not strictly decreasing";
  if (r.complexity_log.empty() || r.complexity_log.back() != 0)
    return "complexity log does not end at zero";
  for (VertexId u = 0; u < p.graph().size(); ++u) {
    for (GroupValue a : p.group(u).generators()) {
      Word w{Syllable{u, a}};
      for (auto it = r.partial_conjugations.rbegin();
           it != r.partial_conjugations.rend(); ++it) {
        const NormalForm step = apply(p, partial_auto(*it), w);
        w = step.syllables();
      }
      const NormalForm image = gp::apply(d, w);
      const NormalForm expected = d.target.reduce(
          Word{Syllable{r.isometry[u], r.vertex_isos[u].apply(a)}});
      if (image != expected)
        return "decomposition equation fails on generator of vertex " +
               p.graph().name(u);
    }
  }
  return "";
}

VerifyReport auto_suite(const GraphProduct& p, int radius, unsigned seed) {
  (void)radius;  // the auto suite works at a fixed desk scale
  VerifyReport report;

  run_check(report, "auto/partial-conjugations-invert", [&]() -> std::string {
    const std::vector<Word> samples = sample_words(p);
    for (VertexId u = 0; u < p.graph().size(); ++u) {
      const GroupValue h = p.group(u).generators().front();
      for (const VertexSet& comp : p.graph().components_minus_star(u)) {
        const PartialConjugation fwd{u, comp, h};
        const PartialConjugation bwd{u, comp, p.group(u).inv(h)};
        for (const Word& w : samples) {
          const NormalForm once = apply(p, partial_auto(fwd), w);
          const NormalForm back = apply(p, partial_auto(bwd), once.syllables());
          if (back != p.reduce(w))
            return "inverse partial conjugation fails on " + describe(p, p.reduce(w));
        }
      }
    }
    return "";
  });

  run_check(report, "auto/locals-are-homomorphisms", [&]() -> std::string {
    std::vector<LocalAutomorphism> locals = enumerate_locals(p);
    if (locals.size() > 8) locals.resize(8);
    std::vector<Word> samples = sample_words(p);
    if (samples.size() > 6) samples.resize(6);
    for (const LocalAutomorphism& loc : locals) {
      const Automorphism phi = local_auto(loc);
      for (const Word& a : samples)
        for (const Word& b : samples) {
          Word ab = a;
          ab.insert(ab.end(), b.begin(), b.end());
          const NormalForm whole = apply(p, phi, ab);
          const NormalForm parts =
              p.mul(apply(p, phi, a), apply(p, phi, b).syllables());
          if (whole != parts) return "a local image fails multiplicativity";
        }
    }
    return "";
  });

  run_check(report, "auto/inner-decompositions-verify", [&]() -> std::string {
    for (VertexId u = 0; u < p.graph().size(); ++u) {
      const Word g{Syllable{u, p.group(u).generators().front()}};
      const ConjugatingData d = inner_conjugating(p, g);
      const std::string err = check_decomposition(p, d, decompose(d));
      if (!err.empty()) return err + " (inner by a generator of vertex " +
                               p.graph().name(u) + ")";
    }
    return "";
  });

  run_check(report, "auto/random-conjugators-roundtrip", [&]() -> std::string {
    std::mt19937 rng(seed);
    std::vector<AutoGen> pool;
    for (const Word& w : sample_words(p)) {
      if (w.empty()) continue;
      pool.push_back(AutoGen{AutoGen::Kind::Inner, w, {}, {}});
    }
    for (VertexId u = 0; u < p.graph().size(); ++u)
      for (const VertexSet& comp : p.graph().components_minus_star(u)) {
        AutoGen g;
        g.kind = AutoGen::Kind::Partial;
        g.partial = PartialConjugation{u, comp, p.group(u).generators().front()};
        pool.push_back(std::move(g));
      }
    {
      std::vector<LocalAutomorphism> locals = enumerate_locals(p);
      if (locals.size() > 10) locals.resize(10);
      for (LocalAutomorphism& loc : locals) {
        AutoGen g;
        g.kind = AutoGen::Kind::Local;
        g.local = std::move(loc);
        pool.push_back(std::move(g));
      }
    }
    if (pool.empty()) return "";

    for (int trial = 0; trial < 12; ++trial) {
      Automorphism phi;
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i)
        phi.gens.push_back(pool[rng() % pool.size()]);

      std::vector<std::vector<Word>> images(p.graph().size());
      for (VertexId u = 0; u < p.graph().size(); ++u)
        for (GroupValue a : p.group(u).generators()) {
          const NormalForm img = apply(p, phi, Word{Syllable{u, a}});
          images[u].push_back(img.syllables());
        }
      std::string why;
      const auto data = conjugating_data_from_images(p, p, images, &why);
      if (!data)
        return "trial " + std::to_string(trial) +
               " produced a non-conjugating image set: " + why;
      const std::string err = check_decomposition(p, *data, decompose(*data));
      if (!err.empty()) return "trial " + std::to_string(trial) + ": " + err;
    }
    return "";
  });

  run_check(report, "auto/image-keys-ignore-presentation", [&]() -> std::string {
    for (const Word& g : sample_words(p)) {
      ConjugatingData d = inner_conjugating(p, g);
      const int base_complexity = complexity(d);
      for (VertexId u = 0; u < p.graph().size(); ++u) {
        const Hyperplane before = image_hyperplane(d, u);
        ConjugatingData shifted = d;
        const GroupValue h = p.group(shifted.map[u].w).generators().front();
        shifted.map[u].g =
            p.mul(shifted.map[u].g, Word{Syllable{shifted.map[u].w, h}});
        if (image_hyperplane(shifted, u) != before)
          return "image key moved when the conjugator absorbed a factor element";
        if (complexity(shifted) != base_complexity)
          return "complexity changed under a presentation-only rewrite";
      }
    }
    return "";
  });

  run_check(report, "auto/inner-locals-meet-trivially", [&]() -> std::string {
    // Over a star graph the central conjugations really are relabellings, so
    // the property only speaks about the other shapes.
    for (VertexId v = 0; v < p.graph().size(); ++v)
      if (p.graph().is_star_of(v)) return "";
    if (!inn_loc_intersection_trivial(p))
      return "a non-trivial relabelling agrees with an inner move on the ball";
    return "";
  });

  return report;
}

}  // namespace

VerifyReport verify_qm(const GraphProduct& p, int radius) {
  return qm_suite(p, radius);
}

VerifyReport verify_davis(const GraphProduct& p, int radius) {
  return davis_suite(p, radius);
}

VerifyReport verify_auto(const GraphProduct& p, int radius, unsigned seed) {
  return auto_suite(p, radius, seed);
}

VerifyReport verify_all(const GraphProduct& p, int radius, unsigned seed) {
  VerifyReport all = qm_suite(p, radius);
  for (VerifyReport part : {davis_suite(p, radius), auto_suite(p, radius, seed)}) {
    for (VerifyCheck& c : part.checks) all.checks.push_back(std::move(c));
    all.passed += part.passed;
    all.failed += part.failed;
  }
  return all;
}

}  // namespace gp
