#include "graphprod/geometry.hpp"

#include <algorithm>
#include <string>

#include "graphprod/errors.hpp"

namespace gp {

int QmBall::index_of(const NormalForm& v) const {
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

int distance(const GraphProduct& p, const Word& x, const Word& y) {
  return p.mul(p.inv(x), y).length();
}

int distance(const GraphProduct& p, const NormalForm& x, const NormalForm& y) {
  return p.mul(p.inv(x), y).length();
}

SectorLabel project_clique(const GraphProduct& p, VertexId u, const Word& base,
                           const Word& g) {
  NormalForm h = p.mul(p.inv(base), g);
  for (const Syllable& s : p.head(h)) {
    if (s.vertex == u) return s.value;
  }
  return kIdentitySector;
}

Hyperplane make_hyperplane(const GraphProduct& p, VertexId u, const Word& g) {
  if (u < 0 || u >= p.graph().size()) throw InputError("hyperplane label is not a vertex");
  return Hyperplane{u, p.strip_suffix(g, p.graph().star(u)).rest};
}

Hyperplane hyperplane_of_edge(const GraphProduct& p, const Word& x, const Syllable& s) {
  p.check_syllable(s);
  return make_hyperplane(p, s.vertex, x);
}

SectorLabel sector_of(const GraphProduct& p, const Hyperplane& j, const Word& g) {
  return project_clique(p, j.label, j.base.syllables(), g);
}

SectorLabel sector_of(const GraphProduct& p, const Hyperplane& j, const NormalForm& g) {
  return sector_of(p, j, g.syllables());
}

bool separates(const GraphProduct& p, const Hyperplane& j, const Word& x, const Word& y) {
  return sector_of(p, j, x) != sector_of(p, j, y);
}

std::vector<Hyperplane> separating_hyperplanes(const GraphProduct& p, const Word& x,
                                               const Word& y) {
  std::vector<Hyperplane> out;
  NormalForm at = p.reduce(x);
  const NormalForm step = p.mul(p.inv(x), y);
  for (const Syllable& s : step.syllables()) {
    out.push_back(hyperplane_of_edge(p, at.syllables(), s));
    at = p.mul(at, Word{s});
  }
  return out;
}

ParabolicCoset carrier(const GraphProduct& p, const Hyperplane& j) {
  return ParabolicCoset{p.graph().star(j.label), j.base};
}

bool transverse(const GraphProduct& p, const Hyperplane& a, const Hyperplane& b) {
  if (a == b) return false;
  if (!p.graph().adjacent(a.label, b.label)) return false;
  return coset_gate_pair(p, carrier(p, a), carrier(p, b)).distance == 0;
}

Hyperplane translate_hyperplane(const GraphProduct& p, const Word& t, const Hyperplane& j) {
  return make_hyperplane(p, j.label, p.mul(t, j.base).syllables());
}

bool separates_identity_from(const GraphProduct& p, const Hyperplane& j, const Hyperplane& k) {
  if (j == k) return false;
  if (transverse(p, j, k)) return false;
  return sector_of(p, j, k.base) != sector_of(p, j, Word{});
}

ParabolicCoset make_parabolic(const GraphProduct& p, const VertexSet& lambda, const Word& g) {
  for (VertexId v : lambda) {
    if (v < 0 || v >= p.graph().size()) throw InputError("coset support is not a vertex set");
  }
  return ParabolicCoset{lambda, p.strip_suffix(g, lambda).rest};
}

NormalForm project_parabolic(const GraphProduct& p, const ParabolicCoset& c, const Word& g) {
  NormalForm h = p.mul(p.inv(c.rep), g);
  return p.mul(c.rep, p.strip_prefix(h, c.lambda).prefix);
}

NormalForm project_parabolic(const GraphProduct& p, const ParabolicCoset& c,
                             const NormalForm& g) {
  return project_parabolic(p, c, g.syllables());
}

GatePair coset_gate_pair(const GraphProduct& p, const ParabolicCoset& a,
                         const ParabolicCoset& b) {
  // Each projection that moves a point strictly shrinks d(x, y) (gates are
  // unique nearest points), so the loop reaches a fixed round.
  NormalForm x = a.rep;
  NormalForm y = project_parabolic(p, b, x);
  while (true) {
    NormalForm xn = project_parabolic(p, a, y);
    if (xn == x) break;
    x = xn;
    y = project_parabolic(p, b, x);
  }
  return GatePair{x, y, distance(p, x, y)};
}

ConjugateFactor rotative_stabiliser(const Hyperplane& j) {
  return ConjugateFactor{j.base, j.label};
}

NormalForm clique_gate(const GraphProduct& p, const Hyperplane& j, const Word& g) {
  SectorLabel s = sector_of(p, j, g);
  if (s == kIdentitySector) return j.base;
  return p.mul(j.base, Word{Syllable{j.label, s}});
}

QmBall build_ball(const GraphProduct& p, int radius) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  const SimplicialGraph& graph = p.graph();
  for (VertexId v = 0; v < graph.size(); ++v) {
    if (!p.group(v).is_finite()) {
      throw UnsupportedError("cannot enumerate a ball: vertex group at '" + graph.name(v) +
                             "' is infinite");
    }
  }

  QmBall ball;
  ball.radius = radius;
  ball.vertices.push_back(NormalForm{});
  ball.index.emplace(NormalForm{}, 0);
  ball.layer_start = {0, 1};

  int prev_start = 0;
  for (int d = 1; d <= radius; ++d) {
    std::set<NormalForm> layer;  // lexicographic = shortlex within one length
    for (int i = prev_start; i < static_cast<int>(ball.vertices.size()); ++i) {
      for (VertexId u = 0; u < graph.size(); ++u) {
        for (GroupValue a : p.group(u).nontrivial_elements()) {
          NormalForm y = p.mul(ball.vertices[i], Word{Syllable{u, a}});
          if (y.length() == d) layer.insert(std::move(y));
        }
      }
    }
    prev_start = static_cast<int>(ball.vertices.size());
    for (const NormalForm& y : layer) {
      ball.index.emplace(y, static_cast<int>(ball.vertices.size()));
      ball.vertices.push_back(y);
    }
    ball.layer_start.push_back(static_cast<int>(ball.vertices.size()));
  }

  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i) {
    const NormalForm& x = ball.vertices[i];
    for (VertexId u = 0; u < graph.size(); ++u) {
      for (GroupValue a : p.group(u).nontrivial_elements()) {
        Syllable s{u, a};
        int j = ball.index_of(p.mul(x, Word{s}));
        if (j > i) ball.edges.push_back(QmEdge{i, j, s, hyperplane_of_edge(p, x.syllables(), s)});
      }
    }
  }
  return ball;
}

std::vector<Hyperplane> ball_hyperplanes(const QmBall& ball) {
  std::set<Hyperplane> keys;
  for (const QmEdge& e : ball.edges) keys.insert(e.dual);
  return std::vector<Hyperplane>(keys.begin(), keys.end());
}

TransversalityGraph transversality_graph(const GraphProduct& p, const QmBall& ball) {
  TransversalityGraph g;
  g.nodes = ball_hyperplanes(ball);
  int n = static_cast<int>(g.nodes.size());
  g.adj.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (transverse(p, g.nodes[i], g.nodes[j])) g.adj[i][j] = g.adj[j][i] = true;
    }
  }
  return g;
}

bool factor_graph_edge(const GraphProduct& p, const ConjugateFactor& a,
                       const ConjugateFactor& b) {
  // Commutation is inherited by products, so generator pairs decide it.
  std::vector<NormalForm> xs, ys;
  for (GroupValue v : p.group(a.vertex).generators()) {
    xs.push_back(p.mul(p.mul(a.conjugator, Word{Syllable{a.vertex, v}}), p.inv(a.conjugator)));
  }
  for (GroupValue v : p.group(b.vertex).generators()) {
    ys.push_back(p.mul(p.mul(b.conjugator, Word{Syllable{b.vertex, v}}), p.inv(b.conjugator)));
  }
  for (const NormalForm& x : xs) {
    for (const NormalForm& y : ys) {
      if (p.mul(x, y) != p.mul(y, x)) return false;
    }
  }
  return true;
}

bool pingpong_check(const GraphProduct& p, const std::vector<Hyperplane>& family,
                    const Word& g) {
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      if (separates_identity_from(p, family[i], family[j])) {
        throw PreconditionError("family is not peripheral: member " + std::to_string(i) +
                                " separates the identity from member " + std::to_string(j));
      }
    }
  }
  for (const Hyperplane& j : family) {
    if (sector_of(p, j, g) != sector_of(p, j, Word{})) return true;
  }
  return false;
}

}  // namespace gp
