#include "graphprod/davis.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "graphprod/errors.hpp"

namespace gp {

namespace {

VertexSet checked_type(const GraphProduct& p, const VertexSet& lambda) {
  VertexSet set = make_vertex_set(lambda);
  for (VertexId v : set)
    if (v < 0 || v >= p.graph().size())
      throw InputError("coset type names an unknown vertex");
  if (!p.graph().is_complete(set))
    throw InputError("coset type is not a complete vertex set");
  return set;
}

}  // namespace

int DavisBall::index_of(const DavisVertex& v) const {
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

DavisVertex davis_key(const GraphProduct& p, const Word& g, const VertexSet& lambda) {
  VertexSet set = checked_type(p, lambda);
  NormalForm rep = p.strip_suffix(g, set).rest;
  return DavisVertex{std::move(set), std::move(rep)};
}

DavisBall build_davis_ball(const GraphProduct& p, int radius) {
  if (radius < 0) throw InputError("negative ball radius");
  if (!p.groups().all_finite())
    throw UnsupportedError("coset balls need finite vertex groups");

  const QmBall elements = build_ball(p, radius);
  const std::vector<VertexSet> types = p.graph().complete_subsets();

  DavisBall ball;
  ball.radius = radius;
  // Each coset key appears exactly once: its representative is the unique
  // suffix-free element of the coset, and every representative short enough
  // for the ball is itself a ball element.
  for (const NormalForm& g : elements.vertices)
    for (const VertexSet& lambda : types)
      if (p.strip_suffix(g, lambda).suffix.is_identity())
        ball.vertices.push_back(DavisVertex{lambda, g});
  std::sort(ball.vertices.begin(), ball.vertices.end(),
            [](const DavisVertex& a, const DavisVertex& b) {
              if (shortlex_less(a.rep, b.rep)) return true;
              if (shortlex_less(b.rep, a.rep)) return false;
              return a.lambda < b.lambda;
            });
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i)
    ball.index.emplace(ball.vertices[i], i);

  // Every edge is listed once, from its endpoint with the smaller type. The
  // upper representative is never longer, so it is already a ball vertex.
  const int n = p.graph().size();
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i) {
    const DavisVertex& lower = ball.vertices[i];
    for (VertexId u = 0; u < n; ++u) {
      if (vertex_set_contains(lower.lambda, u)) continue;
      VertexSet up = vertex_set_union(lower.lambda, {u});
      if (!p.graph().is_complete(up)) continue;
      DavisVertex upper = davis_key(p, lower.rep.syllables(), up);
      ball.edges.push_back(DavisEdge{i, ball.index_of(upper), u});
    }
  }

  // A cube is keyed by its unique corner of smallest type plus the toggled
  // vertices; all other corners have weakly shorter representatives, so a
  // cube lies in the ball exactly when its bottom does.
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i) {
    const DavisVertex& bottom = ball.vertices[i];
    for (const VertexSet& axes : types) {
      if (axes.size() < 2) continue;
      if (!vertex_set_intersection(axes, bottom.lambda).empty()) continue;
      if (!p.graph().is_complete(vertex_set_union(axes, bottom.lambda))) continue;
      ball.cubes.push_back(DavisCube{i, axes});
    }
  }
  return ball;
}

std::vector<int> cube_corners(const GraphProduct& p, const DavisBall& ball,
                              const DavisCube& cube) {
  if (cube.bottom < 0 || cube.bottom >= static_cast<int>(ball.vertices.size()))
    throw InputError("cube bottom is not a ball vertex");
  const DavisVertex& bottom = ball.vertices[cube.bottom];
  if (make_vertex_set(cube.axes) != cube.axes || cube.axes.empty())
    throw InputError("cube axes must be a non-empty sorted vertex set");
  if (!vertex_set_intersection(cube.axes, bottom.lambda).empty() ||
      !p.graph().is_complete(vertex_set_union(cube.axes, bottom.lambda)))
    throw InputError("cube axes must extend the bottom type to a complete set");

  const int k = static_cast<int>(cube.axes.size());
  std::vector<int> corners;
  corners.reserve(std::size_t{1} << k);
  for (int mask = 0; mask < (1 << k); ++mask) {
    VertexSet type = bottom.lambda;
    for (int a = 0; a < k; ++a)
      if (mask & (1 << a)) type = vertex_set_union(type, {cube.axes[a]});
    corners.push_back(ball.index_of(davis_key(p, bottom.rep.syllables(), type)));
  }
  return corners;
}

DavisVertex aut_action(const GraphProduct& p, const Word& g,
                       const LocalAutomorphism& local, const DavisVertex& v) {
  validate_local(p, local);
  VertexSet type = checked_type(p, v.lambda);
  NormalForm moved = p.mul(g, apply(p, local_auto(local), v.rep.syllables()));
  VertexSet image_type;
  image_type.reserve(type.size());
  for (VertexId u : type) image_type.push_back(local.sigma[u]);
  return davis_key(p, moved.syllables(), make_vertex_set(image_type));
}

int edge_square_count(const GraphProduct& p, const DavisBall& ball, const DavisEdge& e) {
  bool listed = false;
  for (const DavisEdge& known : ball.edges)
    if (known.lower == e.lower && known.upper == e.upper && known.label == e.label) {
      listed = true;
      break;
    }
  if (!listed) throw InputError("not an edge of the ball");
  if (ball.vertices[e.lower].rep.length() > ball.radius - 1 ||
      ball.vertices[e.upper].rep.length() > ball.radius - 1)
    throw PreconditionError("edge touches the ball boundary; squares through it may be missing");

  int count = 0;
  for (const DavisCube& cube : ball.cubes) {
    if (cube.axes.size() != 2) continue;
    std::vector<int> c = cube_corners(p, ball, cube);
    const std::pair<int, int> sides[4] = {
        {c[0], c[1]}, {c[0], c[2]}, {c[1], c[3]}, {c[2], c[3]}};
    for (const auto& [lo, up] : sides)
      if (lo == e.lower && up == e.upper) ++count;
  }
  return count;
}

bool link_is_flag(const GraphProduct& p, const DavisBall& ball, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= static_cast<int>(ball.vertices.size()))
    throw InputError("link vertex is not a ball vertex");
  // Cubes at the vertex reach bottoms at most clique_number syllables deeper,
  // so this margin keeps every cube of the link inside the ball.
  if (ball.vertices[vertex_index].rep.length() > ball.radius - p.graph().clique_number())
    throw PreconditionError("vertex is too close to the ball boundary; its link may be truncated");

  std::map<int, int> slot;  // neighbour vertex -> incident-edge slot
  for (const DavisEdge& e : ball.edges) {
    int other = -1;
    if (e.lower == vertex_index) other = e.upper;
    if (e.upper == vertex_index) other = e.lower;
    if (other >= 0) {
      const int next = static_cast<int>(slot.size());
      slot.emplace(other, next);
    }
  }
  const int degree = static_cast<int>(slot.size());
  if (degree > 62) throw UnsupportedError("link has too many edges to check");

  std::vector<std::vector<bool>> square_linked(degree, std::vector<bool>(degree, false));
  std::set<std::uint64_t> spanned;  // incident-edge sets of cubes at the vertex
  for (const DavisCube& cube : ball.cubes) {
    std::vector<int> corners = cube_corners(p, ball, cube);
    int at = -1;
    for (int c = 0; c < static_cast<int>(corners.size()); ++c)
      if (corners[c] == vertex_index) at = c;
    if (at < 0) continue;
    const int k = static_cast<int>(cube.axes.size());
    std::uint64_t mask = 0;
    std::vector<int> slots;
    for (int a = 0; a < k; ++a) {
      const int s = slot.at(corners[at ^ (1 << a)]);
      mask |= std::uint64_t{1} << s;
      slots.push_back(s);
    }
    spanned.insert(mask);
    if (k == 2) {
      square_linked[slots[0]][slots[1]] = true;
      square_linked[slots[1]][slots[0]] = true;
    }
  }

  // Flag test: each set of incident edges that is pairwise linked by squares
  // must be the incident-edge set of one cube at the vertex.
  std::vector<int> clique;
  auto extend = [&](auto&& self, int from, std::uint64_t mask) -> bool {
    for (int cand = from; cand < degree; ++cand) {
      bool joined = true;
      for (int s : clique)
        if (!square_linked[s][cand]) {
          joined = false;
          break;
        }
      if (!joined) continue;
      clique.push_back(cand);
      const std::uint64_t grown = mask | (std::uint64_t{1} << cand);
      const bool ok = (clique.size() < 3 || spanned.count(grown)) && self(self, cand + 1, grown);
      clique.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return extend(extend, 0, 0);
}

bool crossing_correspondence(const GraphProduct& p, const DavisBall& ball,
                             const QmBall& qm_ball) {
  for (VertexId v = 0; v < p.graph().size(); ++v)
    if (!p.group(v).is_finite() || p.group(v).order() != 2)
      throw UnsupportedError(
          "edge parallelism matches hyperplane keys over order-two vertex groups only");

  const int edge_count = static_cast<int>(ball.edges.size());
  std::vector<int> parent(edge_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::map<std::pair<int, int>, int> edge_at;
  for (int i = 0; i < edge_count; ++i)
    edge_at.emplace(std::pair{ball.edges[i].lower, ball.edges[i].upper}, i);

  std::vector<Hyperplane> key(edge_count);
  for (int i = 0; i < edge_count; ++i)
    key[i] = make_hyperplane(p, ball.edges[i].label,
                             ball.vertices[ball.edges[i].lower].rep.syllables());

  // Parallelism: opposite sides of a square, and the edges below a shared
  // upper corner with the same label (they toggle the same group direction).
  std::set<std::pair<Hyperplane, Hyperplane>> crossings;
  for (const DavisCube& cube : ball.cubes) {
    if (cube.axes.size() != 2) continue;
    std::vector<int> c = cube_corners(p, ball, cube);
    auto at = [&](int x, int y) {
      auto it = edge_at.find(std::pair{c[x], c[y]});
      return it == edge_at.end() ? -1 : it->second;
    };
    const int e01 = at(0, 1), e02 = at(0, 2), e13 = at(1, 3), e23 = at(2, 3);
    if (e01 < 0 || e02 < 0 || e13 < 0 || e23 < 0) return false;
    unite(e01, e23);
    unite(e02, e13);
    if (!transverse(p, key[e01], key[e02])) return false;
    crossings.insert(std::minmax(key[e01], key[e02]));
  }
  std::map<std::pair<int, VertexId>, int> fan;  // (upper corner, label) -> first edge
  for (int i = 0; i < edge_count; ++i) {
    auto [it, fresh] = fan.emplace(std::pair{ball.edges[i].upper, ball.edges[i].label}, i);
    if (!fresh) unite(i, it->second);
  }

  // Every gluing above preserves the key, so each class must carry one key.
  std::map<int, Hyperplane> class_key;
  for (int i = 0; i < edge_count; ++i) {
    auto [it, fresh] = class_key.emplace(find(i), key[i]);
    if (!fresh && !(it->second == key[i])) return false;
  }

  // Keys based deep inside both balls: classes and keys must biject, and the
  // key sets of the two ball constructions must agree.
  const int deep = std::min(ball.radius, qm_ball.radius) - 2;
  std::map<Hyperplane, std::set<int>> classes_of;
  for (int i = 0; i < edge_count; ++i)
    if (key[i].base.length() <= deep) classes_of[key[i]].insert(find(i));
  std::set<Hyperplane> davis_keys;
  for (const auto& [deep_key, roots] : classes_of) {
    if (roots.size() != 1) return false;
    davis_keys.insert(deep_key);
  }
  std::set<Hyperplane> qm_keys;
  for (const Hyperplane& h : ball_hyperplanes(qm_ball))
    if (h.base.length() <= deep) qm_keys.insert(h);
  if (davis_keys != qm_keys) return false;

  // Transverse deep pairs whose common carrier chamber fits in the ball must
  // actually cross in a square.
  std::vector<Hyperplane> deep_list(davis_keys.begin(), davis_keys.end());
  for (std::size_t a = 0; a < deep_list.size(); ++a)
    for (std::size_t b = a + 1; b < deep_list.size(); ++b) {
      const Hyperplane& ja = deep_list[a];
      const Hyperplane& jb = deep_list[b];
      if (!transverse(p, ja, jb)) continue;
      GatePair gate = coset_gate_pair(p, carrier(p, ja), carrier(p, jb));
      if (gate.distance != 0) return false;
      VertexSet both =
          vertex_set_intersection(p.graph().star(ja.label), p.graph().star(jb.label));
      NormalForm chamber = p.strip_suffix(gate.in_a, both).rest;
      if (chamber.length() > ball.radius) continue;
      if (!crossings.count(std::minmax(ja, jb))) return false;
    }
  return true;
}

NormalForm rigid_element(const GraphProduct& p, std::vector<GroupValue> chosen) {
  const SimplicialGraph& graph = p.graph();
  const int n = graph.size();
  if (!graph.classify().atomic)
    throw PreconditionError("rigid elements need an atomic defining graph");
  if (chosen.empty())
    for (VertexId v = 0; v < n; ++v) chosen.push_back(p.group(v).generators().front());
  if (static_cast<int>(chosen.size()) != n)
    throw InputError("need one chosen element per vertex");
  for (VertexId v = 0; v < n; ++v) p.check_syllable(Syllable{v, chosen[v]});

  // Shortest, then lexicographically first closed vertex sequence covering
  // the graph with cyclically consecutive entries distinct and non-adjacent:
  // the product of the chosen elements along it shuffles and merges nowhere,
  // in any cyclic rotation.
  std::vector<VertexId> seq;
  std::vector<int> visits(n, 0);
  int covered = 0;
  auto admissible = [&](VertexId prev, VertexId next) {
    return prev != next && !graph.adjacent(prev, next);
  };
  auto search = [&](auto&& self, int length) -> bool {
    if (static_cast<int>(seq.size()) == length)
      return covered == n && admissible(seq.back(), seq.front());
    if (n - covered > length - static_cast<int>(seq.size())) return false;
    for (VertexId v = 0; v < n; ++v) {
      if (!seq.empty() && !admissible(seq.back(), v)) continue;
      seq.push_back(v);
      if (!visits[v]++) ++covered;
      if (self(self, length)) return true;
      if (!--visits[v]) --covered;
      seq.pop_back();
    }
    return false;
  };
  for (int length = n; length <= 2 * n && seq.empty(); ++length) search(search, length);
  if (seq.empty())
    throw PreconditionError("no covering vertex cycle avoids consecutive adjacency");

  Word word;
  for (VertexId v : seq) word.push_back(Syllable{v, chosen[v]});
  return p.reduce(word);
}

std::vector<LocalAutomorphism> fixing_locals(const GraphProduct& p, const Word& g) {
  if (!p.groups().all_finite())
    throw UnsupportedError("listing the local automorphisms fixing a word needs finite vertex groups");
  const NormalForm target = p.reduce(g);
  std::vector<LocalAutomorphism> fixing;
  for (const LocalAutomorphism& local : enumerate_locals(p))
    if (apply(p, local_auto(local), g) == target) fixing.push_back(local);
  return fixing;
}

AxisSegment axis_path(const GraphProduct& p, const std::vector<VertexId>& vpath,
                      const std::vector<GroupValue>& s, int k_range) {
  const SimplicialGraph& graph = p.graph();
  if (vpath.size() != 4 || s.size() != 4)
    throw InputError("axis data needs four chamber-path vertices and four elements");
  if (k_range < 0) throw InputError("negative axis range");
  for (int i = 0; i < 4; ++i) p.check_syllable(Syllable{vpath[i], s[i]});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vpath[i] == vpath[j])
        throw PreconditionError("the chamber path revisits a vertex; it is not an induced geodesic");
  for (int i = 0; i + 1 < 4; ++i)
    if (!graph.adjacent(vpath[i], vpath[i + 1]))
      throw PreconditionError("consecutive chamber-path vertices must be adjacent");
  if (graph.adjacent(vpath[0], vpath[2]) || graph.adjacent(vpath[1], vpath[3]) ||
      graph.adjacent(vpath[0], vpath[3]))
    throw PreconditionError("the chamber path has a chord; it is not an induced geodesic");

  const Word period{Syllable{vpath[2], s[2]}, Syllable{vpath[0], s[0]}};
  const NormalForm backward = p.inv(period);

  AxisSegment axis;
  NormalForm t;
  for (int k = 0; k < k_range; ++k) t = p.mul(t, backward);

  const VertexSet chamber_type{};
  axis.path.push_back(davis_key(p, t.syllables(), chamber_type));
  for (int k = -k_range; k <= k_range; ++k) {
    const NormalForm half = p.mul(t, Word{Syllable{vpath[2], s[2]}});
    const NormalForm next = p.mul(t, period);
    axis.path.push_back(davis_key(p, t.syllables(), VertexSet{vpath[2]}));
    axis.path.push_back(davis_key(p, half.syllables(), chamber_type));
    axis.path.push_back(davis_key(p, half.syllables(), VertexSet{vpath[0]}));
    axis.path.push_back(davis_key(p, next.syllables(), chamber_type));
    t = next;
  }

  NormalForm full;
  for (int k = 0; k < 2 * k_range + 1; ++k) full = p.mul(full, period);
  axis.geodesic = full.length() == 2 * (2 * k_range + 1);
  return axis;
}

}  // namespace gp
