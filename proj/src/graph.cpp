#include "graphprod/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "graphprod/errors.hpp"

namespace gp {

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool vertex_set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vertex_set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet vertex_set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  names_ = std::move(names);
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < static_cast<int>(names_.size()); ++v) {
    if (!index.emplace(names_[v], v).second)
      throw InputError("duplicate vertex name: " + names_[v]);
  }
  adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw InputError("edge names unknown vertex: " + a);
    if (ib == index.end()) throw InputError("edge names unknown vertex: " + b);
    VertexId u = ia->second, v = ib->second;
    if (u == v) throw InputError("self-loop at vertex: " + a);
    if (adj_[u][v]) throw InputError("duplicate edge: " + a + " -- " + b);
    adj_[u][v] = adj_[v][u] = true;
  }
  build_links();
}

SimplicialGraph SimplicialGraph::from_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> names;
  names.reserve(vertex_count);
  for (int v = 0; v < vertex_count; ++v) names.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw InputError("edge endpoint out of range");
    named.emplace_back(names[u], names[v]);
  }
  return SimplicialGraph(std::move(names), named);
}

void SimplicialGraph::build_links() {
  links_.assign(size(), {});
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v = 0; v < size(); ++v)
      if (adj_[u][v]) links_[u].push_back(v);
}

std::optional<VertexId> SimplicialGraph::index_of(const std::string& name) const {
  for (VertexId v = 0; v < size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

VertexSet SimplicialGraph::star(VertexId v) const {
  VertexSet s = links_[v];
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

std::vector<std::pair<VertexId, VertexId>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v = u + 1; v < size(); ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

bool SimplicialGraph::is_complete(const VertexSet& s) const {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!adj_[s[i]][s[j]]) return false;
  return true;
}

std::vector<VertexSet> SimplicialGraph::complete_subsets() const {
  std::vector<VertexSet> out;
  // Grow cliques by largest member so each is produced exactly once.
  auto grow = [&](auto&& self, const VertexSet& clique) -> void {
    out.push_back(clique);
    VertexId lo = clique.empty() ? 0 : clique.back() + 1;
    for (VertexId v = lo; v < size(); ++v) {
      bool ok = true;
      for (VertexId c : clique)
        if (!adj_[c][v]) { ok = false; break; }
      if (ok) {
        VertexSet next = clique;
        next.push_back(v);
        self(self, next);
      }
    }
  };
  grow(grow, {});
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

int SimplicialGraph::clique_number() const {
  int best = 0;
  for (const auto& s : complete_subsets())
    best = std::max(best, static_cast<int>(s.size()));
  return best;
}

std::vector<VertexSet> SimplicialGraph::components_of(const VertexSet& keep) const {
  std::vector<bool> in(size(), false), seen(size(), false);
  for (VertexId v : keep) in[v] = true;
  std::vector<VertexSet> comps;
  for (VertexId v : keep) {
    if (seen[v]) continue;
    VertexSet comp;
    std::deque<VertexId> q{v};
    seen[v] = true;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      comp.push_back(x);
      for (VertexId y : links_[x])
        if (in[y] && !seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // `keep` is sorted, so BFS roots come in vertex order and each component is
  // discovered at its smallest member: already ordered by smallest member.
  return comps;
}

std::vector<VertexSet> SimplicialGraph::components() const {
  VertexSet all;
  for (VertexId v = 0; v < size(); ++v) all.push_back(v);
  return components_of(all);
}

std::vector<VertexSet> SimplicialGraph::components_minus_star(VertexId v) const {
  VertexSet keep;
  for (VertexId u = 0; u < size(); ++u)
    if (u != v && !adj_[u][v]) keep.push_back(u);
  return components_of(keep);
}

int SimplicialGraph::distance(VertexId u, VertexId v) const {
  std::vector<int> dist(size(), -1);
  std::deque<VertexId> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    if (x == v) return dist[x];
    for (VertexId y : links_[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return -1;
}

namespace {

// Shortest cycle through the BFS root is found by scanning non-tree edges;
// taking the minimum over all roots gives the girth exactly.
std::optional<int> shortest_cycle(const SimplicialGraph& g) {
  int best = std::numeric_limits<int>::max();
  for (VertexId root = 0; root < g.size(); ++root) {
    std::vector<int> dist(g.size(), -1), parent(g.size(), -1);
    std::deque<VertexId> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (VertexId y : g.link(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

}  // namespace

GraphClassification SimplicialGraph::classify() const {
  GraphClassification c;
  c.connected = components().size() <= 1;
  c.min_valence = size() == 0 ? 0
                              : static_cast<int>(
                                    std::min_element(
                                        links_.begin(), links_.end(),
                                        [](const VertexSet& a, const VertexSet& b) {
                                          return a.size() < b.size();
                                        })
                                        ->size());
  c.girth = shortest_cycle(*this);
  for (VertexId v = 0; v < size(); ++v) {
    VertexSet keep;
    for (VertexId u = 0; u < size(); ++u)
      if (u != v && !adj_[u][v]) keep.push_back(u);
    if (keep.empty()) continue;  // empty remainder is not separating
    if (components_of(keep).size() > 1) c.separating_stars.push_back(v);
  }
  c.molecular = c.connected && size() > 0 && c.min_valence >= 2 && c.girth_at_least(5);
  c.atomic = c.molecular && c.separating_stars.empty();
  return c;
}

bool SimplicialGraph::is_star_of(VertexId center) const {
  return static_cast<int>(star(center).size()) == size();
}

std::optional<SilWitness> SimplicialGraph::sil_witness() const {
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v = u + 1; v < size(); ++v) {
      int d = distance(u, v);
      if (d >= 0 && d < 2) continue;  // adjacent pairs never witness
      VertexSet common = vertex_set_intersection(link(u), link(v));
      VertexSet keep;
      for (VertexId w = 0; w < size(); ++w)
        if (!vertex_set_contains(common, w)) keep.push_back(w);
      for (const VertexSet& comp : components_of(keep)) {
        if (!vertex_set_contains(comp, u) && !vertex_set_contains(comp, v))
          return SilWitness{u, v, comp};
      }
    }
  }
  return std::nullopt;
}

namespace {

void extend_isometry(const SimplicialGraph& g, std::vector<VertexId>& perm,
                     std::vector<bool>& used,
                     std::vector<std::vector<VertexId>>& out) {
  int k = static_cast<int>(perm.size());
  if (k == g.size()) {
    out.push_back(perm);
    return;
  }
  for (VertexId cand = 0; cand < g.size(); ++cand) {
    if (used[cand]) continue;
    if (g.link(k).size() != g.link(cand).size()) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) ok = g.adjacent(j, k) == g.adjacent(perm[j], cand);
    if (!ok) continue;
    perm.push_back(cand);
    used[cand] = true;
    extend_isometry(g, perm, used, out);
    perm.pop_back();
    used[cand] = false;
  }
}

}  // namespace

std::vector<std::vector<VertexId>> graph_isometries(const SimplicialGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> perm;
  std::vector<bool> used(g.size(), false);
  extend_isometry(g, perm, used, out);
  return out;
}

}  // namespace gp
