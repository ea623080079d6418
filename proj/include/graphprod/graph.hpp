#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gp {

// Vertices are dense indices 0..n-1; the index order is the canonical total
// order used by every deterministic tie-break in the library. Names are kept
// only for I/O.
using VertexId = int;
using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free

VertexSet make_vertex_set(std::vector<VertexId> vs);
bool vertex_set_contains(const VertexSet& s, VertexId v);
VertexSet vertex_set_union(const VertexSet& a, const VertexSet& b);
VertexSet vertex_set_intersection(const VertexSet& a, const VertexSet& b);

struct GraphClassification {
  bool connected = false;
  int min_valence = 0;
  std::optional<int> girth;  // nullopt = no cycle
  VertexSet separating_stars;
  bool molecular = false;  // connected, min valence >= 2, girth >= 5
  bool atomic = false;     // molecular and no separating stars

  bool girth_at_least(int k) const { return !girth.has_value() || *girth >= k; }
};

struct SilWitness {
  VertexId u = -1;
  VertexId v = -1;  // d(u, v) >= 2
  VertexSet component;  // component of the graph minus link(u) & link(v)
                        // containing neither u nor v
};

// Finite simplicial graph: no loops, no multi-edges.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  // Throws InputError on duplicate names, self-loops, duplicate edges, or
  // edges naming unknown vertices.
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& edges);
  // Index-based constructor used by tests and internal code.
  static SimplicialGraph from_edges(int vertex_count,
                                    const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> index_of(const std::string& name) const;

  bool adjacent(VertexId u, VertexId v) const { return adj_[u][v]; }
  const VertexSet& link(VertexId v) const { return links_[v]; }
  VertexSet star(VertexId v) const;  // link(v) + v, sorted
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // True when every pair of (distinct) members of s is adjacent. The empty
  // set and singletons are complete.
  bool is_complete(const VertexSet& s) const;
  // All complete subsets, the empty set included, ordered by size then
  // lexicographically.
  std::vector<VertexSet> complete_subsets() const;
  int clique_number() const;

  // Connected components of the full graph, each sorted, ordered by smallest
  // member.
  std::vector<VertexSet> components() const;
  // Components of the induced subgraph on `keep` (same ordering).
  std::vector<VertexSet> components_of(const VertexSet& keep) const;
  // Components of the graph minus star(v).
  std::vector<VertexSet> components_minus_star(VertexId v) const;

  GraphClassification classify() const;

  // Lexicographically first witness (u, v in vertex order, then component by
  // smallest member), or absent when the graph has no such pair.
  std::optional<SilWitness> sil_witness() const;
  bool has_sil() const { return sil_witness().has_value(); }

  // Graph distance (edge count); -1 when disconnected.
  int distance(VertexId u, VertexId v) const;

  // True when star(center) covers the whole graph.
  bool is_star_of(VertexId center) const;

 private:
  void build_links();

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
  std::vector<VertexSet> links_;
};

// All self-bijections preserving adjacency both ways, in lexicographic order
// (the identity comes first).
std::vector<std::vector<VertexId>> graph_isometries(const SimplicialGraph& g);

}  // namespace gp
