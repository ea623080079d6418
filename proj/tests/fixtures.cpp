#include "fixtures.hpp"

namespace fixtures {

using gp::GraphProduct;
using gp::SimplicialGraph;
using gp::VertexGroup;
using gp::VertexGroups;

namespace {

VertexGroups all_z2(int n) {
  std::vector<VertexGroup> gs;
  for (int i = 0; i < n; ++i) gs.push_back(VertexGroup::cyclic(2));
  return VertexGroups(std::move(gs));
}

}  // namespace

GraphProduct c5_racg() {
  auto g = SimplicialGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  return GraphProduct(g, all_z2(5));
}

GraphProduct k13_racg() {
  SimplicialGraph g({"u", "v", "w", "z"}, {{"u", "w"}, {"v", "w"}, {"z", "w"}});
  return GraphProduct(g, all_z2(4));
}

GraphProduct z2_z3_z2_path() {
  SimplicialGraph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::vector<VertexGroup> gs{VertexGroup::cyclic(2), VertexGroup::cyclic(3),
                              VertexGroup::cyclic(2)};
  return GraphProduct(g, VertexGroups(std::move(gs)));
}

GraphProduct z2_z2_free() {
  SimplicialGraph g({"a", "b"}, {});
  return GraphProduct(g, all_z2(2));
}

GraphProduct p3_racg() {
  SimplicialGraph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  return GraphProduct(g, all_z2(3));
}

GraphProduct c5_one_int() {
  auto g = SimplicialGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::vector<VertexGroup> gs{VertexGroup::infinite_cyclic()};
  for (int i = 1; i < 5; ++i) gs.push_back(VertexGroup::cyclic(2));
  return GraphProduct(g, VertexGroups(std::move(gs)));
}

GraphProduct two_pentagons_racg() {
  // Pentagons 0-1-2-3-4-0 and 0-5-6-7-8-0 sharing vertex 0.
  auto g = SimplicialGraph::from_edges(
      9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
  return GraphProduct(g, all_z2(9));
}

GraphProduct k3_racg() {
  auto g = SimplicialGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  return GraphProduct(g, all_z2(3));
}

gp::Word involutions(const std::vector<int>& vertices) {
  gp::Word w;
  for (int v : vertices) w.push_back({v, 1});
  return w;
}

}  // namespace fixtures
