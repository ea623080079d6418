#include "graphprod/vertex_groups.hpp"

#include <algorithm>
#include <numeric>

#include "graphprod/errors.hpp"

namespace gp {

VertexGroup VertexGroup::finite_table(std::vector<std::string> elements,
                                      std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(elements.size());
  if (n < 2) throw InputError("vertex groups must be non-trivial");
  if (static_cast<int>(table.size()) != n)
    throw InputError("multiplication table must be square");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw InputError("multiplication table must be square");
  for (const auto& row : table)
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("table entry out of range");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[i] == elements[j])
        throw InputError("duplicate element name: " + elements[i]);
  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i)
      throw InputError("element 0 is not an identity");
  }
  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]]) throw InputError("row is not a permutation");
      if (col[table[j][i]]) throw InputError("column is not a permutation");
      row[table[i][j]] = col[table[j][i]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("multiplication table is not associative");

  VertexGroup g;
  g.kind_ = GroupKind::FiniteTable;
  g.order_ = n;
  g.names_ = std::move(elements);
  g.mul_ = std::move(table);
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul_[a][b] == 0) g.inv_[a] = b;
  return g;
}

VertexGroup VertexGroup::cyclic(int order) {
  if (order < 2) throw InputError("cyclic vertex groups need order >= 2");
  VertexGroup g;
  g.kind_ = GroupKind::Cyclic;
  g.order_ = order;
  return g;
}

VertexGroup VertexGroup::infinite_cyclic() {
  VertexGroup g;
  g.kind_ = GroupKind::InfiniteCyclic;
  return g;
}

int VertexGroup::order() const {
  if (!is_finite()) throw UnsupportedError("infinite cyclic group has no order");
  return order_;
}

bool VertexGroup::is_valid(GroupValue a) const {
  if (kind_ == GroupKind::InfiniteCyclic) return true;
  return a >= 0 && a < order_;
}

GroupValue VertexGroup::mul(GroupValue a, GroupValue b) const {
  if (!is_valid(a) || !is_valid(b)) throw InputError("group value out of range");
  switch (kind_) {
    case GroupKind::FiniteTable:
      return mul_[a][b];
    case GroupKind::Cyclic:
      return (a + b) % order_;
    case GroupKind::InfiniteCyclic:
      return a + b;
  }
  return 0;
}

GroupValue VertexGroup::inv(GroupValue a) const {
  if (!is_valid(a)) throw InputError("group value out of range");
  switch (kind_) {
    case GroupKind::FiniteTable:
      return inv_[a];
    case GroupKind::Cyclic:
      return a == 0 ? 0 : order_ - a;
    case GroupKind::InfiniteCyclic:
      return -a;
  }
  return 0;
}

std::vector<GroupValue> VertexGroup::nontrivial_elements() const {
  if (!is_finite())
    throw UnsupportedError("cannot enumerate an infinite cyclic group");
  std::vector<GroupValue> out;
  for (int a = 1; a < order_; ++a) out.push_back(a);
  return out;
}

std::vector<GroupValue> VertexGroup::generators() const {
  if (kind_ == GroupKind::InfiniteCyclic) return {1};
  if (kind_ == GroupKind::Cyclic) return {1};
  return nontrivial_elements();
}

std::string VertexGroup::value_name(GroupValue a) const {
  if (!is_valid(a)) throw InputError("group value out of range");
  if (kind_ == GroupKind::FiniteTable) return names_[a];
  return std::to_string(a);
}

GroupValue VertexGroup::value_by_name(const std::string& name) const {
  if (kind_ == GroupKind::FiniteTable) {
    for (int i = 0; i < order_; ++i)
      if (names_[i] == name) return i;
    throw InputError("unknown element name: " + name);
  }
  GroupValue v = 0;
  try {
    size_t pos = 0;
    v = std::stoll(name, &pos);
    if (pos != name.size()) throw InputError("bad exponent: " + name);
  } catch (const std::logic_error&) {
    throw InputError("bad exponent: " + name);
  }
  if (kind_ == GroupKind::Cyclic) {
    v %= order_;
    if (v < 0) v += order_;
  }
  return v;
}

bool VertexGroup::same_structure(const VertexGroup& other) const {
  return !enumerate_isos(*this, other).empty();
}

const VertexGroup& VertexGroups::at(VertexId v) const {
  if (v < 0 || v >= size()) throw InputError("vertex id out of range");
  return groups_[v];
}

bool VertexGroups::all_finite() const {
  for (int v = 0; v < size(); ++v)
    if (!groups_[v].is_finite()) return false;
  return true;
}

GroupIso GroupIso::finite(const VertexGroup& source, const VertexGroup& target,
                          std::vector<GroupValue> table) {
  if (!source.is_finite() || !target.is_finite())
    throw InputError("finite iso over non-finite groups");
  const int n = source.order();
  if (target.order() != n || static_cast<int>(table.size()) != n)
    throw InputError("iso table has wrong size");
  if (table[0] != 0) throw InputError("iso must fix the identity");
  std::vector<bool> hit(n, false);
  for (GroupValue x : table) {
    if (x < 0 || x >= n || hit[x]) throw InputError("iso table is not a bijection");
    hit[x] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[source.mul(a, b)] != target.mul(table[a], table[b]))
        throw InputError("iso table is not multiplicative");
  GroupIso iso;
  iso.finite_ = true;
  iso.table_ = std::move(table);
  return iso;
}

GroupIso GroupIso::infinite_cyclic(int power) {
  if (power != 1 && power != -1)
    throw InputError("infinite cyclic iso must have power +1 or -1");
  GroupIso iso;
  iso.finite_ = false;
  iso.power_ = power;
  return iso;
}

GroupIso GroupIso::identity(const VertexGroup& g) {
  if (!g.is_finite()) return infinite_cyclic(1);
  std::vector<GroupValue> t(g.order());
  std::iota(t.begin(), t.end(), 0);
  GroupIso iso;
  iso.finite_ = true;
  iso.table_ = std::move(t);
  return iso;
}

GroupValue GroupIso::apply(GroupValue a) const {
  if (!finite_) return power_ * a;
  if (a < 0 || a >= static_cast<GroupValue>(table_.size()))
    throw InputError("group value out of range");
  return table_[a];
}

GroupIso GroupIso::inverse() const {
  if (!finite_) return *this;  // both power maps are involutions
  GroupIso iso;
  iso.finite_ = true;
  iso.table_.assign(table_.size(), 0);
  for (size_t a = 0; a < table_.size(); ++a) iso.table_[table_[a]] = a;
  return iso;
}

bool GroupIso::is_identity() const {
  if (!finite_) return power_ == 1;
  for (size_t a = 0; a < table_.size(); ++a)
    if (table_[a] != static_cast<GroupValue>(a)) return false;
  return true;
}

namespace {

// Backtracking over images in element order; multiplication closes the map,
// so conflicts prune early.
void extend_iso(const VertexGroup& s, const VertexGroup& t,
                std::vector<GroupValue>& table, std::vector<bool>& used, int next,
                std::vector<GroupIso>& out) {
  const int n = s.order();
  if (next == n) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table[s.mul(a, b)] != t.mul(table[a], table[b])) return;
    out.push_back(GroupIso::finite(s, t, table));
    return;
  }
  for (int img = 1; img < n; ++img) {
    if (used[img]) continue;
    bool ok = true;
    // Partial multiplicativity against already-assigned images.
    for (int a = 0; a < next && ok; ++a) {
      GroupValue p = s.mul(a, next);
      if (p < next && table[p] != t.mul(table[a], img)) ok = false;
      GroupValue q = s.mul(next, a);
      if (q < next && table[q] != t.mul(img, table[a])) ok = false;
    }
    if (!ok) continue;
    table[next] = img;
    used[img] = true;
    extend_iso(s, t, table, used, next + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<GroupIso> enumerate_isos(const VertexGroup& source,
                                     const VertexGroup& target) {
  if (!source.is_finite() && !target.is_finite())
    return {GroupIso::infinite_cyclic(1), GroupIso::infinite_cyclic(-1)};
  if (!source.is_finite() || !target.is_finite()) return {};
  if (source.order() != target.order()) return {};
  std::vector<GroupValue> table(source.order(), 0);
  std::vector<bool> used(source.order(), false);
  std::vector<GroupIso> out;
  extend_iso(source, target, table, used, 1, out);
  return out;
}

}  // namespace gp
