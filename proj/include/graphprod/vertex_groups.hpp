#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphprod/graph.hpp"

namespace gp {

// Element encoding shared by every group kind: 0 is the identity. Finite
// kinds store the element index into their table; the infinite cyclic kind
// stores the exponent of the generator.
using GroupValue = std::int64_t;

enum class GroupKind { FiniteTable, Cyclic, InfiniteCyclic };

// One vertex group. Finite tables are validated as groups on construction
// (identity first, Latin-square rows and columns, associativity); cyclic
// kinds use modular or integer arithmetic directly.
class VertexGroup {
 public:
  // elements[0] must name the identity; table[i][j] = index of e_i * e_j.
  static VertexGroup finite_table(std::vector<std::string> elements,
                                  std::vector<std::vector<int>> table);
  static VertexGroup cyclic(int order);  // order >= 2
  static VertexGroup infinite_cyclic();

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != GroupKind::InfiniteCyclic; }
  // Order for finite kinds; throws UnsupportedError otherwise.
  int order() const;

  bool is_valid(GroupValue a) const;
  GroupValue mul(GroupValue a, GroupValue b) const;
  GroupValue inv(GroupValue a) const;
  // Non-identity elements in canonical order; throws UnsupportedError for the
  // infinite cyclic kind.
  std::vector<GroupValue> nontrivial_elements() const;
  // A generating set: every non-identity element for finite tables, the
  // canonical generator for cyclic kinds.
  std::vector<GroupValue> generators() const;

  std::string value_name(GroupValue a) const;
  GroupValue value_by_name(const std::string& name) const;

  bool same_structure(const VertexGroup& other) const;

 private:
  VertexGroup() = default;
  GroupKind kind_ = GroupKind::Cyclic;
  int order_ = 0;                       // finite kinds
  std::vector<std::string> names_;      // FiniteTable
  std::vector<std::vector<int>> mul_;   // FiniteTable
  std::vector<int> inv_;                // FiniteTable
};

// The family of vertex groups of a graph product, indexed by VertexId.
class VertexGroups {
 public:
  VertexGroups() = default;
  explicit VertexGroups(std::vector<VertexGroup> groups) : groups_(std::move(groups)) {}

  int size() const { return static_cast<int>(groups_.size()); }
  const VertexGroup& at(VertexId v) const;
  bool all_finite() const;

 private:
  std::vector<VertexGroup> groups_;
};

// Isomorphism between two vertex groups, validated on construction
// (bijective and multiplicative). Finite kinds carry an element table;
// infinite cyclic carries the image exponent of the generator (+1 or -1).
class GroupIso {
 public:
  // table[i] = image of source element i; table[0] must be 0.
  static GroupIso finite(const VertexGroup& source, const VertexGroup& target,
                         std::vector<GroupValue> table);
  static GroupIso infinite_cyclic(int power);  // power in {+1, -1}
  static GroupIso identity(const VertexGroup& g);

  GroupValue apply(GroupValue a) const;
  GroupIso inverse() const;
  bool is_identity() const;

  bool finite_kind() const { return finite_; }
  const std::vector<GroupValue>& table() const { return table_; }
  int power() const { return power_; }

  bool operator==(const GroupIso&) const = default;

 private:
  GroupIso() = default;
  bool finite_ = true;
  std::vector<GroupValue> table_;  // finite kinds
  int power_ = 1;                  // infinite cyclic
};

// All isomorphisms source -> target, deterministically ordered. Finite kinds
// only get enumerated; a pair of infinite cyclic groups yields the two power
// maps. Incompatible pairs yield the empty list.
std::vector<GroupIso> enumerate_isos(const VertexGroup& source,
                                     const VertexGroup& target);

}  // namespace gp
