#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subnil/cache.hpp"
#include "subnil/perm.hpp"

namespace subnil {

using Idx = std::uint32_t;

// A finite permutation group with its full element set enumerated.
//
// Elements are stored in lexicographic order of their image sequences, so
// index 0 is always the identity and indices are stable, reproducible
// handles. Composition is answered from a cached Cayley table for small
// groups and by compose-and-lookup otherwise. Instances are immutable after
// construction; the attached SlotCache makes lazily computed structure
// (conjugacy classes, Sylow systems, ...) safe to share across threads.
class Group {
public:
  static constexpr std::size_t default_element_cap = 100000;
  static constexpr std::size_t cayley_table_cap = 4096;

  // Closure of the generators under composition. Throws CapExceeded when
  // the group would exceed element_cap.
  static Group closure(unsigned degree, std::vector<Perm> generators,
                       std::size_t element_cap = default_element_cap,
                       std::string name = {});

  const std::string &name() const { return _name; }
  unsigned degree() const { return _degree; }
  std::size_t order() const { return _elements.size(); }

  const Perm &element(Idx i) const { return _elements[i]; }
  const std::vector<Perm> &elements() const { return _elements; }
  const std::vector<Idx> &generator_indices() const { return _generators; }

  std::optional<Idx> find(const Perm &p) const;
  Idx index_of(const Perm &p) const; // throws Error if absent

  bool has_cayley_table() const { return !_table.empty(); }

  Idx mul(Idx a, Idx b) const {
    if (!_table.empty())
      return _table[a * order() + b];
    return lookup_product(a, b);
  }
  Idx inv(Idx a) const { return _inverse[a]; }
  // Conjugate g^-1 * x * g.
  Idx conj(Idx x, Idx g) const { return mul(mul(_inverse[g], x), g); }
  // Commutator x^-1 y^-1 x y.
  Idx commutator(Idx x, Idx y) const {
    return mul(mul(_inverse[x], _inverse[y]), mul(x, y));
  }
  Idx power(Idx x, std::uint64_t e) const;

  std::uint64_t element_order(Idx i) const { return _orders[i]; }
  // True iff element i has order a power of p (identity included).
  bool is_p_element(Idx i, std::uint64_t p) const;

  SlotCache &cache() const { return _cache; }

private:
  Group() = default;
  Idx lookup_product(Idx a, Idx b) const;
  void build_tables();

  std::string _name;
  unsigned _degree = 0;
  std::vector<Perm> _elements; // sorted lexicographically
  std::vector<Idx> _generators;
  std::vector<Idx> _inverse;
  std::vector<std::uint32_t> _orders;
  std::vector<Idx> _table; // Cayley table, order^2 entries, small groups only

  mutable SlotCache _cache;
};

// A subgroup of a parent group, stored as a sorted member index set plus a
// bitmask for O(1) membership. Optionally carries a known generating set.
class SubgroupSet {
public:
  SubgroupSet(const Group &parent, std::vector<Idx> members,
              std::vector<Idx> generators = {});

  static SubgroupSet trivial(const Group &parent);
  static SubgroupSet whole(const Group &parent);

  const Group &parent() const { return *_parent; }
  std::size_t order() const { return _members.size(); }
  const std::vector<Idx> &members() const { return _members; }
  bool contains(Idx i) const {
    return (_mask[i >> 6] >> (i & 63)) & 1;
  }
  bool contains_all(const SubgroupSet &other) const;
  bool same_members(const SubgroupSet &other) const {
    return _members == other._members;
  }
  bool is_whole_group() const { return order() == _parent->order(); }

  // Generators recorded at construction, or a greedily computed small
  // generating set (empty for the trivial subgroup).
  const std::vector<Idx> &generators() const;

  SubgroupSet conjugated(Idx g) const;
  SubgroupSet intersect(const SubgroupSet &other) const;

  // Debug helper: verifies closure under multiplication and inversion.
  bool verify_closed() const;

private:
  const Group *_parent;
  std::vector<Idx> _members;
  std::vector<std::uint64_t> _mask;
  mutable std::vector<Idx> _generators;
};

struct IdxVecHash {
  std::size_t operator()(const std::vector<Idx> &v) const;
};

} // namespace subnil
