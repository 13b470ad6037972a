#include "subnil/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

#include "subnil/error.hpp"
#include "subnil/numeric.hpp"

namespace subnil {

Group Group::closure(unsigned degree, std::vector<Perm> generators,
                     std::size_t element_cap, std::string name) {
  for (const Perm &gen : generators)
    if (gen.degree() != degree)
      throw Error("generator degree mismatch");

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm identity(degree);
  seen.insert(identity);
  queue.push_back(identity);
  for (const Perm &gen : generators) {
    if (seen.insert(gen).second)
      queue.push_back(gen);
  }
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    for (const Perm &gen : generators) {
      Perm next = current * gen;
      if (seen.insert(next).second) {
        if (seen.size() > element_cap)
          throw CapExceeded("group too large: closure exceeds " +
                            std::to_string(element_cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }

  Group g;
  g._name = std::move(name);
  g._degree = degree;
  g._elements.assign(seen.begin(), seen.end());
  std::sort(g._elements.begin(), g._elements.end());
  assert(g._elements[0].is_identity());

  for (const Perm &gen : generators) {
    Idx idx = g.index_of(gen);
    if (std::find(g._generators.begin(), g._generators.end(), idx) ==
        g._generators.end())
      g._generators.push_back(idx);
  }
  std::sort(g._generators.begin(), g._generators.end());

  g.build_tables();
  return g;
}

std::optional<Idx> Group::find(const Perm &p) const {
  auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
  if (it == _elements.end() || !(*it == p))
    return std::nullopt;
  return static_cast<Idx>(it - _elements.begin());
}

Idx Group::index_of(const Perm &p) const {
  auto idx = find(p);
  if (!idx)
    throw Error("element not in group");
  return *idx;
}

Idx Group::lookup_product(Idx a, Idx b) const {
  return index_of(_elements[a] * _elements[b]);
}

Idx Group::power(Idx x, std::uint64_t e) const {
  e %= element_order(x);
  Idx result = 0;
  Idx base = x;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Group::is_p_element(Idx i, std::uint64_t p) const {
  return is_p_power(_orders[i], p);
}

void Group::build_tables() {
  const std::size_t n = order();

  _inverse.resize(n);
  _orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    _inverse[i] = index_of(_elements[i].inverse());
    _orders[i] = static_cast<std::uint32_t>(_elements[i].order());
  }

  if (n > cayley_table_cap || n == 0)
    return;

  // Rows for the generators by direct composition, every other row derived
  // index-only: if a = c * g with g a generator, then a*b = c*(g*b).
  _table.assign(n * n, Idx(0));
  std::vector<bool> row_known(n, false);

  for (std::size_t b = 0; b < n; ++b)
    _table[0 * n + b] = static_cast<Idx>(b); // identity row
  row_known[0] = true;

  for (Idx g : _generators) {
    for (std::size_t b = 0; b < n; ++b)
      _table[g * n + b] = index_of(_elements[g] * _elements[b]);
    row_known[g] = true;
  }

  std::deque<Idx> queue;
  queue.push_back(0);
  for (Idx g : _generators)
    if (g != 0)
      queue.push_back(g);

  while (!queue.empty()) {
    Idx c = queue.front();
    queue.pop_front();
    for (Idx g : _generators) {
      Idx a = _table[c * n + g];
      if (row_known[a])
        continue;
      const Idx *grow = &_table[g * n];
      const Idx *crow = &_table[c * n];
      Idx *arow = &_table[a * n];
      for (std::size_t b = 0; b < n; ++b)
        arow[b] = crow[grow[b]];
      row_known[a] = true;
      queue.push_back(a);
    }
  }
  // Generators reach every element, so all rows are filled.
  assert(std::all_of(row_known.begin(), row_known.end(),
                     [](bool known) { return known; }));
}

SubgroupSet::SubgroupSet(const Group &parent, std::vector<Idx> members,
                         std::vector<Idx> generators)
    : _parent(&parent), _members(std::move(members)),
      _generators(std::move(generators)) {
  std::sort(_members.begin(), _members.end());
  _members.erase(std::unique(_members.begin(), _members.end()),
                 _members.end());
  _mask.assign((parent.order() + 63) / 64, 0);
  for (Idx m : _members)
    _mask[m >> 6] |= std::uint64_t(1) << (m & 63);
}

SubgroupSet SubgroupSet::trivial(const Group &parent) {
  return SubgroupSet(parent, {0});
}

SubgroupSet SubgroupSet::whole(const Group &parent) {
  std::vector<Idx> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<Idx>(i);
  std::vector<Idx> gens(parent.generator_indices());
  return SubgroupSet(parent, std::move(all), std::move(gens));
}

bool SubgroupSet::contains_all(const SubgroupSet &other) const {
  for (std::size_t w = 0; w < _mask.size(); ++w)
    if (other._mask[w] & ~_mask[w])
      return false;
  return true;
}

const std::vector<Idx> &SubgroupSet::generators() const {
  if (_generators.empty() && order() > 1) {
    // Greedy chain: each added generator at least doubles the subgroup
    // generated so far, so at most log2 |H| generators result.
    std::vector<Idx> gens;
    std::vector<std::uint64_t> built((_parent->order() + 63) / 64, 0);
    built[0] |= 1; // identity
    std::size_t built_count = 1;
    auto contains = [&](Idx i) {
      return (built[i >> 6] >> (i & 63)) & 1;
    };
    while (built_count < order()) {
      Idx next = 0;
      bool found = false;
      for (Idx m : _members)
        if (!contains(m)) {
          next = m;
          found = true;
          break;
        }
      assert(found);
      (void)found;
      gens.push_back(next);
      // Close under right multiplication by the chosen generators.
      std::vector<Idx> frontier;
      for (Idx m : _members)
        if (contains(m))
          frontier.push_back(m);
      while (!frontier.empty()) {
        std::vector<Idx> fresh;
        for (Idx a : frontier)
          for (Idx g : gens) {
            Idx t = _parent->mul(a, g);
            if (!contains(t)) {
              built[t >> 6] |= std::uint64_t(1) << (t & 63);
              ++built_count;
              fresh.push_back(t);
            }
          }
        frontier = std::move(fresh);
      }
    }
    _generators = std::move(gens);
  }
  return _generators;
}

SubgroupSet SubgroupSet::conjugated(Idx g) const {
  std::vector<Idx> members(_members.size());
  for (std::size_t i = 0; i < _members.size(); ++i)
    members[i] = _parent->conj(_members[i], g);
  std::vector<Idx> gens;
  gens.reserve(_generators.size());
  for (Idx gen : _generators)
    gens.push_back(_parent->conj(gen, g));
  return SubgroupSet(*_parent, std::move(members), std::move(gens));
}

SubgroupSet SubgroupSet::intersect(const SubgroupSet &other) const {
  std::vector<Idx> members;
  for (Idx m : _members)
    if (other.contains(m))
      members.push_back(m);
  return SubgroupSet(*_parent, std::move(members));
}

bool SubgroupSet::verify_closed() const {
  if (_members.empty() || !contains(0))
    return false;
  for (Idx a : _members) {
    if (!contains(_parent->inv(a)))
      return false;
    for (Idx b : _members)
      if (!contains(_parent->mul(a, b)))
        return false;
  }
  return true;
}

std::size_t IdxVecHash::operator()(const std::vector<Idx> &v) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Idx x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace subnil
