#include "subnil/structure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "subnil/error.hpp"
#include "subnil/numeric.hpp"
#include "subnil/sylow.hpp"

namespace subnil {

const ConjugacyClasses &conjugacy_classes(const Group &g) {
  return g.cache().get_or_build<ConjugacyClasses>("classes", [&g] {
    const std::size_t n = g.order();
    ConjugacyClasses cc;
    cc.class_of.assign(n, UINT32_MAX);
    for (Idx i = 0; i < n; ++i) {
      if (cc.class_of[i] != UINT32_MAX)
        continue;
      std::uint32_t id = static_cast<std::uint32_t>(cc.classes.size());
      std::vector<Idx> orbit{i};
      cc.class_of[i] = id;
      std::deque<Idx> queue{i};
      while (!queue.empty()) {
        Idx x = queue.front();
        queue.pop_front();
        for (Idx gen : g.generator_indices()) {
          Idx y = g.conj(x, gen);
          if (cc.class_of[y] == UINT32_MAX) {
            cc.class_of[y] = id;
            orbit.push_back(y);
            queue.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      cc.classes.push_back(std::move(orbit));
    }
    return cc;
  });
}

namespace {

// Closure of the given generators under right multiplication, as an index
// set. Mark array sized |G|; linear in the result times the generator count.
std::vector<Idx> close_indices(const Group &g, std::span<const Idx> gens) {
  std::vector<std::uint64_t> mask((g.order() + 63) / 64, 0);
  auto contains = [&](Idx i) { return (mask[i >> 6] >> (i & 63)) & 1; };
  auto insert = [&](Idx i) { mask[i >> 6] |= std::uint64_t(1) << (i & 63); };

  std::vector<Idx> members{0};
  insert(0);
  std::deque<Idx> queue{0};
  while (!queue.empty()) {
    Idx a = queue.front();
    queue.pop_front();
    for (Idx s : gens) {
      Idx t = g.mul(a, s);
      if (!contains(t)) {
        insert(t);
        members.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

} // namespace

SubgroupSet subgroup_generated(const Group &g, std::span<const Idx> seeds) {
  for (Idx s : seeds)
    if (s >= g.order())
      throw Error("subgroup seed index out of range");
  std::vector<Idx> gens;
  for (Idx s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end())
      gens.push_back(s);
  return SubgroupSet(g, close_indices(g, gens), std::move(gens));
}

SubgroupSet join(const SubgroupSet &h, Idx extra) {
  const Group &g = h.parent();
  if (h.contains(extra))
    return h;
  std::vector<Idx> gens(h.generators());
  gens.push_back(extra);
  return SubgroupSet(g, close_indices(g, gens), std::move(gens));
}

SubgroupSet join(const SubgroupSet &a, const SubgroupSet &b) {
  const Group &g = a.parent();
  if (a.contains_all(b))
    return a;
  if (b.contains_all(a))
    return b;
  std::vector<Idx> gens(a.generators());
  for (Idx x : b.generators())
    if (std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  return SubgroupSet(g, close_indices(g, gens), std::move(gens));
}

Idx p_part(const Group &g, Idx x, std::uint64_t p) {
  if (!is_prime(p))
    throw Error("p_part: p must be prime");
  std::uint64_t m = g.element_order(x);
  std::uint64_t pa = p_part_of(m, p);
  if (pa == 1)
    return 0; // identity when p does not divide |x|
  std::uint64_t rest = m / pa;
  std::uint64_t t = mod_inv(rest % pa, pa);
  return g.power(x, rest * t);
}

SubgroupSet centralizer(const Group &g, Idx x) {
  std::vector<Idx> members;
  for (Idx i = 0; i < g.order(); ++i)
    if (g.mul(i, x) == g.mul(x, i))
      members.push_back(i);
  return SubgroupSet(g, std::move(members));
}

const SubgroupSet &center(const Group &g) {
  return g.cache().get_or_build<SubgroupSet>("center", [&g] {
    std::vector<Idx> members;
    for (Idx i = 0; i < g.order(); ++i) {
      bool central = true;
      for (Idx gen : g.generator_indices())
        if (g.mul(i, gen) != g.mul(gen, i)) {
          central = false;
          break;
        }
      if (central)
        members.push_back(i);
    }
    SubgroupSet z(g, std::move(members));
    z.generators();
    return z;
  });
}

SubgroupSet normalizer(const Group &g, const SubgroupSet &h) {
  const auto &hgens = h.generators();
  std::vector<Idx> members;
  for (Idx i = 0; i < g.order(); ++i) {
    bool normalizes = true;
    for (Idx hg : hgens)
      if (!h.contains(g.conj(hg, i))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      members.push_back(i);
  }
  return SubgroupSet(g, std::move(members));
}

SubgroupSet normal_closure(const SubgroupSet &k, const SubgroupSet &h) {
  if (!k.contains_all(h))
    throw Error("normal_closure: H must be contained in K");
  SubgroupSet n = h;
  std::deque<Idx> queue(h.generators().begin(), h.generators().end());
  const auto kgens = k.generators(); // copy: k may alias n
  while (!queue.empty()) {
    Idx t = queue.front();
    queue.pop_front();
    for (Idx kg : kgens) {
      Idx c = k.parent().conj(t, kg);
      if (!n.contains(c)) {
        n = join(n, c);
        queue.push_back(c);
      }
    }
  }
  return n;
}

bool is_nilpotent_members(const Group &g, std::span<const Idx> members) {
  const std::uint64_t n = members.size();
  for (auto &[p, e] : factorize(n)) {
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < e; ++i)
      expected *= p;
    std::uint64_t count = 0;
    for (Idx m : members)
      if (g.is_p_element(m, p))
        ++count;
    if (count != expected)
      return false;
  }
  return true;
}

bool is_nilpotent(const Group &g) {
  std::vector<Idx> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<Idx>(i);
  return is_nilpotent_members(g, all);
}

bool is_nilpotent(const SubgroupSet &h) {
  return is_nilpotent_members(h.parent(), h.members());
}

bool is_subnormal(const SubgroupSet &h, const SubgroupSet &k) {
  if (!k.contains_all(h))
    throw Error("is_subnormal: H must be contained in K");
  SubgroupSet current = k;
  for (;;) {
    if (current.order() == h.order())
      return true; // current == h since h <= current
    SubgroupSet next = normal_closure(current, h);
    if (next.order() == current.order())
      return false; // chain stabilized strictly above H
    current = std::move(next);
  }
}

const SubgroupSet &o_p(const Group &g, std::uint64_t p) {
  return g.cache().get_or_build<SubgroupSet>(
      "o_p/" + std::to_string(p), [&g, p] {
        if (g.order() % p != 0)
          return SubgroupSet::trivial(g);
        const SylowSystem &sys = sylow_system(g, p);
        SubgroupSet core = sys.representative;
        for (const SubgroupSet &conj : sys.conjugates)
          core = core.intersect(conj);
        core.generators();
        return core;
      });
}

const SubgroupSet &fitting(const Group &g) {
  return g.cache().get_or_build<SubgroupSet>("fitting", [&g] {
    std::vector<Idx> seeds;
    for (std::uint64_t p : prime_divisors(g.order())) {
      const SubgroupSet &core = o_p(g, p);
      seeds.insert(seeds.end(), core.members().begin(), core.members().end());
    }
    SubgroupSet f = subgroup_generated(g, seeds);
    f.generators();
    return f;
  });
}

const SubgroupSet &hypercenter(const Group &g) {
  return g.cache().get_or_build<SubgroupSet>("hypercenter", [&g] {
    const std::size_t n = g.order();
    // Ascending series from the trivial subgroup; membership in the next
    // term only needs commutators against the group generators because
    // each term is normal.
    std::vector<bool> in_z(n, false);
    in_z[0] = true;
    std::size_t size = 1;
    for (;;) {
      std::vector<Idx> next;
      for (Idx x = 0; x < n; ++x) {
        bool ok = true;
        for (Idx gen : g.generator_indices())
          if (!in_z[g.commutator(x, gen)]) {
            ok = false;
            break;
          }
        if (ok)
          next.push_back(x);
      }
      if (next.size() == size) {
        SubgroupSet z(g, std::move(next));
        z.generators();
        return z;
      }
      size = next.size();
      std::fill(in_z.begin(), in_z.end(), false);
      for (Idx x : next)
        in_z[x] = true;
    }
  });
}

std::vector<Idx> small_generating_set(const SubgroupSet &h) {
  return h.generators();
}

} // namespace subnil
