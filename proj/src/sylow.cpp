#include "subnil/sylow.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <set>

#include "subnil/error.hpp"
#include "subnil/numeric.hpp"
#include "subnil/structure.hpp"

namespace subnil {

namespace {

SylowSystem build_sylow_system(const Group &g, std::uint64_t p) {
  if (!is_prime(p))
    throw Error("sylow: not a prime");
  if (g.order() % p != 0)
    throw Error("prime does not divide group order");

  const std::uint64_t target = p_part_of(g.order(), p);

  // Grow from a cyclic p-subgroup: while P is not full, its normalizer
  // contains a strictly larger p-subgroup, and adjoining any p-element of
  // N_G(P) \ P yields one.
  Idx seed = 0;
  for (Idx i = 1; i < g.order(); ++i)
    if (g.is_p_element(i, p) && g.element_order(i) > 1) {
      seed = i;
      break;
    }
  assert(seed != 0 && "Cauchy: a p-element exists");

  SubgroupSet rep = subgroup_generated(g, std::array<Idx, 1>{seed});
  while (rep.order() < target) {
    SubgroupSet norm = normalizer(g, rep);
    bool grown = false;
    for (Idx y : norm.members()) {
      if (rep.contains(y) || !g.is_p_element(y, p) || g.element_order(y) == 1)
        continue;
      rep = join(rep, y);
      grown = true;
      break;
    }
    if (!grown) {
      // Unreachable by Sylow theory; scan all p-elements as a guard
      // against an implementation bug upstream.
      for (Idx y = 1; y < g.order() && !grown; ++y) {
        if (rep.contains(y) || !g.is_p_element(y, p))
          continue;
        SubgroupSet cand = join(rep, y);
        if (is_p_power(cand.order(), p)) {
          rep = std::move(cand);
          grown = true;
        }
      }
      if (!grown)
        throw Error("sylow construction failed to grow a p-subgroup");
    }
  }
  assert(rep.order() == target);

  // Full conjugation orbit, deduplicated by member set.
  std::set<std::vector<Idx>> seen{rep.members()};
  std::deque<SubgroupSet> queue{rep};
  std::vector<SubgroupSet> orbit;
  while (!queue.empty()) {
    SubgroupSet current = std::move(queue.front());
    queue.pop_front();
    for (Idx gen : g.generator_indices()) {
      SubgroupSet conj = current.conjugated(gen);
      if (seen.insert(conj.members()).second)
        queue.push_back(std::move(conj));
    }
    orbit.push_back(std::move(current));
  }
  std::sort(orbit.begin(), orbit.end(),
            [](const SubgroupSet &a, const SubgroupSet &b) {
              return a.members() < b.members();
            });

  SylowSystem sys{p, std::move(rep), std::move(orbit), 0};
  const std::size_t n_p = sys.conjugates.size();
  if (g.order() % n_p != 0 || n_p % p != 1)
    throw Error("sylow system violates the Sylow counting theorems");
  sys.normalizer_order = g.order() / n_p;
  assert(normalizer(g, sys.representative).order() == sys.normalizer_order);

  sys.representative.generators();
  for (SubgroupSet &conj : sys.conjugates)
    conj.generators();
  return sys;
}

} // namespace

const SylowSystem &sylow_system(const Group &g, std::uint64_t p) {
  return g.cache().get_or_build<SylowSystem>(
      "sylow/" + std::to_string(p), [&g, p] { return build_sylow_system(g, p); });
}

std::size_t sylow_count_containing(const SylowSystem &sys,
                                   const SubgroupSet &h) {
  if (!is_p_power(h.order(), sys.prime))
    throw Error("lambda: H is not a p-group");
  std::size_t count = 0;
  for (const SubgroupSet &conj : sys.conjugates)
    if (conj.contains_all(h))
      ++count;
  return count;
}

std::size_t sylow_count_containing(const Group &g, const SylowSystem &sys,
                                   Idx x) {
  if (!g.is_p_element(x, sys.prime))
    throw Error("lambda: element is not a p-element");
  return sylow_count_containing(sys, subgroup_generated(g, std::array<Idx, 1>{x}));
}

std::vector<SubgroupSet> all_p_subgroups(const Group &g, std::uint64_t p) {
  if (!is_prime(p))
    throw Error("all_p_subgroups: not a prime");
  std::set<std::vector<Idx>> collected{SubgroupSet::trivial(g).members()};
  std::vector<SubgroupSet> result{SubgroupSet::trivial(g)};
  if (g.order() % p != 0)
    return result;

  const SylowSystem &sys = sylow_system(g, p);
  for (const SubgroupSet &sylow : sys.conjugates) {
    // All subgroups of this Sylow subgroup, walking upward: every subgroup
    // of a p-group sits normally under index p inside a larger one, so
    // extending each H by normalizing elements y with y^p in H finds the
    // next level completely.
    std::set<std::vector<Idx>> explored{SubgroupSet::trivial(g).members()};
    std::deque<SubgroupSet> queue{SubgroupSet::trivial(g)};
    while (!queue.empty()) {
      SubgroupSet h = std::move(queue.front());
      queue.pop_front();
      for (Idx y : sylow.members()) {
        if (h.contains(y))
          continue;
        bool normalizes = true;
        for (Idx hg : h.generators())
          if (!h.contains(g.conj(hg, y))) {
            normalizes = false;
            break;
          }
        if (!normalizes || !h.contains(g.power(y, p)))
          continue;
        // K = H<y> has order p|H|; assemble the coset union directly.
        std::vector<Idx> members(h.members());
        Idx yi = y;
        for (std::uint64_t i = 1; i < p; ++i) {
          for (Idx m : h.members())
            members.push_back(g.mul(m, yi));
          yi = g.mul(yi, y);
        }
        std::vector<Idx> gens(h.generators());
        gens.push_back(y);
        SubgroupSet k(g, std::move(members), std::move(gens));
        assert(k.order() == h.order() * p);
        if (explored.insert(k.members()).second) {
          if (collected.insert(k.members()).second)
            result.push_back(k);
          queue.push_back(std::move(k));
        }
      }
    }
  }

  std::sort(result.begin(), result.end(),
            [](const SubgroupSet &a, const SubgroupSet &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return a.members() < b.members();
            });
  return result;
}

} // namespace subnil
