#include "subnil/reference.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "subnil/error.hpp"
#include "subnil/structure.hpp"
#include "subnil/sylow.hpp"

namespace subnil::reference {

namespace {

// Closure over raw permutations, deliberately ignoring the group's Cayley
// table and index machinery.
std::unordered_set<Perm, PermHash> perm_closure(std::vector<Perm> gens,
                                                unsigned degree) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  for (const Perm &gen : gens)
    if (seen.insert(gen).second)
      queue.push_back(gen);
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    for (const Perm &gen : gens) {
      Perm next = current * gen;
      if (seen.insert(next).second)
        queue.push_back(next);
    }
  }
  return seen;
}

bool nilpotent_closure_of_pair(const Group &g, Idx x, Idx y) {
  auto elems = perm_closure({g.element(x), g.element(y)}, g.degree());
  std::vector<Idx> members;
  members.reserve(elems.size());
  for (const Perm &p : elems)
    members.push_back(g.index_of(p));
  return is_nilpotent_lower_central(g, members);
}

} // namespace

std::size_t generated_order(const Group &g, Idx x, Idx y) {
  return perm_closure({g.element(x), g.element(y)}, g.degree()).size();
}

bool is_nilpotent_lower_central(const Group &g,
                                const std::vector<Idx> &members) {
  std::vector<Idx> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  SubgroupSet whole(g, sorted);

  // gamma_1 = H, gamma_{i+1} = [gamma_i, H], until trivial or stable.
  SubgroupSet gamma = whole;
  for (;;) {
    if (gamma.order() == 1)
      return true;
    std::vector<Idx> commutators;
    for (Idx a : gamma.members())
      for (Idx b : whole.members())
        commutators.push_back(g.commutator(a, b));
    SubgroupSet next = subgroup_generated(g, commutators);
    if (next.order() == gamma.order())
      return false;
    gamma = std::move(next);
  }
}

bool is_nilpotent_lower_central(const Group &g) {
  std::vector<Idx> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<Idx>(i);
  return is_nilpotent_lower_central(g, all);
}

bool is_nilpotent_sylow(const Group &g) {
  for (std::uint64_t p : prime_divisors(g.order()))
    if (sylow_system(g, p).n_p() != 1)
      return false;
  return true;
}

Ratio dn_all_pairs(const Group &g) {
  const std::size_t n = g.order();
  std::uint64_t hits = 0;
  // Cache nilpotence per generated subgroup; the subgroup itself is still
  // recomputed for every pair.
  std::map<std::vector<Idx>, bool> verdicts;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      auto elems = perm_closure({g.element(x), g.element(y)}, g.degree());
      std::vector<Idx> members;
      members.reserve(elems.size());
      for (const Perm &p : elems)
        members.push_back(g.index_of(p));
      std::sort(members.begin(), members.end());
      auto it = verdicts.find(members);
      if (it == verdicts.end())
        it = verdicts
                 .emplace(members, is_nilpotent_lower_central(g, members))
                 .first;
      if (it->second)
        ++hits;
    }
  return Ratio(BigInt(hits), BigInt(n) * n);
}

Ratio spr_all_elements(const Group &g) {
  const std::size_t n = g.order();
  std::uint64_t hits = 0;
  for (Idx x = 0; x < n; ++x)
    hits += subnormalizer_set_naive(g, x).size();
  return Ratio(BigInt(hits), BigInt(n) * n);
}

std::vector<Idx> nil_set_naive(const Group &g, Idx x) {
  std::vector<Idx> result;
  for (Idx y = 0; y < g.order(); ++y)
    if (nilpotent_closure_of_pair(g, x, y))
      result.push_back(y);
  return result;
}

std::vector<Idx> subnormalizer_set_naive(const Group &g, Idx x) {
  SubgroupSet cyc = subgroup_generated(g, std::array<Idx, 1>{x});
  std::vector<Idx> result;
  for (Idx y = 0; y < g.order(); ++y) {
    SubgroupSet k = join(cyc, y);
    if (is_subnormal(cyc, k))
      result.push_back(y);
  }
  return result;
}

std::vector<SubgroupSet> all_subgroups(const Group &g,
                                       std::size_t max_order) {
  if (max_order == 0)
    max_order = g.order();
  std::set<std::vector<Idx>> seen;
  std::deque<SubgroupSet> queue;
  std::vector<SubgroupSet> result;

  SubgroupSet triv = SubgroupSet::trivial(g);
  seen.insert(triv.members());
  result.push_back(triv);
  queue.push_back(std::move(triv));

  while (!queue.empty()) {
    SubgroupSet h = std::move(queue.front());
    queue.pop_front();
    for (Idx x = 1; x < g.order(); ++x) {
      if (h.contains(x))
        continue;
      SubgroupSet k = join(h, x);
      if (k.order() > max_order)
        continue;
      if (seen.insert(k.members()).second) {
        result.push_back(k);
        queue.push_back(std::move(k));
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

std::vector<SubgroupSet> subgroups_of_order(const Group &g, std::size_t n) {
  std::vector<SubgroupSet> result;
  for (SubgroupSet &h : all_subgroups(g, n))
    if (h.order() == n)
      result.push_back(std::move(h));
  return result;
}

bool is_subnormal_chain_search(const SubgroupSet &h, const SubgroupSet &k) {
  if (!k.contains_all(h))
    throw Error("chain search: H must be contained in K");
  if (h.order() == k.order())
    return true;

  // Subgroup lattice of K, restricted to subgroups containing H; edges are
  // normal inclusions L <| M. H is subnormal in K iff K is reachable.
  const Group &g = h.parent();
  Group inner = Group::closure(
      g.degree(),
      [&] {
        std::vector<Perm> gens;
        for (Idx m : k.generators())
          gens.push_back(g.element(m));
        return gens;
      }(),
      Group::default_element_cap);

  auto to_inner = [&](const SubgroupSet &s) {
    std::vector<Idx> members;
    for (Idx m : s.members())
      members.push_back(inner.index_of(g.element(m)));
    return SubgroupSet(inner, std::move(members));
  };
  SubgroupSet h_in = to_inner(h);

  std::vector<SubgroupSet> lattice = all_subgroups(inner);
  std::vector<std::size_t> candidates;
  std::size_t start = lattice.size(), goal = lattice.size();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!lattice[i].contains_all(h_in))
      continue;
    candidates.push_back(i);
    if (lattice[i].order() == h_in.order())
      start = i;
    if (lattice[i].order() == inner.order())
      goal = i;
  }

  auto normal_in = [&](const SubgroupSet &a, const SubgroupSet &b) {
    if (!b.contains_all(a) || a.order() == b.order())
      return false;
    for (Idx m : b.members())
      for (Idx gen : a.generators())
        if (!a.contains(inner.conj(gen, m)))
          return false;
    return true;
  };

  std::deque<std::size_t> queue{start};
  std::set<std::size_t> visited{start};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == goal)
      return true;
    for (std::size_t next : candidates) {
      if (visited.count(next))
        continue;
      if (normal_in(lattice[cur], lattice[next])) {
        visited.insert(next);
        queue.push_back(next);
      }
    }
  }
  return false;
}

} // namespace subnil::reference
