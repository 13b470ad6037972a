#pragma once

#include <cstdint>
#include <vector>

#include "subnil/group.hpp"
#include "subnil/rational.hpp"

// Serial reference implementations. Everything here recomputes a quantity
// along a route independent of the optimized kernels: joins are closed over
// raw permutations instead of the Cayley table, nilpotence is decided by the
// lower central series, subnormality by searching the full subgroup lattice
// for a normal chain. These are the oracles for the test suites and the
// baselines for the benchmark target; none of them use OpenMP.
namespace subnil::reference {

// Closure of {x, y} over raw permutations; returns its size only.
std::size_t generated_order(const Group &g, Idx x, Idx y);

// Lower central series reaching the trivial subgroup.
bool is_nilpotent_lower_central(const Group &g,
                                const std::vector<Idx> &members);
bool is_nilpotent_lower_central(const Group &g);

// Every Sylow subgroup normal (n_p = 1 for all p).
bool is_nilpotent_sylow(const Group &g);

// dn by the naive double loop over all |G|^2 pairs.
Ratio dn_all_pairs(const Group &g);

// spr by the naive double loop: for every x, every candidate g is tested
// individually with no coset or conjugacy reductions.
Ratio spr_all_elements(const Group &g);

// Nil_G(x) and S_G(x) element by element, no double-coset marking.
std::vector<Idx> nil_set_naive(const Group &g, Idx x);
std::vector<Idx> subnormalizer_set_naive(const Group &g, Idx x);

// All subgroups of g with order <= max_order (0 means no bound), by closing
// every extension of every known subgroup. Exponential fan-out; intended
// for groups of order <= a few hundred.
std::vector<SubgroupSet> all_subgroups(const Group &g,
                                       std::size_t max_order = 0);
std::vector<SubgroupSet> subgroups_of_order(const Group &g, std::size_t n);

// Subnormality by explicit chain search: breadth-first over the subgroup
// lattice of K along normal inclusions. Requires |K| small enough for
// all_subgroups.
bool is_subnormal_chain_search(const SubgroupSet &h, const SubgroupSet &k);

} // namespace subnil::reference
