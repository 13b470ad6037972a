#pragma once

#include <cstdint>
#include <vector>

#include "subnil/group.hpp"

namespace subnil {

// One Sylow p-subgroup together with its complete conjugation orbit.
struct SylowSystem {
  std::uint64_t prime;
  SubgroupSet representative;
  std::vector<SubgroupSet> conjugates; // all Sylow p-subgroups, sorted
  std::size_t normalizer_order;        // |N_G(P)| = |G| / n_p

  std::size_t n_p() const { return conjugates.size(); }
};

// Computed once per (group, p) and cached on the group. Throws Error when
// p does not divide the group order.
const SylowSystem &sylow_system(const Group &g, std::uint64_t p);

// Number of Sylow p-subgroups containing the p-subgroup H (lambda_G(H)).
// Throws Error when H is not a p-group.
std::size_t sylow_count_containing(const SylowSystem &sys,
                                   const SubgroupSet &h);

// lambda_G(x) = lambda_G(<x>); x must be a p-element.
std::size_t sylow_count_containing(const Group &g, const SylowSystem &sys,
                                   Idx x);

// Every p-subgroup of G (including the trivial one), enumerated by walking
// the subgroup lattices of the Sylow conjugates upward from {1}.
std::vector<SubgroupSet> all_p_subgroups(const Group &g, std::uint64_t p);

} // namespace subnil
