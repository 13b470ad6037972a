#pragma once

#include <span>
#include <vector>

#include "subnil/group.hpp"

namespace subnil {

struct ConjugacyClasses {
  // Classes ordered by least member index; members sorted ascending.
  std::vector<std::vector<Idx>> classes;
  std::vector<std::uint32_t> class_of; // element index -> class number
};

const ConjugacyClasses &conjugacy_classes(const Group &g);

// Smallest subgroup containing the given elements (and the identity).
SubgroupSet subgroup_generated(const Group &g, std::span<const Idx> seeds);

// <H, extra> and <A, B>.
SubgroupSet join(const SubgroupSet &h, Idx extra);
SubgroupSet join(const SubgroupSet &a, const SubgroupSet &b);

// The p-part x_p of x: the power of x of p-power order with x = x_p * x_p'.
// Returns the identity when p does not divide the order of x.
Idx p_part(const Group &g, Idx x, std::uint64_t p);

SubgroupSet centralizer(const Group &g, Idx x);
const SubgroupSet &center(const Group &g); // cached
SubgroupSet normalizer(const Group &g, const SubgroupSet &h);

// Normal closure <H^K> of H under conjugation by K; requires H <= K.
SubgroupSet normal_closure(const SubgroupSet &k, const SubgroupSet &h);

// Nilpotence test: for every prime p dividing the order, the number of
// p-elements must equal the p-part of the order (equivalent to all Sylow
// subgroups being normal). The definition-true lower-central-series
// implementation lives in reference.hpp and cross-checks this one.
bool is_nilpotent(const Group &g);
bool is_nilpotent(const SubgroupSet &h);
bool is_nilpotent_members(const Group &g, std::span<const Idx> members);

// True iff H is subnormal in K, by the iterated normal closure chain
// K_0 = K, K_{i+1} = <H^{K_i}>, which stabilizes at H iff H is subnormal.
// Throws Error unless H <= K.
bool is_subnormal(const SubgroupSet &h, const SubgroupSet &k);

// Largest normal p-subgroup: the intersection of all Sylow p-subgroups.
const SubgroupSet &o_p(const Group &g, std::uint64_t p); // cached

// Fitting subgroup: generated by the O_p(G) over all p dividing |G|.
const SubgroupSet &fitting(const Group &g); // cached

// Hypercenter: limit of the ascending central series, computed through the
// commutator-membership characterization Z_{i+1} = {x : [x,g] in Z_i}.
const SubgroupSet &hypercenter(const Group &g); // cached

// Greedy small generating set (at most log2 |H| elements).
std::vector<Idx> small_generating_set(const SubgroupSet &h);

} // namespace subnil
