#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subnil/group.hpp"
#include "subnil/rational.hpp"

namespace subnil {

struct ProbabilityOptions {
  // Computations on groups larger than this abort with CapExceeded.
  std::size_t max_order = 5000;
  // Verification mode recomputes every per-element value along the
  // independent route (subnormalizer sets vs Sylow counting, second class
  // members vs representatives) and throws Error on any disagreement.
  bool verify = false;
};

// Nil_G(x): all y such that <x, y> is nilpotent. Sorted; not a subgroup in
// general.
std::vector<Idx> nil_set(const Group &g, Idx x,
                         const ProbabilityOptions &opts = {});

// S_G(x): all g such that <x> is subnormal in <x, g>.
std::vector<Idx> subnormalizer_set(const Group &g, Idx x,
                                   const ProbabilityOptions &opts = {});

// S_G(H) for a subgroup H.
std::vector<Idx> subnormalizer_set(const Group &g, const SubgroupSet &h,
                                   const ProbabilityOptions &opts = {});

// Probability that two uniform random elements generate a nilpotent
// subgroup, computed per conjugacy class.
Ratio dn(const Group &g, const ProbabilityOptions &opts = {});

// Mean of |S_G(x)|/|G| over x.
Ratio spr(const Group &g, const ProbabilityOptions &opts = {});

// |S_G(x)|/|G|. In verification mode, p-elements are checked against the
// Sylow-counting route lambda_G(x)/n_p(G).
Ratio spr_element(const Group &g, Idx x, const ProbabilityOptions &opts = {});

// Probability that two uniform random elements commute.
Ratio dc(const Group &g);

// Both sides of the subnormalizer counting identity
// |S_G(H)| = lambda_G(H) * |N_G(P)| for a p-subgroup H, each computed
// independently.
struct CasoloCheck {
  std::size_t lhs;    // |S_G(H)| by direct subnormality scanning
  std::size_t lambda; // Sylow p-subgroups containing H
  std::size_t sylow_normalizer_order;
  std::size_t rhs; // lambda * |N_G(P)|
  bool equal;
};
CasoloCheck casolo_check(const Group &g, std::uint64_t p,
                         const SubgroupSet &h);

// S^1_G(H) = {g : H subnormal in <H, H^g>} together with
// delta_G(H) = #{conjugates H^g with that property}.
struct S1Analysis {
  std::vector<Idx> set;
  std::size_t delta;
  std::size_t normalizer_order;
};
S1Analysis s1_analysis(const Group &g, const SubgroupSet &h);
std::vector<Idx> s1_set(const Group &g, const SubgroupSet &h);
std::size_t delta(const Group &g, const SubgroupSet &h);

// Per-class summary of the nilpotence and subnormalizer statistics.
struct NilReport {
  struct ClassRow {
    Idx representative;
    std::string representative_cycles;
    std::size_t class_size;
    std::uint64_t element_order;
    std::size_t nil_size;          // |Nil_G(x)|
    std::size_t subnormalizer_size; // |S_G(x)|
    Ratio spr_x;
  };

  std::string group_name;
  std::size_t order = 0;
  unsigned degree = 0;
  std::vector<ClassRow> classes;
  Ratio dn;
  Ratio spr;
  Ratio dc;
  bool nilpotent = false;
  std::size_t fitting_index = 1;
};

NilReport analyze(const Group &g, const ProbabilityOptions &opts = {});

// Catalog sweep over the threshold theorems and structural identities.
enum class SweepCheck {
  dn_bound,   // dn > 1/2 forces nilpotence
  spr_bound,  // spr > 2/3 forces nilpotence
  prop21,     // spr_G(x) > 1/(p^k+1) forces x^{p^{k-1}} in O_p(G)
  cor22,      // x outside F(G) forces spr_G(x) <= 1/3
  casolo,     // subnormalizer counting identity
  wielandt,   // S_G(x) = G iff <x> subnormal iff all p-parts in O_p(G)
  hypercenter, // Nil_G(x) = G iff x in the hypercenter
  gustafson,  // nonabelian dc <= 5/8
};

const char *sweep_check_name(SweepCheck c);
std::vector<SweepCheck> all_sweep_checks();

enum class SweepStatus { pass, tight, fail, skipped };
const char *sweep_status_name(SweepStatus s);

struct SweepRow {
  std::string group;
  std::size_t order;
  SweepCheck check;
  SweepStatus status;
  std::string detail; // boundary witnesses, violations, or skip reason
};

struct SweepConfig {
  std::vector<SweepCheck> checks = all_sweep_checks();
  ProbabilityOptions probability;
  std::size_t casolo_exhaustive_cap = 400; // all p-subgroups up to here
  std::size_t casolo_cyclic_cap = 2000;    // cyclic p-subgroups up to here
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool any_fail() const;
};

SweepReport threshold_sweep(std::span<const Group> catalog,
                            const SweepConfig &config = {});

} // namespace subnil
