#include "subnil/probability.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "subnil/error.hpp"
#include "subnil/numeric.hpp"
#include "subnil/structure.hpp"
#include "subnil/sylow.hpp"

namespace subnil {

namespace {

void check_cap(const Group &g, const ProbabilityOptions &opts,
               const char *what) {
  if (g.order() > opts.max_order)
    throw CapExceeded(std::string(what) + ": group order " +
                      std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(opts.max_order) +
                      " (raise max_order to override)");
}

// Scans g for {y : pred(<H, y>)}. The join <H, y> is constant on double
// cosets H y H, so the predicate is evaluated once per double coset and the
// verdict propagated to the whole coset.
template <class Pred>
std::vector<Idx> coset_scan(const Group &g, const SubgroupSet &h,
                            Pred &&pred) {
  const std::size_t n = g.order();
  std::vector<std::int8_t> state(n, -1);
  for (Idx y = 0; y < n; ++y) {
    if (state[y] != -1)
      continue;
    SubgroupSet k = join(h, y);
    const std::int8_t verdict = pred(k) ? 1 : 0;
    for (Idx a : h.members()) {
      Idx ay = g.mul(a, y);
      for (Idx b : h.members())
        state[g.mul(ay, b)] = verdict;
    }
    assert(state[y] == verdict);
  }
  std::vector<Idx> result;
  for (Idx y = 0; y < n; ++y)
    if (state[y] == 1)
      result.push_back(y);
  return result;
}

std::vector<Idx> nil_scan(const Group &g, const SubgroupSet &h) {
  return coset_scan(g, h, [&g](const SubgroupSet &k) {
    return is_nilpotent_members(g, k.members());
  });
}

std::vector<Idx> subnormal_scan(const Group &g, const SubgroupSet &h) {
  // Distinct double cosets can still generate the same join; remember
  // verdicts per join member set.
  std::map<std::vector<Idx>, bool> verdicts;
  return coset_scan(g, h, [&](const SubgroupSet &k) {
    auto it = verdicts.find(k.members());
    if (it == verdicts.end())
      it = verdicts.emplace(k.members(), is_subnormal(h, k)).first;
    return it->second;
  });
}

SubgroupSet cyclic_of(const Group &g, Idx x) {
  return subgroup_generated(g, std::array<Idx, 1>{x});
}

// |S_G(x)| for a p-element along the Sylow route lambda_G(x) * |N_G(P)|.
std::size_t subnormalizer_size_by_sylow(const Group &g, Idx x,
                                        std::uint64_t p) {
  const SylowSystem &sys = sylow_system(g, p);
  return sylow_count_containing(g, sys, x) * sys.normalizer_order;
}

// Per-class |Nil| and |S| sizes. |S| of a p-element class uses the Sylow
// counting route unless brute force is requested; verification mode runs
// both routes and compares, and recomputes a second class member to confirm
// conjugation invariance.
struct ClassStats {
  std::vector<std::size_t> nil_size;
  std::vector<std::size_t> sub_size;
};

ClassStats class_stats(const Group &g, const ProbabilityOptions &opts,
                       bool want_nil, bool want_sub) {
  const ConjugacyClasses &cc = conjugacy_classes(g);
  const std::int64_t num_classes = static_cast<std::int64_t>(cc.classes.size());

  if (want_sub)
    for (std::uint64_t p : prime_divisors(g.order()))
      sylow_system(g, p); // build outside the parallel region

  ClassStats stats;
  stats.nil_size.assign(cc.classes.size(), 0);
  stats.sub_size.assign(cc.classes.size(), 0);
  std::vector<std::string> errors(cc.classes.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ci = 0; ci < num_classes; ++ci) {
    try {
      const std::vector<Idx> &cls = cc.classes[ci];
      const Idx rep = cls[0];
      SubgroupSet cyc = cyclic_of(g, rep);

      if (want_nil) {
        std::size_t nil = nil_scan(g, cyc).size();
        if (opts.verify && cls.size() > 1) {
          std::size_t again = nil_scan(g, cyclic_of(g, cls[1])).size();
          if (again != nil)
            throw Error("|Nil_G(x)| is not constant on a conjugacy class");
        }
        stats.nil_size[ci] = nil;
      }

      if (want_sub) {
        const std::uint64_t order = g.element_order(rep);
        std::uint64_t p = 0;
        const bool is_primary = order > 1 && prime_power_base(order, p);
        std::size_t sub = 0;
        if (order == 1) {
          sub = g.order();
        } else if (is_primary && !opts.verify) {
          sub = subnormalizer_size_by_sylow(g, rep, p);
        } else {
          sub = subnormal_scan(g, cyc).size();
          if (is_primary && opts.verify) {
            std::size_t by_sylow = subnormalizer_size_by_sylow(g, rep, p);
            if (by_sylow != sub)
              throw Error("subnormalizer size disagrees with the Sylow "
                          "counting route");
          }
          if (opts.verify && cls.size() > 1) {
            std::size_t again =
                subnormal_scan(g, cyclic_of(g, cls[1])).size();
            if (again != sub)
              throw Error("|S_G(x)| is not constant on a conjugacy class");
          }
        }
        stats.sub_size[ci] = sub;
      }
    } catch (const std::exception &e) {
      errors[ci] = e.what();
    }
  }

  for (const std::string &e : errors)
    if (!e.empty())
      throw Error(e);
  return stats;
}

Ratio class_weighted_ratio(const Group &g, const ConjugacyClasses &cc,
                           const std::vector<std::size_t> &sizes) {
  std::uint64_t numerator = 0;
  for (std::size_t ci = 0; ci < cc.classes.size(); ++ci)
    numerator += cc.classes[ci].size() * sizes[ci];
  const std::uint64_t n = g.order();
  return Ratio(BigInt(numerator), BigInt(n) * n);
}

} // namespace

std::vector<Idx> nil_set(const Group &g, Idx x,
                         const ProbabilityOptions &opts) {
  check_cap(g, opts, "nil_set");
  return nil_scan(g, cyclic_of(g, x));
}

std::vector<Idx> subnormalizer_set(const Group &g, Idx x,
                                   const ProbabilityOptions &opts) {
  check_cap(g, opts, "subnormalizer_set");
  return subnormal_scan(g, cyclic_of(g, x));
}

std::vector<Idx> subnormalizer_set(const Group &g, const SubgroupSet &h,
                                   const ProbabilityOptions &opts) {
  check_cap(g, opts, "subnormalizer_set");
  return subnormal_scan(g, h);
}

Ratio dn(const Group &g, const ProbabilityOptions &opts) {
  check_cap(g, opts, "dn");
  ClassStats stats = class_stats(g, opts, true, false);
  return class_weighted_ratio(g, conjugacy_classes(g), stats.nil_size);
}

Ratio spr(const Group &g, const ProbabilityOptions &opts) {
  check_cap(g, opts, "spr");
  ClassStats stats = class_stats(g, opts, false, true);
  return class_weighted_ratio(g, conjugacy_classes(g), stats.sub_size);
}

Ratio spr_element(const Group &g, Idx x, const ProbabilityOptions &opts) {
  check_cap(g, opts, "spr_element");
  const std::uint64_t order = g.element_order(x);
  if (order == 1)
    return Ratio(1);
  std::uint64_t p = 0;
  const bool is_primary = prime_power_base(order, p);
  if (is_primary && !opts.verify)
    return Ratio::of_counts(subnormalizer_size_by_sylow(g, x, p), g.order());
  std::size_t brute = subnormal_scan(g, cyclic_of(g, x)).size();
  if (is_primary && opts.verify &&
      brute != subnormalizer_size_by_sylow(g, x, p))
    throw Error("subnormalizer size disagrees with the Sylow counting route");
  return Ratio::of_counts(brute, g.order());
}

Ratio dc(const Group &g) {
  return Ratio::of_counts(conjugacy_classes(g).classes.size(), g.order());
}

CasoloCheck casolo_check(const Group &g, std::uint64_t p,
                         const SubgroupSet &h) {
  if (!is_p_power(h.order(), p))
    throw Error("casolo_check: H is not a p-subgroup");
  const SylowSystem &sys = sylow_system(g, p);
  CasoloCheck result{};
  result.lhs = subnormal_scan(g, h).size();
  result.lambda = sylow_count_containing(sys, h);
  result.sylow_normalizer_order = sys.normalizer_order;
  result.rhs = result.lambda * result.sylow_normalizer_order;
  result.equal = result.lhs == result.rhs;
  return result;
}

S1Analysis s1_analysis(const Group &g, const SubgroupSet &h) {
  S1Analysis out;
  out.normalizer_order = normalizer(g, h).order();
  std::map<std::vector<Idx>, bool> verdicts;
  for (Idx gi = 0; gi < g.order(); ++gi) {
    SubgroupSet hg = h.conjugated(gi);
    auto it = verdicts.find(hg.members());
    if (it == verdicts.end()) {
      SubgroupSet k = join(h, hg);
      it = verdicts.emplace(hg.members(), is_subnormal(h, k)).first;
    }
    if (it->second)
      out.set.push_back(gi);
  }
  out.delta = 0;
  for (const auto &[members, ok] : verdicts)
    if (ok)
      ++out.delta;
  return out;
}

std::vector<Idx> s1_set(const Group &g, const SubgroupSet &h) {
  return s1_analysis(g, h).set;
}

std::size_t delta(const Group &g, const SubgroupSet &h) {
  return s1_analysis(g, h).delta;
}

NilReport analyze(const Group &g, const ProbabilityOptions &opts) {
  check_cap(g, opts, "analyze");
  const ConjugacyClasses &cc = conjugacy_classes(g);
  ClassStats stats = class_stats(g, opts, true, true);

  NilReport report;
  report.group_name = g.name();
  report.order = g.order();
  report.degree = g.degree();
  for (std::size_t ci = 0; ci < cc.classes.size(); ++ci) {
    const Idx rep = cc.classes[ci][0];
    NilReport::ClassRow row;
    row.representative = rep;
    row.representative_cycles = g.element(rep).cycle_string();
    row.class_size = cc.classes[ci].size();
    row.element_order = g.element_order(rep);
    row.nil_size = stats.nil_size[ci];
    row.subnormalizer_size = stats.sub_size[ci];
    row.spr_x = Ratio::of_counts(row.subnormalizer_size, g.order());
    report.classes.push_back(std::move(row));
  }
  report.dn = class_weighted_ratio(g, cc, stats.nil_size);
  report.spr = class_weighted_ratio(g, cc, stats.sub_size);
  report.dc = dc(g);
  report.nilpotent = is_nilpotent(g);
  report.fitting_index = g.order() / fitting(g).order();

  if (opts.verify) {
    // Monotonicity |Nil| <= |S| classwise, and the equivalence of dn = 1,
    // spr = 1 and nilpotence.
    for (const auto &row : report.classes)
      if (row.nil_size > row.subnormalizer_size)
        throw Error("Nil set exceeds subnormalizer on a class");
    const bool dn_one = report.dn == Ratio(1);
    const bool spr_one = report.spr == Ratio(1);
    if (dn_one != report.nilpotent || spr_one != report.nilpotent)
      throw Error("dn/spr = 1 disagrees with nilpotence");
  }
  return report;
}

const char *sweep_check_name(SweepCheck c) {
  switch (c) {
  case SweepCheck::dn_bound:
    return "dn-bound";
  case SweepCheck::spr_bound:
    return "spr-bound";
  case SweepCheck::prop21:
    return "prop21";
  case SweepCheck::cor22:
    return "cor22";
  case SweepCheck::casolo:
    return "casolo";
  case SweepCheck::wielandt:
    return "wielandt";
  case SweepCheck::hypercenter:
    return "hypercenter";
  case SweepCheck::gustafson:
    return "gustafson";
  }
  return "?";
}

std::vector<SweepCheck> all_sweep_checks() {
  return {SweepCheck::dn_bound,  SweepCheck::spr_bound,
          SweepCheck::prop21,    SweepCheck::cor22,
          SweepCheck::casolo,    SweepCheck::wielandt,
          SweepCheck::hypercenter, SweepCheck::gustafson};
}

const char *sweep_status_name(SweepStatus s) {
  switch (s) {
  case SweepStatus::pass:
    return "pass";
  case SweepStatus::tight:
    return "tight";
  case SweepStatus::fail:
    return "fail";
  case SweepStatus::skipped:
    return "skipped";
  }
  return "?";
}

bool SweepReport::any_fail() const {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) {
    return r.status == SweepStatus::fail;
  });
}

namespace {

struct GroupAnalysis {
  bool ok = false;
  std::string error;
  NilReport report;
};

SweepRow make_row(const Group &g, SweepCheck check, SweepStatus status,
                  std::string detail) {
  return SweepRow{g.name(), g.order(), check, status, std::move(detail)};
}

SweepRow run_dn_bound(const Group &g, const GroupAnalysis &a) {
  const Ratio half = Ratio::of_counts(1, 2);
  if (a.report.dn > half && !a.report.nilpotent)
    return make_row(g, SweepCheck::dn_bound, SweepStatus::fail,
                    "dn=" + a.report.dn.str() + " > 1/2 but not nilpotent");
  if (a.report.dn == half && !a.report.nilpotent)
    return make_row(g, SweepCheck::dn_bound, SweepStatus::tight,
                    "dn=1/2 exactly");
  return make_row(g, SweepCheck::dn_bound, SweepStatus::pass,
                  "dn=" + a.report.dn.str());
}

SweepRow run_spr_bound(const Group &g, const GroupAnalysis &a) {
  const Ratio bound = Ratio::of_counts(2, 3);
  if (a.report.spr > bound && !a.report.nilpotent)
    return make_row(g, SweepCheck::spr_bound, SweepStatus::fail,
                    "spr=" + a.report.spr.str() + " > 2/3 but not nilpotent");
  if (a.report.spr == bound && !a.report.nilpotent)
    return make_row(g, SweepCheck::spr_bound, SweepStatus::tight,
                    "spr=2/3 exactly");
  return make_row(g, SweepCheck::spr_bound, SweepStatus::pass,
                  "spr=" + a.report.spr.str());
}

SweepRow run_prop21(const Group &g, const GroupAnalysis &a) {
  std::vector<std::string> violations;
  std::vector<std::string> boundary;
  for (const auto &row : a.report.classes) {
    if (row.element_order <= 1)
      continue;
    std::uint64_t p = 0;
    if (!prime_power_base(row.element_order, p))
      continue;
    const unsigned r = p_valuation(row.element_order, p);
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= r; ++k) {
      pk *= p;
      const Ratio bound = Ratio(BigInt(1), BigInt(pk) + 1);
      if (row.spr_x > bound) {
        std::uint64_t pk1 = pk / p;
        Idx power = g.power(row.representative, pk1);
        if (!o_p(g, p).contains(power))
          violations.push_back(row.representative_cycles + " p=" +
                               std::to_string(p) +
                               " k=" + std::to_string(k));
      } else if (row.spr_x == bound) {
        boundary.push_back(row.representative_cycles + " spr=1/(" +
                           std::to_string(p) + "^" + std::to_string(k) +
                           "+1)");
      }
    }
  }
  if (!violations.empty()) {
    std::string detail = "violations:";
    for (const auto &v : violations)
      detail += " " + v;
    return make_row(g, SweepCheck::prop21, SweepStatus::fail, detail);
  }
  if (!boundary.empty()) {
    std::string detail = "boundary attained:";
    for (const auto &b : boundary)
      detail += " " + b;
    return make_row(g, SweepCheck::prop21, SweepStatus::tight, detail);
  }
  return make_row(g, SweepCheck::prop21, SweepStatus::pass, "");
}

SweepRow run_cor22(const Group &g, const GroupAnalysis &a) {
  const SubgroupSet &f = fitting(g);
  const Ratio third = Ratio::of_counts(1, 3);
  std::vector<std::string> violations;
  bool boundary = false;
  for (const auto &row : a.report.classes) {
    if (f.contains(row.representative))
      continue;
    if (row.spr_x > third)
      violations.push_back(row.representative_cycles +
                           " spr=" + row.spr_x.str());
    else if (row.spr_x == third)
      boundary = true;
  }
  if (!violations.empty()) {
    std::string detail = "violations:";
    for (const auto &v : violations)
      detail += " " + v;
    return make_row(g, SweepCheck::cor22, SweepStatus::fail, detail);
  }
  if (boundary)
    return make_row(g, SweepCheck::cor22, SweepStatus::tight,
                    "spr=1/3 attained outside F(G)");
  return make_row(g, SweepCheck::cor22, SweepStatus::pass, "");
}

SweepRow run_casolo(const Group &g, const SweepConfig &config) {
  std::vector<SubgroupSet> subgroups;
  std::string mode;
  if (g.order() <= config.casolo_exhaustive_cap) {
    mode = "exhaustive";
    for (std::uint64_t p : prime_divisors(g.order()))
      for (SubgroupSet &h : all_p_subgroups(g, p))
        subgroups.push_back(std::move(h));
  } else if (g.order() <= config.casolo_cyclic_cap) {
    mode = "cyclic";
    std::set<std::vector<Idx>> seen;
    for (Idx x = 0; x < g.order(); ++x) {
      const std::uint64_t order = g.element_order(x);
      std::uint64_t p = 0;
      if (order > 1 && prime_power_base(order, p)) {
        SubgroupSet h = subgroup_generated(g, std::array<Idx, 1>{x});
        if (seen.insert(h.members()).second)
          subgroups.push_back(std::move(h));
      }
    }
  } else {
    return make_row(g, SweepCheck::casolo, SweepStatus::skipped,
                    "order exceeds casolo caps");
  }

  const std::int64_t count = static_cast<std::int64_t>(subgroups.size());
  std::vector<std::string> failures(subgroups.size());
  std::vector<std::string> errors(subgroups.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const SubgroupSet &h = subgroups[i];
      std::uint64_t p = 2;
      if (h.order() > 1)
        prime_power_base(h.order(), p);
      if (h.order() == 1) {
        // Trivial subgroup: identity holds for every p dividing |G|.
        for (std::uint64_t q : prime_divisors(g.order())) {
          CasoloCheck c = casolo_check(g, q, h);
          if (!c.equal)
            failures[i] = "H=1 p=" + std::to_string(q) +
                          " lhs=" + std::to_string(c.lhs) +
                          " rhs=" + std::to_string(c.rhs);
        }
      } else {
        CasoloCheck c = casolo_check(g, p, h);
        if (!c.equal)
          failures[i] = "|H|=" + std::to_string(h.order()) +
                        " p=" + std::to_string(p) +
                        " lhs=" + std::to_string(c.lhs) +
                        " rhs=" + std::to_string(c.rhs);
      }
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  }
  for (const std::string &e : errors)
    if (!e.empty())
      return make_row(g, SweepCheck::casolo, SweepStatus::skipped, e);
  std::string detail;
  for (const std::string &f : failures)
    if (!f.empty())
      detail += (detail.empty() ? "" : "; ") + f;
  if (!detail.empty())
    return make_row(g, SweepCheck::casolo, SweepStatus::fail, detail);
  return make_row(g, SweepCheck::casolo, SweepStatus::pass,
                  mode + ", " + std::to_string(subgroups.size()) +
                      " subgroups");
}

SweepRow run_wielandt(const Group &g, const GroupAnalysis &a) {
  std::vector<std::string> violations;
  for (const auto &row : a.report.classes) {
    const bool whole = row.subnormalizer_size == g.order();
    SubgroupSet cyc = subgroup_generated(
        g, std::array<Idx, 1>{row.representative});
    const bool subnormal = is_subnormal(cyc, SubgroupSet::whole(g));
    bool parts_in_cores = true;
    for (std::uint64_t p : prime_divisors(g.element_order(row.representative)))
      if (!o_p(g, p).contains(p_part(g, row.representative, p))) {
        parts_in_cores = false;
        break;
      }
    if (whole != subnormal || subnormal != parts_in_cores)
      violations.push_back(row.representative_cycles);
  }
  if (!violations.empty()) {
    std::string detail = "violations:";
    for (const auto &v : violations)
      detail += " " + v;
    return make_row(g, SweepCheck::wielandt, SweepStatus::fail, detail);
  }
  return make_row(g, SweepCheck::wielandt, SweepStatus::pass, "");
}

SweepRow run_hypercenter(const Group &g, const GroupAnalysis &a) {
  const SubgroupSet &z = hypercenter(g);
  std::vector<std::string> violations;
  for (const auto &row : a.report.classes) {
    const bool nil_whole = row.nil_size == g.order();
    if (nil_whole != z.contains(row.representative))
      violations.push_back(row.representative_cycles);
  }
  if (!violations.empty()) {
    std::string detail = "violations:";
    for (const auto &v : violations)
      detail += " " + v;
    return make_row(g, SweepCheck::hypercenter, SweepStatus::fail, detail);
  }
  return make_row(g, SweepCheck::hypercenter, SweepStatus::pass, "");
}

SweepRow run_gustafson(const Group &g, const GroupAnalysis &a) {
  const bool abelian = a.report.dc == Ratio(1);
  if (abelian)
    return make_row(g, SweepCheck::gustafson, SweepStatus::pass, "abelian");
  const Ratio bound = Ratio::of_counts(5, 8);
  if (a.report.dc > bound)
    return make_row(g, SweepCheck::gustafson, SweepStatus::fail,
                    "dc=" + a.report.dc.str() + " > 5/8");
  if (a.report.dc == bound)
    return make_row(g, SweepCheck::gustafson, SweepStatus::tight,
                    "dc=5/8 exactly");
  return make_row(g, SweepCheck::gustafson, SweepStatus::pass,
                  "dc=" + a.report.dc.str());
}

} // namespace

SweepReport threshold_sweep(std::span<const Group> catalog,
                            const SweepConfig &config) {
  SweepReport report;
  for (const Group &g : catalog) {
    GroupAnalysis analysis;
    const bool needs_analysis =
        std::any_of(config.checks.begin(), config.checks.end(),
                    [](SweepCheck c) { return c != SweepCheck::casolo; });
    if (needs_analysis) {
      try {
        analysis.report = analyze(g, config.probability);
        analysis.ok = true;
      } catch (const std::exception &e) {
        analysis.error = e.what();
      }
    }

    for (SweepCheck check : config.checks) {
      if (check == SweepCheck::casolo) {
        report.rows.push_back(run_casolo(g, config));
        continue;
      }
      if (!analysis.ok) {
        report.rows.push_back(
            make_row(g, check, SweepStatus::skipped, analysis.error));
        continue;
      }
      try {
        switch (check) {
        case SweepCheck::dn_bound:
          report.rows.push_back(run_dn_bound(g, analysis));
          break;
        case SweepCheck::spr_bound:
          report.rows.push_back(run_spr_bound(g, analysis));
          break;
        case SweepCheck::prop21:
          report.rows.push_back(run_prop21(g, analysis));
          break;
        case SweepCheck::cor22:
          report.rows.push_back(run_cor22(g, analysis));
          break;
        case SweepCheck::wielandt:
          report.rows.push_back(run_wielandt(g, analysis));
          break;
        case SweepCheck::hypercenter:
          report.rows.push_back(run_hypercenter(g, analysis));
          break;
        case SweepCheck::gustafson:
          report.rows.push_back(run_gustafson(g, analysis));
          break;
        case SweepCheck::casolo:
          break;
        }
      } catch (const std::exception &e) {
        report.rows.push_back(
            make_row(g, check, SweepStatus::skipped, e.what()));
      }
    }
  }
  return report;
}

} // namespace subnil
