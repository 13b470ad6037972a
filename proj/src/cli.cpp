#include "subnil/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subnil/catalog.hpp"
#include "subnil/error.hpp"
#include "subnil/families.hpp"
#include "subnil/groupfile.hpp"
#include "subnil/numeric.hpp"
#include "subnil/probability.hpp"
#include "subnil/report.hpp"
#include "subnil/structure.hpp"
#include "subnil/sylow.hpp"

namespace subnil::cli {

namespace {

using json = nlohmann::ordered_json;

struct GroupSource {
  std::string builtin;
  std::string path;

  void add_options(CLI::App *cmd) {
    auto *b = cmd->add_option("--builtin", builtin,
                              "built-in group token (s4, c12, d6, psl2_5, "
                              "frob_7_1_3, galois_2)");
    auto *g = cmd->add_option("--group", path, "path to a group file");
    b->excludes(g);
  }

  Group build(std::size_t element_cap) const {
    if (!builtin.empty() && !path.empty())
      throw Error("choose either --builtin or --group");
    if (!builtin.empty())
      return FamilySpec::parse(builtin).build();
    if (!path.empty())
      return GroupFile::load(path).build(element_cap);
    throw Error("a group is required (--builtin or --group)");
  }
};

void write_output(const std::string &text, const std::string &out_path,
                  std::ostream &out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file)
    throw Error("cannot write " + out_path);
  file << text;
}

Idx element_index(const Group &g, const std::string &cycles) {
  return g.index_of(Perm::parse_cycles(g.degree(), cycles));
}

std::string ratio_line(const Ratio &value, bool decimal) {
  std::string line = value.str();
  if (decimal) {
    std::ostringstream os;
    os << " " << value.to_double();
    line += os.str();
  }
  return line;
}

int run_compute(const GroupSource &source, const std::string &which,
                const std::string &element, const std::string &format,
                const std::string &out_path, std::size_t max_order,
                bool verify, bool decimal, std::ostream &out) {
  ProbabilityOptions opts{max_order, verify};
  Group g = source.build(Group::default_element_cap);

  if (which == "dn" || which == "spr" || which == "dc") {
    Ratio value = which == "dn"   ? dn(g, opts)
                  : which == "spr" ? spr(g, opts)
                                   : dc(g);
    if (format == "json") {
      json doc;
      doc["group"] = g.name();
      doc["order"] = g.order();
      doc["which"] = which;
      doc["value"] = value.str();
      if (decimal)
        doc["decimal"] = value.to_double();
      write_output(doc.dump(2) + "\n", out_path, out);
    } else if (format == "csv") {
      std::ostringstream os;
      os << "group,order,which,value\n"
         << g.name() << "," << g.order() << "," << which << ","
         << value.str() << "\n";
      write_output(os.str(), out_path, out);
    } else {
      write_output(ratio_line(value, decimal) + "\n", out_path, out);
    }
    return 0;
  }

  if (which == "nilset" || which == "subnorm") {
    if (element.empty())
      throw Error("compute " + which + " requires --element");
    Idx x = element_index(g, element);
    std::vector<Idx> set = which == "nilset" ? nil_set(g, x, opts)
                                             : subnormalizer_set(g, x, opts);
    Ratio ratio = Ratio::of_counts(set.size(), g.order());
    if (format == "json") {
      json doc;
      doc["group"] = g.name();
      doc["order"] = g.order();
      doc["which"] = which;
      doc["element"] = g.element(x).cycle_string();
      doc["size"] = set.size();
      doc["ratio"] = ratio.str();
      json members = json::array();
      for (Idx m : set)
        members.push_back(g.element(m).cycle_string());
      doc["members"] = std::move(members);
      write_output(doc.dump(2) + "\n", out_path, out);
    } else {
      std::ostringstream os;
      os << set.size() << " of " << g.order() << " (" << ratio.str() << ")\n";
      for (Idx m : set)
        os << g.element(m).cycle_string() << "\n";
      write_output(os.str(), out_path, out);
    }
    return 0;
  }

  if (which == "report") {
    NilReport report = analyze(g, opts);
    if (format == "csv") {
      write_output(to_csv(report, decimal), out_path, out);
    } else if (format == "json") {
      write_output(to_json(report, decimal), out_path, out);
    } else {
      std::ostringstream os;
      os << report.group_name << ": order " << report.order << ", dn "
         << report.dn.str() << ", spr " << report.spr.str() << ", dc "
         << report.dc.str() << ", "
         << (report.nilpotent ? "nilpotent" : "not nilpotent")
         << ", [G:F(G)]=" << report.fitting_index << "\n";
      os << "class rep | order | size | |Nil| | |S| | spr\n";
      for (const auto &row : report.classes)
        os << row.representative_cycles << " | " << row.element_order
           << " | " << row.class_size << " | " << row.nil_size << " | "
           << row.subnormalizer_size << " | " << row.spr_x.str() << "\n";
      write_output(os.str(), out_path, out);
    }
    return 0;
  }

  throw Error("unknown computation '" + which +
              "' (expected dn, spr, dc, nilset, subnorm or report)");
}

int run_family(const std::string &kind, const std::vector<unsigned> &params,
               const std::string &out_path, bool allow_large,
               std::ostream &out) {
  std::ostringstream token;
  token << kind;
  for (unsigned p : params)
    token << "_" << p;
  FamilySpec spec = FamilySpec::parse(token.str());
  Group g = spec.build(allow_large);

  GroupFile gf;
  gf.degree = g.degree();
  gf.name = g.name();
  for (Idx gen : g.generator_indices())
    gf.generators.push_back(g.element(gen));

  if (out_path.empty()) {
    out << gf.serialize();
  } else {
    gf.save(out_path);
    out << g.name() << ": degree " << g.degree() << ", order " << g.order()
        << " -> " << out_path << "\n";
  }
  return 0;
}

std::vector<SweepCheck> parse_checks(const std::string &list) {
  if (list.empty())
    return all_sweep_checks();
  std::vector<SweepCheck> checks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (SweepCheck c : all_sweep_checks())
      if (item == sweep_check_name(c)) {
        checks.push_back(c);
        found = true;
        break;
      }
    if (!found)
      throw Error("unknown check '" + item + "'");
  }
  if (checks.empty())
    throw Error("at least one check must be selected");
  return checks;
}

int run_sweep(const std::vector<std::string> &builtins,
              const std::vector<std::string> &paths,
              const std::string &checks, const std::string &format,
              const std::string &out_path, std::size_t max_order,
              bool verify, std::ostream &out, std::ostream &err) {
  SweepConfig config;
  config.checks = parse_checks(checks);
  config.probability.max_order = max_order;
  config.probability.verify = verify;

  std::vector<Group> catalog;
  if (builtins.empty() && paths.empty()) {
    catalog = build_default_catalog();
  } else {
    for (const std::string &token : builtins)
      catalog.push_back(FamilySpec::parse(token).build());
    for (const std::string &path : paths)
      catalog.push_back(GroupFile::load(path).build());
  }

  SweepReport report = threshold_sweep(catalog, config);
  write_output(format == "json" ? to_json(report) : to_csv(report), out_path,
               out);

  std::size_t fails = 0, tights = 0, skips = 0;
  for (const SweepRow &row : report.rows) {
    fails += row.status == SweepStatus::fail;
    tights += row.status == SweepStatus::tight;
    skips += row.status == SweepStatus::skipped;
  }
  err << report.rows.size() << " rows: " << fails << " fail, " << tights
      << " tight, " << skips << " skipped\n";
  return report.any_fail() ? 1 : 0;
}

int run_casolo(const GroupSource &source, unsigned prime,
               const std::string &element, const std::string &format,
               const std::string &out_path, std::size_t max_order,
               std::ostream &out) {
  Group g = source.build(Group::default_element_cap);

  std::vector<std::uint64_t> primes;
  if (prime) {
    if (g.order() % prime != 0)
      throw Error("prime does not divide group order");
    primes.push_back(prime);
  } else {
    primes = prime_divisors(g.order());
  }

  struct Row {
    std::uint64_t p;
    std::size_t h_order;
    std::string h_gens;
    CasoloCheck check;
  };
  std::vector<Row> rows;

  for (std::uint64_t p : primes) {
    std::vector<SubgroupSet> subgroups;
    if (!element.empty()) {
      Idx x = element_index(g, element);
      if (!g.is_p_element(x, p))
        continue;
      subgroups.push_back(subgroup_generated(g, std::vector<Idx>{x}));
    } else if (g.order() <= max_order) {
      subgroups = all_p_subgroups(g, p);
    } else {
      // Too large for exhaustive enumeration: cyclic p-subgroups only.
      std::set<std::vector<Idx>> seen;
      for (Idx x = 0; x < g.order(); ++x)
        if (g.element_order(x) > 1 && g.is_p_element(x, p)) {
          SubgroupSet h = subgroup_generated(g, std::vector<Idx>{x});
          if (seen.insert(h.members()).second)
            subgroups.push_back(std::move(h));
        }
    }
    for (const SubgroupSet &h : subgroups) {
      std::string gens;
      for (Idx hg : h.generators())
        gens += (gens.empty() ? "" : " ") + g.element(hg).cycle_string();
      if (gens.empty())
        gens = "()";
      rows.push_back(Row{p, h.order(), gens, casolo_check(g, p, h)});
    }
  }

  bool all_equal = true;
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const Row &row : rows) {
      json r;
      r["p"] = row.p;
      r["subgroup_order"] = row.h_order;
      r["subgroup"] = row.h_gens;
      r["lhs"] = row.check.lhs;
      r["lambda"] = row.check.lambda;
      r["sylow_normalizer"] = row.check.sylow_normalizer_order;
      r["rhs"] = row.check.rhs;
      r["equal"] = row.check.equal;
      arr.push_back(std::move(r));
      all_equal = all_equal && row.check.equal;
    }
    json doc;
    doc["group"] = g.name();
    doc["rows"] = std::move(arr);
    os << doc.dump(2) << "\n";
  } else {
    os << "p,subgroup_order,subgroup,lhs,lambda,sylow_normalizer,rhs,equal\n";
    for (const Row &row : rows) {
      os << row.p << "," << row.h_order << ",\"" << row.h_gens << "\","
         << row.check.lhs << "," << row.check.lambda << ","
         << row.check.sylow_normalizer_order << "," << row.check.rhs << ","
         << (row.check.equal ? "true" : "false") << "\n";
      all_equal = all_equal && row.check.equal;
    }
  }
  write_output(os.str(), out_path, out);
  return all_equal ? 0 : 1;
}

int run_delta(const GroupSource &source, const std::string &element,
              const std::string &format, const std::string &out_path,
              std::ostream &out) {
  Group g = source.build(Group::default_element_cap);
  if (element.empty())
    throw Error("delta requires --element");
  Idx x = element_index(g, element);
  SubgroupSet h = subgroup_generated(g, std::vector<Idx>{x});
  S1Analysis analysis = s1_analysis(g, h);
  const bool identity_holds =
      analysis.set.size() == analysis.delta * analysis.normalizer_order;

  if (format == "json") {
    json doc;
    doc["group"] = g.name();
    doc["element"] = g.element(x).cycle_string();
    doc["delta"] = analysis.delta;
    doc["s1_size"] = analysis.set.size();
    doc["normalizer_order"] = analysis.normalizer_order;
    doc["identity_holds"] = identity_holds;
    write_output(doc.dump(2) + "\n", out_path, out);
  } else {
    std::ostringstream os;
    os << "delta=" << analysis.delta << " |S1|=" << analysis.set.size()
       << " |N_G(H)|=" << analysis.normalizer_order << " identity="
       << (identity_holds ? "true" : "false") << "\n";
    write_output(os.str(), out_path, out);
  }
  return identity_holds ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"finite-group nilpotence and subnormalizer toolkit"};
  app.name("subnil");
  app.require_subcommand(1);

  // compute
  auto *compute = app.add_subcommand(
      "compute", "compute dn, spr, dc, Nil/subnormalizer sets or a report");
  GroupSource compute_source;
  compute_source.add_options(compute);
  std::string compute_which;
  compute->add_option("which", compute_which,
                      "dn | spr | dc | nilset | subnorm | report")
      ->required();
  std::string compute_element;
  compute->add_option("--element", compute_element,
                      "element in cycle notation, e.g. \"(0 1)\"");
  std::string compute_format = "text";
  compute->add_option("--format", compute_format, "text | json | csv");
  std::string compute_out;
  compute->add_option("--out", compute_out, "write output to a file");
  std::size_t compute_max_order = 5000;
  compute->add_option("--max-order", compute_max_order,
                      "probability computations abort above this order");
  bool compute_verify = false;
  compute->add_flag("--verify", compute_verify,
                    "run both computation routes and compare");
  bool compute_decimal = false;
  compute->add_flag("--decimal", compute_decimal,
                    "add decimal approximations");

  // family
  auto *family = app.add_subcommand("family",
                                    "construct a built-in family member and "
                                    "emit its group file");
  std::string family_kind;
  family->add_option("kind", family_kind,
                     "symmetric | cyclic | dihedral | psl2 | frobenius | "
                     "galois")
      ->required();
  std::vector<unsigned> family_params;
  family->add_option("params", family_params, "family parameters");
  std::string family_out;
  family->add_option("--out", family_out, "write the group file here");
  bool family_allow_large = false;
  family->add_flag("--allow-large", family_allow_large,
                   "permit the large galois instance (k=3)");

  // sweep
  auto *sweep = app.add_subcommand(
      "sweep", "run the threshold checks over a catalog of groups");
  std::vector<std::string> sweep_builtins;
  sweep->add_option("--builtin", sweep_builtins, "built-in group tokens");
  std::vector<std::string> sweep_paths;
  sweep->add_option("--group", sweep_paths, "group file paths");
  std::string sweep_checks;
  sweep->add_option("--checks", sweep_checks,
                    "comma list: dn-bound,spr-bound,prop21,cor22,casolo,"
                    "wielandt,hypercenter,gustafson (default all)");
  std::string sweep_format = "csv";
  sweep->add_option("--format", sweep_format, "csv | json");
  std::string sweep_out;
  sweep->add_option("--out", sweep_out, "write the report to a file");
  std::size_t sweep_max_order = 5000;
  sweep->add_option("--max-order", sweep_max_order,
                    "probability computations abort above this order");
  bool sweep_verify = false;
  sweep->add_flag("--verify", sweep_verify,
                  "run both computation routes and compare");

  // casolo
  auto *casolo = app.add_subcommand(
      "casolo", "check |S_G(H)| = lambda_G(H) |N_G(P)| over p-subgroups");
  GroupSource casolo_source;
  casolo_source.add_options(casolo);
  unsigned casolo_prime = 0;
  casolo->add_option("--prime", casolo_prime,
                     "restrict to this prime (default: all p | |G|)");
  std::string casolo_element;
  casolo->add_option("--element", casolo_element,
                     "check only H = <x> for this element");
  std::string casolo_format = "csv";
  casolo->add_option("--format", casolo_format, "csv | json");
  std::string casolo_out;
  casolo->add_option("--out", casolo_out, "write output to a file");
  std::size_t casolo_max_order = 400;
  casolo->add_option("--max-order", casolo_max_order,
                     "exhaustive subgroup enumeration cap (cyclic subgroups "
                     "only above it)");

  // delta
  auto *delta_cmd = app.add_subcommand(
      "delta", "delta_G(H) and S^1_G(H) for H = <x>");
  GroupSource delta_source;
  delta_source.add_options(delta_cmd);
  std::string delta_element;
  delta_cmd->add_option("--element", delta_element,
                        "element in cycle notation")
      ->required();
  std::string delta_format = "text";
  delta_cmd->add_option("--format", delta_format, "text | json");
  std::string delta_out;
  delta_cmd->add_option("--out", delta_out, "write output to a file");

  std::vector<const char *> argv;
  argv.push_back("subnil");
  for (const std::string &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "subnil: " << e.what() << "\n";
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    if (compute->parsed())
      return run_compute(compute_source, compute_which, compute_element,
                         compute_format, compute_out, compute_max_order,
                         compute_verify, compute_decimal, out);
    if (family->parsed())
      return run_family(family_kind, family_params, family_out,
                        family_allow_large, out);
    if (sweep->parsed())
      return run_sweep(sweep_builtins, sweep_paths, sweep_checks,
                       sweep_format, sweep_out, sweep_max_order, sweep_verify,
                       out, err);
    if (casolo->parsed())
      return run_casolo(casolo_source, casolo_prime, casolo_element,
                        casolo_format, casolo_out, casolo_max_order, out);
    if (delta_cmd->parsed())
      return run_delta(delta_source, delta_element, delta_format, delta_out,
                       out);
  } catch (const std::exception &e) {
    err << "subnil: " << e.what() << "\n";
    return 1;
  }
  err << "subnil: no subcommand given\n";
  return 1;
}

} // namespace subnil::cli
