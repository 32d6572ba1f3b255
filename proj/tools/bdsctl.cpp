// bdsctl: classification tables, per-case data, series reports and verification suites.
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 hypothesis violation, 4 guard exceeded.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "lie/cases.hpp"
#include "lie/report.hpp"
#include "lie/verify.hpp"

using namespace lie;
using report::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitGuard = 4;

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

struct Options {
  std::size_t guard = kDefaultGuard;
  int rank_max = 8;
  int rank = 0;
  bool quaternionic = false, tube_only = false, csv = false;
  std::string case_spec;
  int m = 2;
  std::string type_label, shape, levi;
  bool use_oracle = false;
  std::string series_cmd;
  std::string gamma0 = "0";
  std::string t;
  int m_max = 12, r_max = 12, j_max = -1, a1_max = 3;
  std::string side = "bds";
  std::string suite = "all";
};

Weight gamma0_of(const BdsDatum& d, const std::string& text) {
  if (text == "0") return d.g.zero();
  return gamma0_from_labels(d, parse_list(text));
}

int cmd_classify(const Options& o) {
  std::vector<ClassificationRow> rows;
  std::optional<BdsDatum> single;
  if (!o.case_spec.empty()) try {
      single = resolve_case(o.case_spec);
    } catch (const std::invalid_argument&) {
    }
  const int rank_max = o.rank > 0 ? o.rank : o.rank_max;
  bool family_match = false;
  for (const auto& d : single ? std::vector<BdsDatum>{*single} : all_data(rank_max)) {
    if (o.rank > 0 && d.g.rank() != o.rank) continue;
    if (!single && canonical_nu(d.g, d.nu) != d.nu + 1) continue;  // one row per real form
    auto row = classify(d);
    if (!single && !o.case_spec.empty()) {
      if (row.family != o.case_spec && row.g0_label != o.case_spec) continue;
      family_match = true;
    }
    if (o.quaternionic && !row.quaternionic) continue;
    if (o.tube_only && !row.tube_type) continue;
    rows.push_back(row);
  }
  if (!o.case_spec.empty() && !single && !family_match) {
    std::cerr << "unknown case '" << o.case_spec << "'\n";
    return kExitUsage;
  }
  if (o.csv) {
    std::cout << report::classification_csv(rows);
  } else {
    json a = json::array();
    for (const auto& r : rows) a.push_back(report::row(r));
    std::cout << report::dump({{"rows", a}, {"rank_max", rank_max}});
  }
  return 0;
}

int cmd_series(const Options& o) {
  BdsDatum d = resolve_case(o.case_spec);
  Weight g0 = gamma0_of(d, o.gamma0);
  Rational t = o.t.empty() ? most_negative_bound(d, g0) : parse_rational(o.t);
  SeriesParams p = make_series_params(d, g0, t, o.m_max, o.r_max, o.guard);
  json out = {{"case", d.key()}, {"gamma0", report::weight(g0)}, {"t", report::rational(t)}};
  if (o.series_cmd == "ktypes") {
    out["k_types"] = report::types(bds_k_types(p));
    out["m_max"] = p.m_max;
  } else if (o.series_cmd == "ltypes") {
    out["holo_l_types"] = report::types(holo_l_types(p));
    out["r_max"] = p.r_max;
  } else if (o.series_cmd == "common") {
    CommonReport rep;
    if (d.quaternionic()) {
      rep = common_l_types_quaternionic(p, quaternionic_datum(d));
    } else {
      TubeBounds b;
      b.a1_max = o.a1_max;
      b.j_max = o.j_max;
      rep = common_l_types_tube(p, b);
    }
    out["report"] = report::common(rep);
  } else {
    out["evidence"] = report::evidence(admissibility_evidence(p, o.side));
  }
  std::cout << report::dump(out);
  return 0;
}

int cmd_branch(const Options& o) {
  if (o.type_label.size() < 2) throw std::invalid_argument("--type like C2");
  auto g = RootSystem::build(o.type_label[0], std::stoi(o.type_label.substr(1)));
  Weight lam = g.from_fundamental(parse_list(o.shape));
  std::vector<int> levi;
  for (const auto& x : parse_list(o.levi)) levi.push_back(static_cast<int>(x.numerator()) - 1);
  auto t = o.use_oracle ? branch_oracle(lam, g.full(), levi, AlgebraTag::l, o.guard)
                        : branch_to_levi(lam, g.full(), levi, AlgebraTag::l, o.guard);
  std::cout << report::dump({{"shape", report::weight(lam)},
                             {"method", o.use_oracle ? "character" : "paths"},
                             {"restriction", report::types(t)}});
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else
    suites = {o.suite};
  json out = json::array();
  bool all = true;
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, o.guard);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
    all = all && r.pass();
  }
  std::cout << report::dump({{"suites", out}, {"pass", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("BDS_GUARD")) {
    try {
      o.guard = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "BDS_GUARD must be a positive integer\n";
      return kExitUsage;
    }
  }
  CLI::App app{"Borel-de Siebenthal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --guard is accepted after the subcommand too
  std::size_t guard_flag = 0;
  app.add_option("--guard", guard_flag, "dimension guard (overrides BDS_GUARD)");

  auto* classify_cmd = app.add_subcommand("classify", "classification table");
  classify_cmd->add_option("--rank-max", o.rank_max)->check(CLI::Range(1, 8));
  classify_cmd->add_option("--rank", o.rank)->check(CLI::Range(1, 8));
  classify_cmd->add_option("--case", o.case_spec, "case or family label");
  classify_cmd->add_flag("--quaternionic", o.quaternionic);
  classify_cmd->add_flag("--tube-only", o.tube_only);
  auto* fmt = classify_cmd->add_option_group("format");
  fmt->add_flag("--csv", o.csv);
  fmt->add_flag("--json", [](std::int64_t) {});
  fmt->require_option(0, 1);

  auto* datum_cmd = app.add_subcommand("datum", "root grading of one case");
  datum_cmd->add_option("--case", o.case_spec)->required();
  auto* cascade_cmd = app.add_subcommand("cascade", "strongly orthogonal cascade");
  cascade_cmd->add_option("--case", o.case_spec)->required();
  auto* schmid_cmd = app.add_subcommand("schmid", "S^m(u_-2) as l-types");
  schmid_cmd->add_option("--case", o.case_spec)->required();
  schmid_cmd->add_option("--m", o.m)->check(CLI::NonNegativeNumber);

  auto* branch_cmd = app.add_subcommand("branch", "restriction to a Levi subalgebra");
  branch_cmd->add_option("--type", o.type_label)->required();
  branch_cmd->add_option("--shape", o.shape, "Dynkin labels, comma separated")->required();
  branch_cmd->add_option("--levi", o.levi, "1-based simple roots, comma separated")->required();
  branch_cmd->add_flag("--oracle", o.use_oracle, "use the character oracle instead of paths");

  auto* series_cmd = app.add_subcommand("series", "series reports");
  series_cmd->add_option("what", o.series_cmd)
      ->required()
      ->check(CLI::IsMember({"ktypes", "ltypes", "common", "admissibility"}));
  series_cmd->add_option("--case", o.case_spec)->required();
  series_cmd->add_option("--gamma0", o.gamma0, "0 or Dynkin labels on the l simple roots");
  series_cmd->add_option("--t", o.t, "center coordinate (default: largest valid)");
  series_cmd->add_option("--m-max", o.m_max)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--r-max", o.r_max)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--j-max", o.j_max);
  series_cmd->add_option("--a1-max", o.a1_max)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--side", o.side)->check(CLI::IsMember({"bds", "holo"}));

  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->add_option("suite", o.suite)->check(CLI::IsMember({"rootsys", "bds", "cascade", "schmid", "lspath",
                                                                  "series", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (guard_flag > 0) o.guard = guard_flag;

  try {
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (datum_cmd->parsed()) {
      BdsDatum d = resolve_case(o.case_spec);
      json j = report::datum(d);
      j["classification"] = report::row(classify(d));
      std::cout << report::dump(j);
      return 0;
    }
    if (cascade_cmd->parsed()) {
      BdsDatum d = resolve_case(o.case_spec);
      std::cout << report::dump(report::cascade(lie::cascade(d), d.herm));
      return 0;
    }
    if (schmid_cmd->parsed()) {
      BdsDatum d = resolve_case(o.case_spec);
      std::cout << report::dump(report::schmid(o.m, lie::cascade(d), d.herm));
      return 0;
    }
    if (branch_cmd->parsed()) return cmd_branch(o);
    if (series_cmd->parsed()) return cmd_series(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
