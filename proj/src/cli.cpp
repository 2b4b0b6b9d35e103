#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "cantor/certificate.hpp"
#include "cantor/condition_syntax.hpp"
#include "cantor/density.hpp"
#include "cantor/descriptor.hpp"
#include "cantor/error.hpp"
#include "cantor/measure.hpp"
#include "cantor/suites.hpp"

namespace cantor::cli {

namespace {

struct Options {
  std::string tree;
  std::string q;
  std::size_t stages = 3;
  std::size_t j_cap = ExtractOptions{}.j_cap;
  std::string out_path;
  std::string certificate;
  std::string condition;
  std::string target;
  std::string node;
  std::string point;
  std::size_t horizon = 12;
  std::string c1;
  std::string c2;
  std::string suite;
  std::size_t depth = 10;
  std::size_t samples = 100;
  std::size_t pairs = 200;
  std::uint64_t seed = 1;
};

int cmd_extract(const Options& o, std::ostream& out) {
  const SymbolicTree tree = load_tree(o.tree);
  const ExtractionCertificate cert = extract(tree, parse_rational(o.q), o.stages, ExtractOptions{o.j_cap});
  if (o.out_path.empty() || o.out_path == "-") {
    write_certificate(out, cert);
    return 0;
  }
  std::ofstream file(o.out_path);
  if (!file) throw InvalidArgument("cannot write '" + o.out_path + "'");
  write_certificate(file, cert);
  out << "certificate stages=" << cert.stage_count() << " height=" << cert.stages.back().height
      << " bound=" << to_string(cert.measure_lower_bound) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SymbolicTree tree = load_tree(o.tree);
  std::ifstream file(o.certificate);
  if (!file) throw InvalidArgument("cannot open certificate '" + o.certificate + "'");
  const VerifyReport report = verify_certificate(tree, parse_certificate(file));
  if (report.ok) {
    out << "verified inequalities=" << report.inequalities_checked << "\n";
    return 0;
  }
  out << "rejected: " << report.first_violation << "\n";
  return 1;
}

Point parse_point(const std::string& text, Alphabet alphabet) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return Point{parse_node(text, alphabet), {}};
  return Point{parse_node(text.substr(0, colon), alphabet), parse_node(text.substr(colon + 1), alphabet)};
}

int cmd_density(const Options& o, std::ostream& out) {
  if (o.condition.empty() == o.target.empty()) throw InvalidArgument("give exactly one of --condition and --target");
  DensityVerdict verdict;
  if (!o.condition.empty()) {
    const ForcingCondition c = parse_condition(o.condition);
    verdict = strongly_linked_density(c, parse_node(o.node, cond_alphabet(c)));
  } else {
    constexpr std::string_view prefix = "catalog:";
    std::string_view name = o.target;
    if (name.substr(0, prefix.size()) == prefix) name.remove_prefix(prefix.size());
    const TargetSet target = catalog_target(name);
    verdict = null_density_test(target, parse_point(o.point, target.tree.alphabet()), o.horizon);
  }
  out << to_string(verdict) << "\n";
  if (!verdict.rho.empty()) {
    out << "rho";
    for (const Rational& r : verdict.rho) out << " " << to_string(r);
    out << "\n";
  }
  if (!verdict.detail.empty()) out << verdict.detail << "\n";
  return 0;
}

int cmd_meet(const Options& o, std::ostream& out) {
  const ForcingCondition c1 = parse_condition(o.c1);
  const ForcingCondition c2 = parse_condition(o.c2);
  const MeetResult r = strongly_linked_meet(c1, c2);
  if (r.meet) out << to_string(*r.meet) << "\n";
  else out << "incompatible: " << to_string(r.witness, cond_alphabet(c1)) << "\n";
  return 0;
}

void print_case(std::ostream& out, const SuiteCase& c) {
  out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << " checks=" << c.checks;
  if (!c.detail.empty()) out << " " << c.detail;
  out << "\n";
}

int cmd_suite(const Options& o, std::ostream& out) {
  SuiteReport report;
  if (o.suite == "counterexamples") {
    report = counterexample_suite(o.depth);
  } else if (o.suite == "positive") {
    report = density_positive_suite(o.depth, o.samples, o.seed);
  } else if (o.suite == "meet-fuzz") {
    for (Family f : {Family::Cohen, Family::Hechler, Family::EvDiff, Family::LaverF, Family::MathiasF}) {
      report.cases.push_back(meet_fuzz(f, o.pairs, o.depth, o.seed));
    }
  } else {
    throw InvalidArgument("unknown suite '" + o.suite + "' (counterexamples | positive | meet-fuzz)");
  }
  out << report.summary() << "\n";
  for (const SuiteCase& c : report.cases) print_case(out, c);
  return report.all_pass() ? 0 : 1;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const SymbolicTree tree = load_tree(o.tree);
  const Node t = parse_node(o.node, tree.alphabet());
  const MeasureInterval m = measure_interval(tree, t, o.depth);
  out << to_string(m.lower) << " " << to_string(m.upper) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density points of tree forcing ideals: extraction, verification and suites", "cantor"};
  app.require_subcommand(1);
  Options o;

  auto* extract_cmd = app.add_subcommand("extract", "Extract a density-point certificate from a weighted tree");
  extract_cmd->add_option("--tree", o.tree, "catalog:NAME or descriptor file")->required();
  extract_cmd->add_option("--q", o.q, "target measure, p/q or decimal")->required();
  extract_cmd->add_option("--stages", o.stages, "number of stages");
  extract_cmd->add_option("--out", o.out_path, "certificate path (default stdout)");
  extract_cmd->add_option("--j-cap", o.j_cap, "largest level step tried per stage");

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify a certificate from the tree's levels");
  verify_cmd->add_option("tree", o.tree, "catalog:NAME or descriptor file")->required();
  verify_cmd->add_option("certificate", o.certificate, "certificate path")->required();

  auto* density_cmd = app.add_subcommand("density", "Certify a shift density verdict");
  density_cmd->add_option("--condition", o.condition, "strongly linked condition line");
  density_cmd->add_option("--node", o.node, "node u for --condition");
  density_cmd->add_option("--target", o.target, "catalog set for the null ideal");
  density_cmd->add_option("--point", o.point, "x as PREFIX or PREFIX:PERIOD");
  density_cmd->add_option("--horizon", o.horizon, "largest n examined");

  auto* meet_cmd = app.add_subcommand("meet", "Meet of two strongly linked conditions");
  meet_cmd->add_option("c1", o.c1)->required();
  meet_cmd->add_option("c2", o.c2)->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run a property suite");
  suite_cmd->add_option("name", o.suite, "counterexamples | positive | meet-fuzz")->required();
  suite_cmd->add_option("--depth", o.depth);
  suite_cmd->add_option("--samples", o.samples);
  suite_cmd->add_option("--pairs", o.pairs);
  suite_cmd->add_option("--seed", o.seed);

  auto* measure_cmd = app.add_subcommand("measure", "Exact measure interval of [T]∩N_t relative to N_t");
  measure_cmd->add_option("tree", o.tree)->required();
  measure_cmd->add_option("--node", o.node);
  measure_cmd->add_option("--depth", o.depth);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*extract_cmd) return cmd_extract(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*density_cmd) return cmd_density(o, out);
    if (*meet_cmd) return cmd_meet(o, out);
    if (*suite_cmd) return cmd_suite(o, out);
    return cmd_measure(o, out);
  } catch (const LevelSearchExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cantor::cli
