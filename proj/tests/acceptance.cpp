// Acceptance run: one PASS/FAIL line per criterion.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cantor/catalog.hpp"
#include "cantor/certificate.hpp"
#include "cantor/cli.hpp"
#include "cantor/measure.hpp"
#include "cantor/suites.hpp"
#include "oracles.hpp"

using namespace cantor;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(int(limit_s)) + " s limit)";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", s);
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << ": " << o.detail << " [" << timing << "]"
            << std::endl;
  failures += o.pass ? 0 : 1;
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

Rational random_unit(std::mt19937_64& rng) {
  const long q = std::uniform_int_distribution<long>(2, 1 << 12)(rng);
  return make_rational(std::uniform_int_distribution<long>(1, q - 1)(rng), q);
}

Outcome exact_three_quarters() {
  const SymbolicTree b = catalog_tree("B-triple-ones-complement");
  for (std::size_t n = 0; n <= 10; ++n) {
    const MeasureInterval m = measure_interval(b, repeat(0, n), 8);
    if (m.lower != Rational(3, 4) || m.upper < m.lower)
      return {false, "n=" + std::to_string(n) + " gave [" + to_string(m.lower) + ", " + to_string(m.upper) + "]"};
  }
  return {true, "oracle value 3/4 at 0^n for n = 0..10"};
}

Outcome extraction_soundness(const fs::path& dir) {
  std::size_t runs = 0;
  double slowest = 0;
  for (const char* name : {"B-triple-ones-complement", "A-triple-ones", "fat-cantor"}) {
    for (const char* q : {"1/4", "1/2", "3/4"}) {
      const auto t0 = Clock::now();
      const std::string tree = std::string("catalog:") + name;
      const std::string path = (dir / (std::string(name) + "-" + std::to_string(runs) + ".cert")).string();
      std::string log;
      if (cli({"extract", "--tree", tree, "--q", q, "--stages", "3", "--out", path}, &log) != 0)
        return {false, std::string(name) + " q=" + q + ": extract failed: " + log};
      if (cli({"verify", tree, path}, &log) != 0) return {false, std::string(name) + " q=" + q + ": " + log};
      // The aggregate bound once more, from the certificate text alone.
      std::ifstream in(path);
      const ExtractionCertificate c = parse_certificate(in);
      const Schedule s = make_schedule(parse_rational(q));
      Rational product = s.tail(c.stage_count());
      for (std::size_t i = 0; i < c.stage_count(); ++i) product *= s.a(i) * s.a(i);
      const Rational w = catalog_tree(name).weight(Node{});
      if (!(product >= s.q) || c.measure_lower_bound < s.q * w)
        return {false, std::string(name) + " q=" + q + ": aggregate bound below q"};
      slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
      if (slowest >= 120) return {false, std::string(name) + " q=" + q + " took over 2 min"};
      ++runs;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu extract+verify runs, 3 stages each, slowest %.2fs", runs, slowest);
  return {true, buf};
}

Outcome brute_force_equivalence() {
  std::size_t ratios = 0;
  const std::vector<std::pair<std::string, SymbolicTree>> trees{
      {"full", catalog_tree("full")},
      {"fat-cantor-3", catalog_tree("fat-cantor-3")},
      {"fat-cantor-2", catalog_tree("fat-cantor-2")}};
  for (const auto& [name, tree] : trees) {
    for (const Rational& q : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const ExtractionCertificate c = extract(tree, q, 3);
      std::vector<Rational> oracle_mass, counted_mass;
      for (const StageRecord& s : c.stages) {
        oracle_mass.push_back(block_mass(tree, s.nodes));
        Rational counted = 0;
        for (const LevelEntry& e : s.nodes) {
          const std::size_t depth = std::max<std::size_t>(12, e.prefix.length() + e.free_depth);
          if (depth > 22) return {false, name + ": stage too deep to count"};
          counted += Rational(long(oracle::count_extensions(tree, e.prefix, depth))) * pow2(-long(depth));
        }
        counted_mass.push_back(counted);
      }
      for (std::size_t i = 0; i + 1 < c.stages.size(); ++i) {
        if (oracle_mass[i + 1] / oracle_mass[i] != counted_mass[i + 1] / counted_mass[i])
          return {false, name + " q=" + to_string(q) + " stage " + std::to_string(i + 1) + ": oracle ratio " +
                             to_string(oracle_mass[i + 1] / oracle_mass[i]) + " vs counted " +
                             to_string(counted_mass[i + 1] / counted_mass[i])};
        ++ratios;
      }
    }
  }
  return {true, std::to_string(ratios) + " stage mass ratios equal exhaustive counts"};
}

Outcome suite_outcome(const SuiteReport& r) {
  std::string detail = r.summary();
  for (const SuiteCase& c : r.cases)
    if (!c.pass) detail += "; " + c.name + ": " + c.detail;
  std::size_t checks = 0;
  for (const SuiteCase& c : r.cases) checks += c.checks;
  return {r.all_pass(), detail + ", " + std::to_string(checks) + " checks"};
}

Outcome meet_oracle_fuzz() {
  SuiteReport r;
  for (Family f : {Family::Cohen, Family::Hechler, Family::EvDiff, Family::LaverF, Family::MathiasF})
    r.cases.push_back(meet_fuzz(f, 200, 10, 2024));
  return suite_outcome(r);
}

Outcome schedule_and_threshold() {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 50; ++k) {
    const Rational a = random_unit(rng);
    const Threshold t = threshold_search(a);
    const Rational step = pow2(-long(t.grid_exponent));
    if (!oracle::threshold(a, t.value)) return {false, "f(" + to_string(a) + ") fails the inequality"};
    if (oracle::threshold(a, t.value - step)) return {false, "f(" + to_string(a) + ") is not minimal on its grid"};
  }
  for (int k = 0; k < 20; ++k) {
    const Rational q = random_unit(rng);
    if (!(make_schedule(q).certified_product() > q)) return {false, "product bound not above q=" + to_string(q)};
  }
  return {true, "50 thresholds exact and grid-minimal, 20 schedules certified"};
}

Outcome invariant_fuzz() {
  const std::vector<std::string> names{"full", "single-branch", "A-triple-ones", "B-triple-ones-complement",
                                       "fat-cantor-3", "fat-cantor", "A-odd-ones", "T-powers-plus-one"};
  std::vector<SymbolicTree> trees;
  for (const auto& n : names) trees.push_back(catalog_tree(n));
  std::mt19937_64 rng(8);
  std::size_t sampled = 0;
  while (sampled < 10000) {
    const std::size_t which = rng() % trees.size();
    const SymbolicTree& tree = trees[which];
    const std::size_t depth = rng() % 16;
    Node t;
    for (std::size_t k = 0; k < depth; ++k) {
      const auto kids = tree.children(t);
      if (kids.empty()) return {false, names[which] + ": dead end at " + to_string(t, Alphabet::Binary)};
      t = kids[rng() % kids.size()];
    }
    for (std::size_t k = 0; k <= t.length(); ++k)
      if (!tree.contains(t.prefix(k))) return {false, names[which] + ": not prefix closed"};
    const auto w = [&](const Node& u) { return tree.contains(u) ? tree.weight(u) : Rational(0); };
    if (w(t) != (w(t.child(0)) + w(t.child(1))) / 2)
      return {false, names[which] + ": recurrence fails at " + to_string(t, Alphabet::Binary)};
    Rational prev = relative_level_size(tree, t, 0);
    if (w(t) > prev) return {false, names[which] + ": weight above level ratio"};
    for (std::size_t i = 1; i <= 4; ++i) {
      const Rational next = relative_level_size(tree, t, i);
      if (next > prev || w(t) > next) return {false, names[which] + ": level ratios not monotone"};
      prev = next;
    }
    ++sampled;
  }
  return {true, std::to_string(sampled) + " sampled nodes over " + std::to_string(names.size()) + " trees"};
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / ("cantor-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  criterion(1, "exact 3/4 along 0^n", 1, exact_three_quarters);
  criterion(2, "extraction soundness", 0, [&] { return extraction_soundness(dir); });
  criterion(3, "brute-force equivalence of stage mass ratios", 0, brute_force_equivalence);
  criterion(4, "counterexample suite at depth 10", 30, [] { return suite_outcome(counterexample_suite(10)); });
  criterion(5, "strongly linked positive result", 0, [] { return suite_outcome(density_positive_suite(10, 100, 1)); });
  criterion(6, "meet oracle fuzz", 0, meet_oracle_fuzz);
  criterion(7, "schedule and threshold", 0, schedule_and_threshold);
  criterion(8, "invariant fuzz", 0, invariant_fuzz);

  fs::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
