#include "cantor/certificate.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cantor/error.hpp"
#include "cantor/measure.hpp"

namespace cantor {
namespace {

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : "-"; }

std::string node_text(const Node& n) { return n.empty() ? "-" : to_string(n, Alphabet::Binary); }

}  // namespace

void write_certificate(std::ostream& out, const ExtractionCertificate& cert) {
  out << "certificate q=" << to_string(cert.q) << " delta=" << to_string(cert.delta)
      << " stages=" << cert.stage_count() << '\n';
  for (const StageRecord& s : cert.stages) {
    out << "stage " << s.index << ' ' << s.height << ' ' << to_string(s.a) << ' ' << opt_text(s.a_prime) << ' '
        << opt_text(s.a_second) << ' ' << opt_text(s.b) << ' ' << (s.j ? std::to_string(*s.j) : "-") << '\n';
    for (const LevelEntry& e : s.nodes) out << node_text(e.prefix) << '\n';
  }
  out << "bound " << to_string(cert.measure_lower_bound) << '\n';
}

std::string serialize(const ExtractionCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

ExtractionCertificate parse_certificate(std::istream& in) {
  ExtractionCertificate cert;
  std::string line;
  std::size_t line_no = 0;
  bool header = false, footer = false;
  std::optional<std::size_t> declared;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("certificate line " + std::to_string(line_no) + ": " + what);
  };
  auto field = [&](std::istringstream& words, const char* key) {
    std::string w;
    if (!(words >> w) || !w.starts_with(std::string(key) + "=")) throw fail(std::string("expected ") + key + "=");
    return w.substr(std::string(key).size() + 1);
  };
  auto opt_rational = [&](const std::string& w) -> std::optional<Rational> {
    if (w == "-") return std::nullopt;
    return parse_rational(w);
  };
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (footer) throw fail("content after bound line");
    std::istringstream words(line);
    std::string head;
    words >> head;
    try {
      if (!header) {
        if (head != "certificate") throw fail("expected certificate header");
        cert.q = parse_rational(field(words, "q"));
        cert.delta = parse_rational(field(words, "delta"));
        declared = std::stoul(field(words, "stages"));
        header = true;
      } else if (head == "stage") {
        StageRecord s;
        std::string a, ap, app, b, j;
        if (!(words >> s.index >> s.height >> a >> ap >> app >> b >> j)) throw fail("malformed stage line");
        s.a = parse_rational(a);
        s.a_prime = opt_rational(ap);
        s.a_second = opt_rational(app);
        s.b = opt_rational(b);
        if (j != "-") s.j = std::stoul(j);
        cert.stages.push_back(std::move(s));
      } else if (head == "bound") {
        std::string b;
        if (!(words >> b)) throw fail("missing bound");
        cert.measure_lower_bound = parse_rational(b);
        footer = true;
      } else {
        if (cert.stages.empty()) throw fail("node before any stage line");
        StageRecord& s = cert.stages.back();
        Node n = head == "-" ? Node{} : parse_node(head, Alphabet::Binary);
        if (n.length() > s.height) throw fail("node longer than the stage height");
        const std::size_t free = s.height - n.length();
        s.nodes.push_back({std::move(n), free});
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  if (!header) throw ParseError("certificate: missing header");
  if (!footer) throw ParseError("certificate: missing bound line");
  if (cert.stages.empty() || *declared != cert.stage_count()) {
    throw ParseError("certificate: declared stage count does not match the stage lines");
  }
  return cert;
}

ExtractionCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

namespace {

class Verifier {
 public:
  Verifier(const SymbolicTree& tree, const ExtractionCertificate& cert, std::size_t cap)
      : tree_(tree), cert_(cert), cap_(cap) {}

  VerifyReport run() {
    try {
      check_all();
    } catch (const Failed&) {
    } catch (const Error& e) {
      fail(std::string("error during verification: ") + e.what(), false);
    }
    return report_;
  }

 private:
  struct Failed {};

  void fail(const std::string& what, bool do_throw = true) {
    report_.ok = false;
    report_.first_violation = what;
    if (do_throw) throw Failed{};
  }

  void expect(bool holds, const std::string& what) {
    ++report_.inequalities_checked;
    if (!holds) fail(what);
  }

  static std::string at(std::size_t i) { return "stage " + std::to_string(i) + ": "; }

  // Whether some entry of `stage` has a prefix that is an initial segment of v.
  bool covering(const std::vector<LevelEntry>& stage, const Node& v) {
    auto [it, fresh] = prefixes_.try_emplace(&stage);
    if (fresh)
      for (const LevelEntry& e : stage) it->second.insert(e.prefix);
    for (std::size_t k = 0; k <= v.length(); ++k)
      if (it->second.contains(v.prefix(k))) return true;
    return false;
  }

  Rational weight_of(const LevelEntry& e) const { return e.free_depth > 0 ? Rational(1) : tree_.weight(e.prefix); }

  void check_all() {
    expect(tree_.alphabet() == Alphabet::Binary && tree_.has_weights(), "tree is not a weighted binary tree");
    expect(cert_.q > 0 && cert_.q < 1, "q outside (0,1)");
    const Schedule sched = make_schedule(cert_.q);
    expect(cert_.delta == sched.delta, "delta differs from (1-q)/2");
    expect(cert_.stage_count() >= 1, "no construction stages");
    const Rational root_mass = tree_.weight(Node{});
    expect(root_mass > 0, "w_root is not positive");

    const StageRecord& s0 = cert_.stages.front();
    expect(s0.index == 0 && s0.height == 0, at(0) + "index and height must be 0");
    expect(s0.nodes.size() == 1 && s0.nodes.front().prefix.empty(), at(0) + "S_0 must be the root");
    expect(s0.a == sched.a(0), at(0) + "a_0 differs from the schedule");

    for (std::size_t i = 1; i < cert_.stages.size(); ++i) check_stage(sched, i);

    const std::size_t K = cert_.stage_count();
    const Rational final_mass = block_mass(tree_, cert_.stages.back().nodes);
    expect(cert_.measure_lower_bound == final_mass * sched.tail(K), "final: bound is not mass(S_K)·tail(K)");
    expect(cert_.measure_lower_bound >= cert_.q * root_mass, "final: bound below q·w_root");
    Rational product = sched.tail(K);
    for (std::size_t i = 0; i < K; ++i) product *= sched.a(i) * sched.a(i);
    expect(product > cert_.q, "final: ∏ a_i² · tail does not exceed q");
  }

  void check_stage(const Schedule& sched, std::size_t i) {
    const StageRecord& s = cert_.stages[i];
    const StageRecord& p = cert_.stages[i - 1];
    const std::string where = at(i);
    expect(s.index == i, where + "index out of sequence");
    expect(s.a == sched.a(i), where + "a_i differs from the schedule");
    expect(s.a_prime && s.a_second && s.b && s.j, where + "missing parameters");
    const Rational &ap = *s.a_prime, &app = *s.a_second, &b = *s.b;
    expect(s.a < ap, where + "a_i < a'_i fails");
    expect(ap < app, where + "a'_i < a''_i fails");
    expect(app < b, where + "a''_i < b_i fails");
    expect(b < 1, where + "b_i < 1 fails");
    expect(b > threshold_f(app), where + "b_i > f(a''_i) fails");
    if (i == 1) {
      expect(b > threshold_f(ap), where + "b_1 > f(a'_1) fails");
    } else {
      expect(1 - ap < *p.a_prime - p.a, where + "1 - a'_i < a'_{i-1} - a_{i-1} fails");
      expect(b > p.a, where + "b_i > a_{i-1} fails");
    }
    expect(*s.j >= 1 && s.height == p.height + *s.j, where + "n_i = n_{i-1} + j_i fails");

    check_structure(s, p, where);

    if (i == 1) {
      Count kept = 0;
      for (const LevelEntry& e : s.nodes) kept += pow2_count(e.free_depth);
      const Count all = level_size(tree_, Node{}, s.height, cap_);
      expect(all > 0 && Rational(kept, all) > b, where + "|S_1|/|Lev_{n_1}| > b_1 fails");
    } else {
      check_goodness(s, p, where);
      check_exclusion(s, p, where);
    }

    const Rational prev_mass = block_mass(tree_, p.nodes);
    const Rational mass = block_mass(tree_, s.nodes);
    expect(mass >= p.a * p.a * prev_mass, where + "mass ratio >= a_{i-1}^2 fails (condition (b))");
  }

  void check_structure(const StageRecord& s, const StageRecord& p, const std::string& where) {
    std::vector<const LevelEntry*> sorted;
    for (const LevelEntry& e : s.nodes) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const LevelEntry* x, const LevelEntry* y) { return x->prefix.symbols() < y->prefix.symbols(); });
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
      expect(!sorted[k]->prefix.is_prefix_of(sorted[k + 1]->prefix),
             where + "S_i entries overlap at " + node_text(sorted[k]->prefix));
    }
    for (const LevelEntry& e : s.nodes) {
      const std::string node = node_text(e.prefix);
      expect(e.prefix.length() + e.free_depth == s.height, where + "entry " + node + " has the wrong height");
      expect(tree_.contains(e.prefix), where + "entry " + node + " is not in T");
      if (e.free_depth > 0) {
        expect(tree_.full_cone(e.prefix) && tree_.weight(e.prefix) == 1,
               where + "block " + node + " lacks a full-cone certificate");
      }
      expect(weight_of(e) > *s.b, where + "w_u > b_i fails at " + node);
      expect(covering(p.nodes, e.prefix.prefix(p.height)),
             where + "entry " + node + " extends no node of S_{i-1}");
    }
  }

  void check_goodness(const StageRecord& s, const StageRecord& p, const std::string& where) {
    const Rational& construction = *p.a_prime;
    const Rational& condition_a = cert_.stages[s.index - 2].a;
    for (const LevelEntry& e : s.nodes) {
      for (std::size_t len = p.height; len <= e.prefix.length(); ++len) {
        const Rational w = tree_.weight(e.prefix.prefix(len));
        expect(w >= construction, where + "entry " + node_text(e.prefix) + " is not (t,a'_{i-1})-good");
        expect(w >= condition_a, where + "entry " + node_text(e.prefix) + " is not (t,a_{i-2})-good (condition (a))");
      }
    }
  }

  void check_exclusion(const StageRecord& s, const StageRecord& p, const std::string& where) {
    const Rational bound = (1 - *p.a_prime) + (1 - *s.b);
    const std::size_t j = *s.j;
    std::unordered_map<Node, Count, NodeHash> kept_above;
    for (const LevelEntry& e : s.nodes)
      if (e.prefix.length() >= p.height) kept_above[e.prefix.prefix(p.height)] += pow2_count(e.free_depth);
    auto check_node = [&](const Node& t, const Count& level) {
      const auto found = kept_above.find(t);
      const Count kept = covering(s.nodes, t) ? pow2_count(j) : found == kept_above.end() ? Count(0) : found->second;
      expect(level > 0 && Rational(level - kept, level) < bound,
             where + "exclusion cap fails above " + node_text(t));
    };
    for (const LevelEntry& e : p.nodes) {
      if (e.free_depth == 0) {
        check_node(e.prefix, level_size(tree_, e.prefix, j, cap_));
        continue;
      }
      if (covering(s.nodes, e.prefix)) {
        ++report_.inequalities_checked;
        continue;
      }
      expect(e.free_depth <= 16, where + "block " + node_text(e.prefix) + " is too deep to expand");
      const Count full = pow2_count(j);
      for (std::size_t x = 0; x < (std::size_t{1} << e.free_depth); ++x) {
        std::vector<Symbol> bits = e.prefix.symbols();
        for (std::size_t k = e.free_depth; k-- > 0;) bits.push_back((x >> k) & 1);
        check_node(Node(std::move(bits)), full);
      }
    }
  }

  const SymbolicTree& tree_;
  const ExtractionCertificate& cert_;
  std::size_t cap_;
  VerifyReport report_;
  std::unordered_map<const std::vector<LevelEntry>*, std::unordered_set<Node, NodeHash>> prefixes_;
};

}  // namespace

VerifyReport verify_certificate(const SymbolicTree& tree, const ExtractionCertificate& cert, std::size_t cap) {
  return Verifier(tree, cert, cap).run();
}

}  // namespace cantor
