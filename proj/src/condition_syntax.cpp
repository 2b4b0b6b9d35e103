#include "cantor/condition_syntax.hpp"

#include <map>
#include <sstream>

#include "cantor/catalog.hpp"
#include "cantor/error.hpp"

namespace cantor {
namespace {

std::map<std::string, std::string> parse_fields(std::istringstream& words) {
  std::map<std::string, std::string> fields;
  std::string word;
  while (words >> word) {
    const std::size_t eq = word.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + word + "'");
    if (!fields.emplace(word.substr(0, eq), word.substr(eq + 1)).second) {
      throw ParseError("duplicate field '" + word.substr(0, eq) + "'");
    }
  }
  return fields;
}

class Fields {
 public:
  Fields(std::map<std::string, std::string> fields, std::string family)
      : fields_(std::move(fields)), family_(std::move(family)) {}

  std::string take(const std::string& key, const std::string& fallback) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return fallback;
    std::string v = it->second;
    fields_.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    if (!fields_.contains(key)) throw ParseError(family_ + " condition needs " + key + "=");
    return take(key, "");
  }

  bool has(const std::string& key) const { return fields_.contains(key); }

  void done() const {
    if (!fields_.empty()) throw ParseError("unknown field '" + fields_.begin()->first + "' for " + family_);
  }

 private:
  std::map<std::string, std::string> fields_;
  std::string family_;
};

SymbolicTree catalog_ref(const std::string& ref) {
  if (!ref.starts_with("catalog:")) throw ParseError("tree must be given as catalog:NAME");
  try {
    return catalog_tree(ref.substr(8));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ForcingCondition parse_condition(std::string_view text) {
  std::istringstream words{std::string(text)};
  std::string head;
  if (!(words >> head)) throw ParseError("empty condition");
  Fields f(parse_fields(words), head);
  auto stem = [&](Alphabet alphabet) { return parse_node(f.take("s", ""), alphabet); };
  ForcingCondition c = [&]() -> ForcingCondition {
    if (head == "cohen") return make_cohen(stem(Alphabet::Omega));
    if (head == "hechler") {
      Node s = stem(Alphabet::Omega);
      return make_hechler(std::move(s), parse_rule(f.require("f")));
    }
    if (head == "evdiff") {
      Node s = stem(Alphabet::Omega);
      std::vector<Rule> fs;
      for (std::size_t i = 0; f.has("f" + std::to_string(i)); ++i) fs.push_back(parse_rule(f.take("f" + std::to_string(i), "")));
      return make_evdiff(std::move(s), fs);
    }
    if (head == "laver") {
      Node s = stem(Alphabet::Omega);
      return make_laver(std::move(s), parse_natset(f.require("N")));
    }
    if (head == "mathias") {
      Node s = stem(Alphabet::Binary);
      return make_mathias(std::move(s), parse_natset(f.require("N")));
    }
    if (head == "silver") {
      NatSet free = parse_natset(f.require("free"));
      return make_silver(std::move(free), parse_natset(f.take("ones", "none")));
    }
    if (head == "sacks" || head == "random") {
      SymbolicTree tree = catalog_ref(f.require("tree"));
      if (tree.alphabet() != Alphabet::Binary) throw InvalidArgument(head + " trees are binary");
      if (head == "sacks") return SacksCond{tree};
      if (!tree.has_weights() || tree.weight(Node{}) <= 0) {
        throw InvalidArgument("random conditions need a weight oracle with w_root > 0");
      }
      return RandomCond{tree};
    }
    if (head == "miller") {
      SymbolicTree tree = catalog_ref(f.require("tree"));
      if (tree.alphabet() != Alphabet::Omega) throw InvalidArgument("miller trees are ω-trees");
      return MillerCond{tree};
    }
    throw ParseError("unknown condition family '" + head + "'");
  }();
  f.done();
  return c;
}

std::string to_string(const ForcingCondition& c) {
  std::string out(to_string(family(c)));
  auto stem = [&](const Node& s) { out += " s=" + to_string(s, cond_alphabet(c)); };
  if (const auto* x = std::get_if<CohenCond>(&c)) {
    stem(x->s);
  } else if (const auto* x = std::get_if<HechlerCond>(&c)) {
    stem(x->s);
    out += " f=" + to_string(x->f);
  } else if (const auto* x = std::get_if<EvDiffCond>(&c)) {
    stem(x->s);
    for (std::size_t i = 0; i < x->fs.size(); ++i) out += " f" + std::to_string(i) + "=" + to_string(x->fs[i]);
  } else if (const auto* x = std::get_if<LaverCond>(&c)) {
    stem(x->s);
    out += " N=" + to_string(x->successors);
  } else if (const auto* x = std::get_if<MathiasCond>(&c)) {
    stem(x->s);
    out += " N=" + to_string(x->n);
  } else if (const auto* x = std::get_if<SilverCond>(&c)) {
    out += " free=" + to_string(x->free) + " ones=" + to_string(x->ones);
  } else {
    const SymbolicTree& t = std::visit(
        [](const auto& y) -> const SymbolicTree& {
          if constexpr (requires { y.tree; }) return y.tree;
          else throw InvalidArgument("unreachable");
        },
        c);
    out += " tree=catalog:" + t.name();
  }
  return out;
}

}  // namespace cantor
