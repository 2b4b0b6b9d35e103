#include "cantor/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cantor/catalog.hpp"
#include "cantor/condition_syntax.hpp"
#include "cantor/error.hpp"

namespace cantor {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

SymbolicTree avoid_tree(std::vector<Node> avoided) {
  std::sort(avoided.begin(), avoided.end());
  std::vector<Node> minimal;
  for (const Node& u : avoided) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Node& m) { return m.is_prefix_of(u); })) {
      minimal.push_back(u);
    }
  }
  const auto hit = [minimal](const Node& t) {
    return std::any_of(minimal.begin(), minimal.end(), [&](const Node& u) { return u.is_prefix_of(t); });
  };
  SymbolicTree tree(Alphabet::Binary, [hit](const Node& t) { return !hit(t); });
  return tree
      .with_full_cone([minimal](const Node& t) {
        return std::none_of(minimal.begin(), minimal.end(), [&](const Node& u) { return comparable(u, t); });
      })
      .with_weights([minimal, hit](const Node& t) {
        if (hit(t)) return Rational(0);
        Rational lost = 0;
        for (const Node& u : minimal) {
          if (t.is_prefix_of(u)) lost += pow2(-static_cast<long>(u.length() - t.length()));
        }
        return Rational(1 - lost);
      })
      .with_name("avoid");
}

SymbolicTree parse_descriptor(std::istream& in) {
  std::optional<Alphabet> alphabet;
  bool pruned = true;
  bool drop_weights = false;
  std::optional<Symbol> window;
  std::optional<SymbolicTree> tree;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& what) {
    throw ParseError("descriptor line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    std::istringstream words(text);
    std::string key;
    words >> key;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    if (key == "alphabet") {
      if (rest == "binary") alphabet = Alphabet::Binary;
      else if (rest == "omega") alphabet = Alphabet::Omega;
      else fail("unknown alphabet '" + rest + "'");
    } else if (key == "pruned") {
      if (rest != "yes" && rest != "no") fail("pruned must be yes or no");
      pruned = rest == "yes";
    } else if (key == "window") {
      try {
        window = static_cast<Symbol>(std::stoul(rest));
      } catch (const std::exception&) {
        fail("bad window '" + rest + "'");
      }
    } else if (key == "weights") {
      if (rest != "none") fail("weights accepts only 'none'");
      drop_weights = true;
    } else if (key == "rule") {
      if (tree) fail("more than one rule");
      const auto space = rest.find(' ');
      const std::string kind = rest.substr(0, space);
      const std::string arg = space == std::string::npos ? "" : trim(rest.substr(space));
      try {
        if (kind == "avoid") {
          std::vector<Node> nodes;
          for (const std::string& n : split(arg, ',')) nodes.push_back(parse_node(n, Alphabet::Binary));
          tree = avoid_tree(std::move(nodes));
        } else if (kind == "catalog") {
          tree = catalog_tree(arg);
        } else if (kind == "condition") {
          tree = cond_tree(parse_condition(arg));
        } else {
          fail("unknown rule '" + kind + "'");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!tree) throw ParseError("descriptor has no rule line");
  if (alphabet && *alphabet != tree->alphabet()) throw ParseError("descriptor alphabet does not match its rule");
  SymbolicTree out = *tree;
  if (!pruned) out = SymbolicTree(out.alphabet(), out.membership(), false).with_name(out.name());
  else if (drop_weights && out.has_weights()) out = out.without_weights();
  if (window) {
    if (out.alphabet() != Alphabet::Omega) throw ParseError("window applies to omega trees only");
    const Symbol w = *window;
    out = out.with_symbol_window([w](std::size_t) { return w; });
  }
  return out;
}

SymbolicTree load_tree(std::string_view source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.substr(0, prefix.size()) == prefix) return catalog_tree(source.substr(prefix.size()));
  std::ifstream in{std::string(source)};
  if (!in) throw InvalidArgument("cannot open tree descriptor '" + std::string(source) + "'");
  return parse_descriptor(in);
}

}  // namespace cantor
