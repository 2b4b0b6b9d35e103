#include "cantor/node.hpp"

#include <algorithm>
#include <charconv>

#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(Alphabet alphabet) {
  return alphabet == Alphabet::Binary ? "binary" : "omega";
}

Node Node::child(Symbol s) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + 1);
  out = symbols_;
  out.push_back(s);
  return Node(std::move(out));
}

Node Node::prefix(std::size_t n) const {
  if (n >= symbols_.size()) return *this;
  return Node(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Node Node::drop(std::size_t n) const {
  if (n >= symbols_.size()) return Node{};
  return Node(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(n), symbols_.end()));
}

bool Node::is_prefix_of(const Node& other) const noexcept {
  if (symbols_.size() > other.symbols_.size()) return false;
  return std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
}

bool Node::fits(Alphabet alphabet) const noexcept {
  if (alphabet == Alphabet::Omega) return true;
  return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s <= 1; });
}

std::strong_ordering operator<=>(const Node& a, const Node& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(),
                                                b.symbols_.end());
}

Node concat(const Node& s, const Node& t) {
  std::vector<Symbol> out;
  out.reserve(s.length() + t.length());
  out.insert(out.end(), s.symbols().begin(), s.symbols().end());
  out.insert(out.end(), t.symbols().begin(), t.symbols().end());
  return Node(std::move(out));
}

bool comparable(const Node& a, const Node& b) noexcept { return a.is_prefix_of(b) || b.is_prefix_of(a); }

Node common_prefix(const Node& a, const Node& b) {
  std::size_t n = 0;
  while (n < a.length() && n < b.length() && a[n] == b[n]) ++n;
  return a.prefix(n);
}

Node repeat(Symbol s, std::size_t n) { return Node(std::vector<Symbol>(n, s)); }

std::string to_string(const Node& node, Alphabet alphabet) {
  std::string out;
  if (alphabet == Alphabet::Binary && node.fits(Alphabet::Binary)) {
    for (Symbol s : node.symbols()) out.push_back(s ? '1' : '0');
    return out;
  }
  for (std::size_t i = 0; i < node.length(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(node[i]);
  }
  return out;
}

Node parse_node(std::string_view text, Alphabet alphabet) {
  if (text.empty() || text == "-") return Node{};
  std::vector<Symbol> symbols;
  bool has_comma = text.find(',') != std::string_view::npos;
  if (alphabet == Alphabet::Binary && !has_comma) {
    for (char c : text) {
      if (c != '0' && c != '1') throw ParseError("bad binary node '" + std::string(text) + "'");
      symbols.push_back(c == '1' ? 1 : 0);
    }
    return Node(std::move(symbols));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ParseError("bad node symbol '" + std::string(part) + "' in '" + std::string(text) + "'");
    }
    symbols.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  Node node(std::move(symbols));
  if (!node.fits(alphabet)) throw AlphabetMismatch("node '" + std::string(text) + "' is not binary");
  return node;
}

std::size_t NodeHash::operator()(const Node& n) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : n.symbols()) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ n.length();
}

}  // namespace cantor
