#include "cantor/catalog.hpp"

#include <charconv>

#include "cantor/error.hpp"

namespace cantor {
namespace {

// Position of the first 1 in a binary node, or its length.
std::size_t leading_zeros(const Node& u) {
  std::size_t m = 0;
  while (m < u.length() && u[m] == 0) ++m;
  return m;
}

// Classifies u against the generators 0^m 111:
//   0 all zeros, 1 ends at the first 1, 2 "…11", 3 "…10…"/"…110…", 4 inside a generator.
int triple_ones_kind(const Node& u) {
  const std::size_t m = leading_zeros(u);
  if (m == u.length()) return 0;
  const std::size_t after = u.length() - m - 1;
  if (after == 0) return 1;
  if (u[m + 1] == 0) return 3;
  if (after == 1) return 2;
  return u[m + 2] == 1 ? 4 : 3;
}

SymbolicTree triple_ones_complement() {
  auto weight = [](const Node& u) -> Rational {
    switch (triple_ones_kind(u)) {
      case 0:
      case 1: return make_rational(3, 4);
      case 2: return make_rational(1, 2);
      case 3: return Rational(1);
      default: return Rational(0);
    }
  };
  return SymbolicTree(Alphabet::Binary, [](const Node& u) { return triple_ones_kind(u) != 4; })
      .with_weights(weight)
      .with_full_cone([](const Node& u) { return triple_ones_kind(u) == 3; })
      .with_name("B-triple-ones-complement");
}

SymbolicTree triple_ones_closure() {
  auto weight = [](const Node& u) -> Rational {
    switch (triple_ones_kind(u)) {
      case 0:
      case 1: return make_rational(1, 4);
      case 2: return make_rational(1, 2);
      case 4: return Rational(1);
      default: return Rational(0);
    }
  };
  return SymbolicTree(Alphabet::Binary, [](const Node& u) { return triple_ones_kind(u) != 3; })
      .with_weights(weight)
      .with_full_cone([](const Node& u) { return triple_ones_kind(u) == 4; })
      .with_name("A-triple-ones");
}

SymbolicTree null_tree(std::string name, std::function<bool(const Node&)> membership) {
  auto rule = std::move(membership);
  return SymbolicTree(Alphabet::Binary, rule)
      .with_weights([](const Node&) { return Rational(0); })
      .with_name(std::move(name));
}

bool power_plus_one(std::size_t i) { return i >= 2 && ((i - 1) & (i - 2)) == 0; }

std::size_t parse_block_count(std::string_view digits) {
  std::size_t k = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || end != digits.data() + digits.size() || k == 0 || k > 12) {
    throw InvalidArgument("fat-cantor block count must be an integer in [1,12]");
  }
  return k;
}

}  // namespace

SymbolicTree fat_cantor_tree(std::size_t blocks) {
  // Block k occupies positions [k(k+3)/2, k(k+3)/2 + k+2).
  struct Scan {
    bool in = true;
    bool full = true;
    Rational weight = 1;
  };
  auto scan = [blocks](const Node& u) {
    Scan out;
    for (std::size_t k = 0; k < blocks; ++k) {
      const std::size_t start = k * (k + 3) / 2, size = k + 2;
      std::size_t seen = 0;
      bool zero = false;
      for (std::size_t p = start; p < start + size && p < u.length(); ++p, ++seen) zero = zero || u[p] == 0;
      if (zero) continue;
      out.full = false;
      if (seen == size) {
        out.in = false;
        out.weight = 0;
        return out;
      }
      out.weight *= 1 - pow2(-static_cast<long>(size - seen));
    }
    return out;
  };
  return SymbolicTree(Alphabet::Binary, [scan](const Node& u) { return scan(u).in; })
      .with_weights([scan](const Node& u) { return scan(u).weight; })
      .with_full_cone([scan](const Node& u) { return scan(u).full; })
      .with_name("fat-cantor-" + std::to_string(blocks));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "full",          "single-branch",     "single-branch-8", "B-triple-ones-complement",
      "A-triple-ones", "fat-cantor",        "fat-cantor-3",    "A-odd-ones",
      "T-powers-plus-one", "A-even-values", "A-diagonal",      "T-shift-diag"};
  return names;
}

CatalogEntry catalog_entry(std::string_view name) {
  const std::string n(name);
  if (n == "full") {
    return {n,
            SymbolicTree(Alphabet::Binary, [](const Node&) { return true; })
                .with_weights([](const Node&) { return Rational(1); })
                .with_full_cone([](const Node&) { return true; })
                .with_name(n),
            SetPresentation::Closed, "the full binary tree"};
  }
  if (n == "single-branch") {
    return {n, null_tree(n, [](const Node& u) { return leading_zeros(u) == u.length(); }), SetPresentation::Closed,
            "the single branch 0^ω"};
  }
  if (n == "single-branch-8") {
    return {n,
            SymbolicTree(
                Alphabet::Binary, [](const Node& u) { return u.length() <= 8 && leading_zeros(u) == u.length(); },
                false)
                .with_name(n),
            SetPresentation::Closed, "0^ω truncated at depth 8"};
  }
  if (n == "B-triple-ones-complement") {
    return {n, triple_ones_complement(), SetPresentation::Closed, "complement of the union of N_{0^m 111}"};
  }
  if (n == "A-triple-ones") {
    return {n, triple_ones_closure(), SetPresentation::Closed, "closure of the union of N_{0^m 111}"};
  }
  if (n == "fat-cantor") return {n, fat_cantor_tree(5).with_name(n), SetPresentation::Closed, "fat Cantor set, 5 blocks"};
  if (n.starts_with("fat-cantor-")) {
    const std::size_t k = parse_block_count(std::string_view(n).substr(11));
    return {n, fat_cantor_tree(k), SetPresentation::Closed, "fat Cantor set, " + std::to_string(k) + " blocks"};
  }
  if (n == "A-odd-ones") {
    return {n,
            null_tree(n,
                      [](const Node& u) {
                        for (std::size_t k = 1; k < u.length(); k += 2)
                          if (u[k] != 1) return false;
                        return true;
                      }),
            SetPresentation::Closed, "f(2n+1) = 1 for all n"};
  }
  if (n == "T-powers-plus-one") {
    return {n,
            null_tree(n,
                      [](const Node& u) {
                        for (std::size_t k = 0; k < u.length(); ++k)
                          if (u[k] == 1 && !power_plus_one(k)) return false;
                        return true;
                      }),
            SetPresentation::Closed, "t(i) = 1 only at i = 2^j+1"};
  }
  if (n == "A-even-values") {
    return {n,
            SymbolicTree(Alphabet::Omega,
                         [](const Node& u) {
                           for (Symbol s : u.symbols())
                             if (s % 2 != 0) return false;
                           return true;
                         })
                .with_symbol_window([](std::size_t) { return Symbol{3}; })
                .with_name(n),
            SetPresentation::Closed, "f(n) even for all n"};
  }
  if (n == "A-diagonal") {
    return {n,
            SymbolicTree(Alphabet::Omega,
                         [](const Node& u) {
                           for (std::size_t k = 0; k < u.length(); ++k)
                             if (u[k] == k) return false;
                           return true;
                         })
                .with_symbol_window([](std::size_t pos) { return static_cast<Symbol>(pos + 2); })
                .with_name(n),
            SetPresentation::OpenComplement, "y(n) = n for some n"};
  }
  if (n == "T-shift-diag") {
    return {n,
            SymbolicTree(Alphabet::Omega,
                         [](const Node& u) {
                           for (std::size_t k = 0; k < u.length(); ++k)
                             if (u[k] < k + 1) return false;
                           return true;
                         })
                .with_symbol_window([](std::size_t pos) { return static_cast<Symbol>(pos + 2); })
                .with_name(n),
            SetPresentation::Closed, "Hechler tree with x(n) = n+1"};
  }
  throw InvalidArgument("unknown catalog name '" + n + "'");
}

SymbolicTree catalog_tree(std::string_view name) { return catalog_entry(name).tree; }

}  // namespace cantor
