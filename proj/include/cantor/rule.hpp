#pragma once

// Total functions ω → ω with a finite head and an affine tail:
//   f(n) = head[n]                              for n < |head|
//   f(n) = intercept + slope·(n − |head|)       otherwise
//
// Syntax: const:c | affine:c,s | seq:v0,v1,…;const:c | seq:v0,…;affine:c,s

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

class Rule {
 public:
  using Value = std::uint64_t;

  Rule() = default;
  Rule(std::vector<Value> head, Value intercept, Value slope);

  static Rule constant(Value c) { return Rule({}, c, 0); }
  static Rule affine(Value c, Value s) { return Rule({}, c, s); }

  Value operator()(std::size_t n) const;

  const std::vector<Value>& head() const noexcept { return head_; }
  Value intercept() const noexcept { return intercept_; }
  Value slope() const noexcept { return slope_; }

  /// g(n) = f(n − m) for n ≥ m and 0 below m.
  Rule delayed(std::size_t m) const;
  /// g(n) = f(m + n)
  Rule dropped(std::size_t m) const;
  /// Zeroes the values at positions below m, where a condition ignores them.
  Rule masked_below(std::size_t m) const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  void normalize();

  std::vector<Value> head_;
  Value intercept_ = 0;
  Value slope_ = 0;
};

/// Pointwise maximum, exact: the tail of the larger slope wins past the
/// crossing point and the values before it move into the head.
Rule max(const Rule& f, const Rule& g);

std::string to_string(const Rule& rule);
/// Throws ParseError.
Rule parse_rule(std::string_view text);

}  // namespace cantor
