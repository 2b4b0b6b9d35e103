#include "cantor/rule.hpp"

#include <algorithm>
#include <charconv>

#include "cantor/error.hpp"

namespace cantor {

Rule::Rule(std::vector<Value> head, Value intercept, Value slope)
    : head_(std::move(head)), intercept_(intercept), slope_(slope) {
  normalize();
}

void Rule::normalize() {
  // Fold trailing head values that already lie on the tail line.
  while (!head_.empty() && intercept_ >= slope_ && head_.back() == intercept_ - slope_) {
    head_.pop_back();
    intercept_ -= slope_;
  }
}

Rule::Value Rule::operator()(std::size_t n) const {
  if (n < head_.size()) return head_[n];
  return intercept_ + slope_ * static_cast<Value>(n - head_.size());
}

Rule Rule::delayed(std::size_t m) const {
  std::vector<Value> head(m, 0);
  head.insert(head.end(), head_.begin(), head_.end());
  return Rule(std::move(head), intercept_, slope_);
}

Rule Rule::dropped(std::size_t m) const {
  if (m <= head_.size()) return Rule(std::vector<Value>(head_.begin() + static_cast<long>(m), head_.end()), intercept_, slope_);
  return Rule({}, (*this)(m), slope_);
}

Rule Rule::masked_below(std::size_t m) const {
  std::vector<Value> head(std::max(m, head_.size()));
  for (std::size_t n = 0; n < head.size(); ++n) head[n] = n < m ? 0 : (*this)(n);
  return Rule(std::move(head), (*this)(head.size()), slope_);
}

Rule max(const Rule& f, const Rule& g) {
  // Past `start` both are affine; find where the steeper tail takes over for good.
  const std::size_t start = std::max(f.head().size(), g.head().size());
  const Rule& steep = f.slope() > g.slope() || (f.slope() == g.slope() && f(start) >= g(start)) ? f : g;
  const Rule& flat = &steep == &f ? g : f;
  std::size_t cross = start;
  if (steep(start) < flat(start)) {
    const Rule::Value gap = flat(start) - steep(start);
    const Rule::Value step = steep.slope() - flat.slope();
    cross = start + static_cast<std::size_t>((gap + step - 1) / step);
  }
  std::vector<Rule::Value> head(cross);
  for (std::size_t n = 0; n < cross; ++n) head[n] = std::max(f(n), g(n));
  return Rule(std::move(head), steep(cross), steep.slope());
}

std::string to_string(const Rule& rule) {
  std::string tail = rule.slope() == 0 ? "const:" + std::to_string(rule.intercept())
                                       : "affine:" + std::to_string(rule.intercept()) + "," + std::to_string(rule.slope());
  if (rule.head().empty()) return tail;
  std::string out = "seq:";
  for (std::size_t k = 0; k < rule.head().size(); ++k) out += (k ? "," : "") + std::to_string(rule.head()[k]);
  return out + ";" + tail;
}

namespace {

Rule::Value parse_value(std::string_view text) {
  Rule::Value v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError("expected a natural number in rule, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<Rule::Value> parse_values(std::string_view text) {
  std::vector<Rule::Value> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_value(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Rule parse_rule(std::string_view text) {
  std::vector<Rule::Value> head;
  if (text.starts_with("seq:")) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("seq rule needs a ';const:' or ';affine:' tail");
    head = parse_values(text.substr(4, semi - 4));
    text.remove_prefix(semi + 1);
  }
  if (text.starts_with("const:")) return Rule(std::move(head), parse_value(text.substr(6)), 0);
  if (text.starts_with("affine:")) {
    const std::vector<Rule::Value> cs = parse_values(text.substr(7));
    if (cs.size() != 2) throw ParseError("affine rule needs intercept,slope");
    return Rule(std::move(head), cs[0], cs[1]);
  }
  throw ParseError("unknown rule syntax '" + std::string(text) + "'");
}

}  // namespace cantor
