#include "cantor/natset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(SetFamily family) {
  switch (family) {
    case SetFamily::Frechet: return "frechet";
    case SetFamily::Infinite: return "infinite";
    case SetFamily::Fixed: return "fixed";
    case SetFamily::Plain: return "plain";
  }
  return "?";
}

NatSet::NatSet() : residues_{true}, family_(SetFamily::Frechet) {}

NatSet::NatSet(std::vector<bool> head, std::vector<bool> residues, SetFamily family)
    : head_(std::move(head)), residues_(std::move(residues)), family_(family) {
  normalize();
}

NatSet NatSet::cofinite_excluding(const std::vector<std::size_t>& excluded) {
  std::size_t top = 0;
  for (std::size_t e : excluded) top = std::max(top, e + 1);
  std::vector<bool> head(top, true);
  for (std::size_t e : excluded) head[e] = false;
  return NatSet(std::move(head), {true}, SetFamily::Frechet);
}

NatSet NatSet::periodic(std::size_t modulus, const std::vector<std::size_t>& residues, SetFamily family,
                        std::vector<bool> head) {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  std::vector<bool> mask(modulus, false);
  for (std::size_t r : residues) {
    if (r >= modulus) throw InvalidArgument("residue " + std::to_string(r) + " not below modulus");
    mask[r] = true;
  }
  if (family != SetFamily::Plain && std::none_of(mask.begin(), mask.end(), [](bool b) { return b; })) {
    throw InvalidArgument("periodic set has no residues and would be finite");
  }
  if (family == SetFamily::Frechet && !std::all_of(mask.begin(), mask.end(), [](bool b) { return b; })) {
    throw InvalidArgument("a member of the Frechet filter must be cofinite");
  }
  return NatSet(std::move(head), std::move(mask), family);
}

void NatSet::normalize() {
  // Shrink the period to its least divisor, then trim head bits that agree
  // with the periodic part.
  const std::size_t M = residues_.size();
  for (std::size_t d = 1; d < M; ++d) {
    if (M % d != 0) continue;
    bool ok = true;
    for (std::size_t r = 0; r < M && ok; ++r) ok = residues_[r] == residues_[r % d];
    if (ok) {
      residues_.resize(d);
      break;
    }
  }
  while (!head_.empty() && head_.back() == residues_[(head_.size() - 1) % residues_.size()]) head_.pop_back();
}

bool NatSet::infinite() const {
  return std::any_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool NatSet::contains(std::size_t n) const {
  return n < head_.size() ? static_cast<bool>(head_[n]) : static_cast<bool>(residues_[n % residues_.size()]);
}

std::size_t NatSet::next_member(std::size_t from) const {
  if (!infinite() && from >= head_.size()) throw InvalidArgument("finite set has no member past its head");
  std::size_t n = from;
  while (!contains(n)) ++n;
  return n;
}

NatSet NatSet::shifted(std::size_t m) const {
  const std::size_t M = residues_.size();
  std::vector<bool> head(m + head_.size(), false);
  for (std::size_t k = 0; k < head_.size(); ++k) head[m + k] = head_[k];
  std::vector<bool> res(M);
  for (std::size_t r = 0; r < M; ++r) res[(r + m) % M] = residues_[r];
  return NatSet(std::move(head), std::move(res), family_);
}

NatSet NatSet::dropped(std::size_t m) const {
  const std::size_t M = residues_.size();
  std::vector<bool> head;
  for (std::size_t k = m; k < head_.size(); ++k) head.push_back(head_[k]);
  std::vector<bool> res(M);
  for (std::size_t r = 0; r < M; ++r) res[r] = residues_[(r + m) % M];
  return NatSet(std::move(head), std::move(res), family_);
}

NatSet NatSet::intersect(const NatSet& other) const {
  const std::size_t M = std::lcm(residues_.size(), other.residues_.size());
  const std::size_t H = std::max(head_.size(), other.head_.size());
  std::vector<bool> head(H), res(M);
  for (std::size_t n = 0; n < H; ++n) head[n] = contains(n) && other.contains(n);
  for (std::size_t r = 0; r < M; ++r) {
    res[r] = residues_[r % residues_.size()] && other.residues_[r % other.residues_.size()];
  }
  SetFamily family = std::max(family_, other.family_);
  if (family != SetFamily::Plain && std::none_of(res.begin(), res.end(), [](bool b) { return b; })) {
    throw InvalidArgument("intersection of " + to_string(*this) + " and " + to_string(other) + " is finite");
  }
  return NatSet(std::move(head), std::move(res), family);
}

NatSet NatSet::with_head(const std::vector<bool>& bits) const {
  const std::size_t H = std::max(bits.size(), head_.size());
  std::vector<bool> head(H);
  for (std::size_t n = 0; n < H; ++n) head[n] = n < bits.size() ? static_cast<bool>(bits[n]) : contains(n);
  return NatSet(std::move(head), residues_, family_);
}

bool operator==(const NatSet& a, const NatSet& b) {
  return a.family_ == b.family_ && a.head_ == b.head_ && a.residues_ == b.residues_;
}

std::string to_string(const NatSet& set) {
  std::string out;
  auto join = [](const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
    return s;
  };
  if (set.family() == SetFamily::Frechet) {
    std::vector<std::size_t> excluded;
    for (std::size_t n = 0; n < set.head_size(); ++n)
      if (!set.contains(n)) excluded.push_back(n);
    return "frechet-excl:" + join(excluded);
  }
  const std::size_t M = set.modulus();
  std::vector<std::size_t> residues;
  // Residues are read past the head so overridden head bits do not leak in.
  const std::size_t base = (set.head_size() + M - 1) / M * M;
  for (std::size_t r = 0; r < M; ++r)
    if (set.contains(base + r)) residues.push_back(r);
  if (set.family() == SetFamily::Plain && !set.infinite() && set.head_size() == 0) return "none";
  const char* tag = set.family() == SetFamily::Fixed ? "fixed-mod:" : set.family() == SetFamily::Plain ? "plain-mod:" : "mod:";
  out = tag + std::to_string(M) + ":" + join(residues);
  if (set.head_size() > 0) {
    out += "/head:";
    for (std::size_t n = 0; n < set.head_size(); ++n) out += set.contains(n) ? '1' : '0';
  }
  return out;
}

namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError("expected a natural number, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::size_t> parse_list(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_count(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

NatSet parse_natset(std::string_view text) {
  try {
    if (text.starts_with("frechet-excl:")) return NatSet::cofinite_excluding(parse_list(text.substr(13)));
    if (text == "all" || text == "frechet") return NatSet();
    if (text == "none") return NatSet::periodic(1, {}, SetFamily::Plain);
    SetFamily family = SetFamily::Infinite;
    if (text.starts_with("plain-mod:")) {
      family = SetFamily::Plain;
      text.remove_prefix(10);
    } else if (text.starts_with("fixed-mod:")) {
      family = SetFamily::Fixed;
      text.remove_prefix(10);
    } else if (text.starts_with("mod:")) {
      text.remove_prefix(4);
    } else {
      throw ParseError("unknown set syntax '" + std::string(text) + "'");
    }
    std::vector<bool> head;
    if (const std::size_t slash = text.find("/head:"); slash != std::string_view::npos) {
      for (char c : text.substr(slash + 6)) {
        if (c != '0' && c != '1') throw ParseError("head bits must be 0 or 1");
        head.push_back(c == '1');
      }
      text = text.substr(0, slash);
    }
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected mod:M:residues");
    return NatSet::periodic(parse_count(text.substr(0, colon)), parse_list(text.substr(colon + 1)), family,
                            std::move(head));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cantor
