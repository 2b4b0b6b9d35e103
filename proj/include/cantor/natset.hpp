#pragma once

// Eventually periodic subsets of ω, tagged with the family they are drawn
// from: the Fréchet filter, [ω]^ω, a single fixed set, or no family at all
// (Plain, the only kind that may be finite).
//
// Syntax:
//   frechet-excl:a,b,…       ω ∖ {a,b,…}
//   mod:M:r1,r2,…            {n : n mod M ∈ {r1,…}}, an element of [ω]^ω
//   fixed-mod:M:r1,…         the same set as the only member of its family
//   plain-mod:M:r1,…         a set outside any family; residues may be empty
//   none                     ∅ (Plain)
// mod, fixed-mod and plain-mod accept a suffix "/head:b0b1…" overriding membership of
// the first positions bit by bit.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

enum class SetFamily { Frechet, Infinite, Fixed, Plain };

std::string_view to_string(SetFamily family);

class NatSet {
 public:
  /// ω as a member of the Fréchet filter.
  NatSet();

  static NatSet cofinite_excluding(const std::vector<std::size_t>& excluded);
  /// Throws InvalidArgument when the periodic part is empty, unless Plain.
  static NatSet periodic(std::size_t modulus, const std::vector<std::size_t>& residues,
                         SetFamily family = SetFamily::Infinite, std::vector<bool> head = {});

  SetFamily family() const noexcept { return family_; }
  bool shift_invariant_family() const noexcept { return family_ != SetFamily::Fixed; }
  bool infinite() const;
  bool contains(std::size_t n) const;
  /// Least member ≥ from.
  std::size_t next_member(std::size_t from) const;

  /// m + N
  NatSet shifted(std::size_t m) const;
  /// N ∖ {0,…,m−1} translated down: {n : m+n ∈ N}
  NatSet dropped(std::size_t m) const;
  /// Same family as the operands when they agree, else the weaker family.
  NatSet intersect(const NatSet& other) const;
  /// Overrides membership of positions 0…bits.size()−1.
  NatSet with_head(const std::vector<bool>& bits) const;

  std::size_t head_size() const noexcept { return head_.size(); }
  std::size_t modulus() const noexcept { return residues_.size(); }

  friend bool operator==(const NatSet& a, const NatSet& b);

 private:
  NatSet(std::vector<bool> head, std::vector<bool> residues, SetFamily family);
  void normalize();

  std::vector<bool> head_;
  std::vector<bool> residues_;
  SetFamily family_;
};

std::string to_string(const NatSet& set);
/// Throws ParseError.
NatSet parse_natset(std::string_view text);

}  // namespace cantor
