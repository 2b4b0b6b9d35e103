#include "cantor/density.hpp"

#include <algorithm>

#include "cantor/condition_syntax.hpp"
#include "cantor/error.hpp"

namespace cantor {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Dense: return "dense";
    case VerdictKind::NotDense: return "not-dense";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(const DensityVerdict& v) {
  switch (v.kind) {
    case VerdictKind::Dense: return "dense n_x=" + std::to_string(v.depth);
    case VerdictKind::NotDense: {
      std::string out = "not-dense";
      if (v.witness) out += " witness=\"" + to_string(*v.witness) + "\"";
      if (v.pattern) {
        out += " n≡" + std::to_string(v.pattern->residue) + " mod " + std::to_string(v.pattern->modulus) +
               " n>=" + std::to_string(v.pattern->start);
      }
      return out;
    }
    case VerdictKind::Unknown: return "unknown depth=" + std::to_string(v.depth);
  }
  return "?";
}

DensityVerdict strongly_linked_density(const ForcingCondition& c, const Node& u) {
  if (!is_strongly_linked(c)) {
    throw NotStronglyLinkedFamily(std::string(to_string(family(c))) + " conditions are not strongly linked");
  }
  DensityVerdict v;
  v.depth = u.length();
  if (!cond_member(c, u)) {
    std::size_t exit = 0;
    while (cond_member(c, u.prefix(exit))) ++exit;
    v.kind = VerdictKind::NotDense;
    v.witness = top_condition(family(c));
    v.pattern = NPattern{1, 0, exit};
    v.detail = "x↾" + std::to_string(exit) + " leaves the tree, so every shifted cone misses it";
    return v;
  }
  const Node s = *cond_stem(c);
  if (!s.is_prefix_of(u)) {
    v.detail = "u lies strictly below the stem";
    return v;
  }
  // Any S with stem u meets c; the family's top condition shifted to u is the
  // weakest such S.
  const MeetResult m = strongly_linked_meet(c, cond_shift(u, top_condition(family(c))));
  if (!m.meet) {
    v.detail = "meet with the shifted top condition failed";
    return v;
  }
  v.kind = VerdictKind::Dense;
  v.depth = s.length();
  return v;
}

TargetSet catalog_target(std::string_view name) {
  if (name == "A-triple-ones") {
    return {catalog_tree("B-triple-ones-complement"), SetPresentation::OpenComplement, "A-triple-ones"};
  }
  CatalogEntry e = catalog_entry(name);
  return {e.tree, e.presentation, e.name};
}

Node Point::restrict(std::size_t n) const {
  if (n <= prefix.length()) return prefix.prefix(n);
  std::vector<Symbol> out = prefix.symbols();
  while (out.size() < n) out.push_back(period.empty() ? 0 : period[(out.size() - prefix.length()) % period.length()]);
  return Node(std::move(out));
}

bool Point::all_zero() const {
  auto zero = [](const Node& n) { return std::all_of(n.symbols().begin(), n.symbols().end(), [](Symbol s) { return s == 0; }); };
  return zero(prefix) && zero(period);
}

namespace {

// Every node of σ_{x↾n}(W) up to length n+extra satisfies `ok`.
bool shifted_nodes_all(const SymbolicTree& witness, const Node& xn, std::size_t extra,
                       const std::function<bool(const Node&)>& ok) {
  const SymbolicTree shifted = shift_tree(xn, witness);
  for (const Node& t : enumerate_nodes(shifted, xn.length() + extra))
    if (t.length() > xn.length() && !ok(t)) return false;
  return true;
}

DensityVerdict not_dense(SymbolicTree witness, std::size_t start, std::string detail) {
  DensityVerdict v;
  v.kind = VerdictKind::NotDense;
  v.witness = RandomCond{std::move(witness)};
  v.pattern = NPattern{1, 0, start};
  v.detail = std::move(detail);
  return v;
}

}  // namespace

DensityVerdict null_density_test(const TargetSet& target, const Point& x, std::size_t horizon) {
  const SymbolicTree& T = target.tree;
  if (T.alphabet() != Alphabet::Binary) throw AlphabetMismatch("null density needs a binary target");
  if (!x.prefix.fits(Alphabet::Binary) || !x.period.fits(Alphabet::Binary)) {
    throw AlphabetMismatch("the point must be a binary sequence");
  }
  const bool open = target.presentation == SetPresentation::OpenComplement;
  std::vector<Rational> rho;
  if (T.has_weights()) {
    for (std::size_t n = 0; n <= horizon; ++n) {
      const Node xn = x.restrict(n);
      const Rational w = T.contains(xn) ? T.weight(xn) : Rational(0);
      rho.push_back(open ? Rational(1 - w) : w);
    }
  }
  auto finish = [&](DensityVerdict v) {
    v.rho = rho;
    if (v.kind == VerdictKind::Unknown) v.depth = horizon;
    return v;
  };
  auto tail_above_half = [&](std::size_t m) {
    for (std::size_t n = m; n < rho.size(); ++n)
      if (rho[n] <= Rational(1, 2)) return false;
    return true;
  };
  const SymbolicTree full = catalog_tree("full");

  // Closed forms for the sets B and A at 0^ω.
  if (x.all_zero() && target.name == "B-triple-ones-complement" && !open) {
    DensityVerdict v;
    v.kind = VerdictKind::Dense;
    v.depth = 0;
    v.detail = "ρ_n = 3/4 for all n";
    const bool matches = std::all_of(rho.begin(), rho.end(), [](const Rational& r) { return r == Rational(3, 4); });
    if (matches && tail_above_half(0)) return finish(v);
  }
  if (x.all_zero() && target.name == "A-triple-ones" && open) {
    bool ok = true;
    for (std::size_t n = 0; n <= horizon && ok; ++n)
      ok = shifted_nodes_all(T, x.restrict(n), 3, [&](const Node& t) { return T.contains(t); });
    if (ok) return finish(not_dense(T, 0, "μ(B) = 3/4 and σ_{0^n}(B) ∩ A = ∅ for all n"));
  }

  for (std::size_t m = 0; m <= horizon; ++m) {
    const Node xm = x.restrict(m);
    const bool out = !T.contains(xm);
    const bool cone = !out && T.full_cone(xm);
    if (!out && !cone) continue;
    // Inside the set from x↾m on: ρ_n = 1 for n ≥ m.
    if ((cone && !open) || (out && open)) {
      if (!rho.empty() && !tail_above_half(m)) break;
      DensityVerdict v;
      v.kind = VerdictKind::Dense;
      v.depth = m;
      v.detail = "N_{x↾" + std::to_string(m) + "} lies inside the set";
      return finish(v);
    }
    // Outside the set from x↾m on: the full space shifted to x↾n misses it.
    return finish(not_dense(full, m, "N_{x↾" + std::to_string(m) + "} is disjoint from the set"));
  }
  DensityVerdict v;
  v.detail = "no stabilization witness within the horizon";
  return finish(v);
}

}  // namespace cantor
