#include "cantor/rational.hpp"

#include <cctype>

#include "cantor/error.hpp"

namespace cantor {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Count parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  Count value(std::string(s), 10);
  return negative ? Count(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Count num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    Count den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    Count whole(std::string(int_part), 10);
    Count scale = 1;
    Count frac = 0;
    if (!frac_part.empty()) {
      frac = Count(std::string(frac_part), 10);
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    }
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Count pow2_count(unsigned long exponent) {
  Count c;
  mpz_ui_pow_ui(c.get_mpz_t(), 2, exponent);
  return c;
}

Rational pow2(long exponent) {
  if (exponent >= 0) return Rational(pow2_count(static_cast<unsigned long>(exponent)));
  return Rational(Count(1), pow2_count(static_cast<unsigned long>(-exponent)));
}

Rational dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("dyadic_between: empty interval");
  for (unsigned long m = 0;; ++m) {
    Count den = pow2_count(m);
    Rational scaled = lo * den;
    Count k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    k += 1;
    Rational candidate(k, den);
    candidate.canonicalize();
    if (candidate < hi) return candidate;
  }
}

}  // namespace cantor
