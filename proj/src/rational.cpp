#include "onetri/rational.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace onetri {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) malformed(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) malformed(text);
  if (!int_part.empty() && !all_digits(int_part)) malformed(text);
  if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational value;
  if (exponent >= 0) {
    value = Rational(numerator * scale);
  } else {
    value = Rational(numerator, scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) malformed(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) malformed(text);
    mpz_class p(std::string(num_digits), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) malformed(text);
    if (!num.empty() && num.front() == '-') p = -p;
    Rational value(p, q);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) {
  const double truncated = value.get_d();
  if (!std::isfinite(truncated) || Rational(truncated) == value) return truncated;
  const double outward = std::nextafter(truncated, sgn(value) > 0 ? INFINITY : -INFINITY);
  if (!std::isfinite(outward)) return truncated;
  const Rational below_gap = abs(value - Rational(truncated));
  const Rational above_gap = abs(Rational(outward) - value);
  if (below_gap < above_gap) return truncated;
  if (above_gap < below_gap) return outward;
  return (std::bit_cast<std::uint64_t>(truncated) & 1) == 0 ? truncated : outward;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

}  // namespace onetri
