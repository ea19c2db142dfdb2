#include "gap/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <utility>

#include "gap/errors.hpp"

namespace gap {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (const char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

mpz_class pow10(unsigned exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// floor(log10(value)) for value > 0.
long decimal_exponent(const mpq_class& value) {
  const long num_digits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 10));
  const long den_digits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 10));
  // sizeinbase may overshoot by one; fix up against exact powers of ten.
  long e = num_digits - den_digits;
  auto ten_to = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<unsigned>(k)))
                  : mpq_class(mpz_class(1), pow10(static_cast<unsigned>(-k)));
  };
  while (ten_to(e) > value) --e;
  while (ten_to(e + 1) <= value) ++e;
  return e;
}

// Round a positive rational to the nearest integer, ties to even.
mpz_class round_half_even(const mpq_class& value) {
  mpz_class quotient;
  mpz_class remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), value.get_num_mpz_t(),
              value.get_den_mpz_t());
  const int c = cmp(mpz_class(2 * remainder), value.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) ++quotient;
  return quotient;
}

void strip_trailing_zeros(std::string& digits) {
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::division_by_zero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(Errc::division_by_zero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(Errc::division_by_zero, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(Errc::parse_error, "denominator must be unsigned: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  const unsigned precision = significant_digits < 1 ? 1U : static_cast<unsigned>(significant_digits);
  if (is_zero()) return "0";

  const mpq_class magnitude = abs(value_);
  long exponent = decimal_exponent(magnitude);

  // Scale so that the integer part holds exactly `precision` digits.
  const long shift = static_cast<long>(precision) - 1 - exponent;
  mpq_class scaled = magnitude;
  if (shift >= 0) {
    scaled *= mpq_class(pow10(static_cast<unsigned>(shift)));
  } else {
    scaled /= mpq_class(pow10(static_cast<unsigned>(-shift)));
  }
  mpz_class mantissa = round_half_even(scaled);
  if (mantissa == pow10(precision)) {
    mantissa /= 10;
    ++exponent;
  }

  std::string digits = mantissa.get_str();  // exactly `precision` digits
  std::string out = sign() < 0 ? "-" : "";

  if (exponent < -4 || exponent >= static_cast<long>(precision)) {
    std::string fraction = digits.substr(1);
    strip_trailing_zeros(fraction);
    out += digits.front();
    if (!fraction.empty()) out += "." + fraction;
    out += exponent < 0 ? "e-" : "e+";
    const long abs_exp = exponent < 0 ? -exponent : exponent;
    if (abs_exp < 10) out += "0";
    out += std::to_string(abs_exp);
    return out;
  }

  std::string integer_part;
  std::string fraction;
  if (exponent >= 0) {
    const auto int_len = static_cast<std::size_t>(exponent) + 1;
    integer_part = digits.substr(0, int_len);
    fraction = digits.substr(int_len);
  } else {
    integer_part = "0";
    fraction = std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  strip_trailing_zeros(fraction);
  out += integer_part;
  if (!fraction.empty()) out += "." + fraction;
  return out;
}

Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return Rational(result);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return Rational(result);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace gap
