#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gap/rational.hpp"

namespace gap {

/// Dense univariate polynomial in x over the rationals, coefficients in
/// ascending degree. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and equality is coefficientwise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& value);
  /// value * x^degree
  static Polynomial monomial(const Rational& value, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Horner evaluation.
  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form such as "1/6 - 3/7*x + 3/7*x^2".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Sparse polynomial in x and y: (i, j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<std::size_t, std::size_t>;

  BivariatePolynomial() = default;

  static BivariatePolynomial monomial(const Rational& value, std::size_t x_degree, std::size_t y_degree);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(std::size_t i, std::size_t j) const;
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(const Rational& x, const Rational& y) const;
  /// Substitute y = 0.
  Polynomial at_y_zero() const;
  /// Substitute x = 0, viewing the result as a polynomial in y.
  Polynomial at_x_zero() const;

  void add_term(const Rational& value, std::size_t i, std::size_t j);

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
    return lhs += rhs;
  }
  friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& p);
  friend BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace gap
