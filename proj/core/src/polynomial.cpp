#include "gap/polynomial.hpp"

#include <algorithm>

namespace gap {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(const Rational& value, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = value;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    const bool unit = magnitude == Rational(1);
    if (k == 0 || !unit) out += magnitude.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& value, std::size_t x_degree,
                                                  std::size_t y_degree) {
  BivariatePolynomial p;
  p.add_term(value, x_degree, y_degree);
  return p;
}

Rational BivariatePolynomial::coeff(std::size_t i, std::size_t j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(const Rational& value, std::size_t i, std::size_t j) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [exps, c] : terms_) {
    acc += c * pow(x, static_cast<unsigned>(exps.first)) * pow(y, static_cast<unsigned>(exps.second));
  }
  return acc;
}

Polynomial BivariatePolynomial::at_y_zero() const {
  std::vector<Rational> c;
  for (const auto& [exps, value] : terms_) {
    if (exps.second != 0) continue;
    if (c.size() <= exps.first) c.resize(exps.first + 1);
    c[exps.first] = value;
  }
  return Polynomial(std::move(c));
}

Polynomial BivariatePolynomial::at_x_zero() const {
  std::vector<Rational> c;
  for (const auto& [exps, value] : terms_) {
    if (exps.first != 0) continue;
    if (c.size() <= exps.second) c.resize(exps.second + 1);
    c[exps.second] = value;
  }
  return Polynomial(std::move(c));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (const auto& [exps, value] : rhs.terms_) add_term(value, exps.first, exps.second);
  return *this;
}

BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& p) {
  BivariatePolynomial out;
  for (const auto& [exps, value] : p.terms_) out.add_term(s * value, exps.first, exps.second);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
  BivariatePolynomial out;
  for (const auto& [le, lv] : lhs.terms_) {
    for (const auto& [re, rv] : rhs.terms_) out.add_term(lv * rv, le.first + re.first, le.second + re.second);
  }
  return out;
}

}  // namespace gap
