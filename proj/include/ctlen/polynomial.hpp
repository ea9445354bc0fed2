#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctlen/numeric.hpp"

namespace ctlen {

/// Integer polynomial, coefficients lowest degree first. Trailing zeros are
/// stripped on construction; the zero polynomial has no coefficients and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(unsigned degree, Integer coefficient = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero past the degree.
  Integer coefficient(std::size_t i) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  /// q(-x) scaled by (-1)^deg so that a monic input stays monic.
  IntPolynomial negate_variable() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a,
                                                     const IntPolynomial& divisor);

}  // namespace ctlen
