#pragma once

// Partitions and the power-sum / elementary symmetric function identities
// used to show that bounded power sums force bounded coefficients for monic
// reciprocal polynomials. All arithmetic is exact; roots are never computed.

#include <cstddef>
#include <span>
#include <vector>

#include "ctlen/numeric.hpp"
#include "ctlen/polynomial.hpp"

namespace ctlen {

class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into weakly decreasing order; all must be >= 1.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  /// Number of parts equal to i.
  unsigned multiplicity(unsigned i) const;

  /// prod_i i^{m_i} m_i!
  const Integer& z() const { return z_; }
  /// (-1)^{|lambda| - l(lambda)}
  int eps() const { return eps_; }

  /// prod_j p[lambda_j - 1]
  template <typename T>
  T power_product(std::span<const T> p) const {
    T acc = 1;
    for (unsigned part : parts_) acc *= p[part - 1];
    return acc;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
  Integer z_ = 1;
  int eps_ = 1;
};

inline constexpr unsigned kDefaultPartitionCap = 30;

/// Partitions of n in reverse-lexicographic order: (n), (n-1, 1), ..., (1^n).
std::vector<Partition> partitions_of(unsigned n, unsigned cap = kDefaultPartitionCap);

/// e_n = sum_{|lambda| = n} eps_lambda z_lambda^{-1} p_lambda.
/// p holds p_1..p_k with k >= n.
Rational elementary_from_power(unsigned n, std::span<const Rational> p);

/// n e_n == sum_{r=1}^{n} (-1)^{r-1} p_r e_{n-r}. e holds e_0..e_n, p holds p_1..p_n.
bool newton_check(unsigned n, std::span<const Rational> e, std::span<const Rational> p);

/// Elementary symmetric values e_0..e_n from power sums via Newton's recurrence.
std::vector<Rational> elementary_by_newton(unsigned n, std::span<const Rational> p);

/// e_0..e_N of a multiset by expanding prod (1 + mu_i t) one factor at a time.
std::vector<Integer> elementary_from_roots(std::span<const Integer> roots);

/// p_1..p_K of a multiset by direct powering.
std::vector<Integer> power_sums_of_roots(std::span<const Integer> roots, unsigned count);

/// Monic integer polynomial with palindromic coefficients and even degree.
class ReciprocalPoly {
 public:
  /// Throws InputError unless monic, palindromic and of even positive degree.
  explicit ReciprocalPoly(IntPolynomial q);

  /// Builds x^N - e_1 x^{N-1} + e_2 x^{N-2} - ... from e_1..e_{N/2}, mirrored.
  static ReciprocalPoly from_half_elementary(unsigned degree, std::span<const Integer> half);

  const IntPolynomial& polynomial() const { return q_; }
  unsigned degree() const { return static_cast<unsigned>(q_.degree()); }
  /// e_i = (-1)^i * coefficient of x^{N-i}.
  Integer elementary(unsigned i) const;

  friend bool operator==(const ReciprocalPoly&, const ReciprocalPoly&) = default;
  /// Lexicographic on coefficients, lowest degree first.
  friend bool operator<(const ReciprocalPoly& a, const ReciprocalPoly& b) {
    return a.q_.coefficients() < b.q_.coefficients();
  }

 private:
  IntPolynomial q_;
};

/// Power sums p_1..p_K of the roots of a monic integer polynomial, from its
/// coefficients: Newton's identities up to the degree, then the linear
/// recurrence given by the polynomial.
std::vector<Integer> power_from_coefficients(const IntPolynomial& monic, unsigned count);
std::vector<Integer> power_from_coefficients(const ReciprocalPoly& q, unsigned count);

struct PNext {
  /// Value of the double sum over r and |lambda| = N + 1 - r with sign
  /// (-1)^{2N+1-l(lambda)}.
  Rational formula;
  /// Value from Newton's recurrence with e_{N+1} = 0.
  Rational newton;
  bool agree() const { return formula == newton; }
};

/// p_{N+1} of an N-element multiset from p_1..p_N, by both routes.
PNext p_next(unsigned n_vars, std::span<const Rational> p);

/// sum_{|lambda| = n} z_lambda^{-1} delta^{l(lambda)}; bounds |e_n| whenever
/// |p_k| <= delta for k <= n.
Rational coefficient_bound(unsigned n, const Rational& delta);

inline constexpr unsigned kMaxEnumerationDegree = 6;

/// All monic reciprocal integer polynomials of even degree N <= 6 whose root
/// power sums satisfy |p_k| <= delta for every k <= N(N+1), sorted by
/// coefficient vector.
std::vector<ReciprocalPoly> enumerate_bounded_reciprocal(unsigned degree, const Integer& delta);

}  // namespace ctlen
