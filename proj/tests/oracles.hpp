#pragma once

// Test-only reference computations. Nothing here calls into the routes it is
// used to check: matrices are multiplied with plain triple loops, elementary
// symmetric values come from subset enumeration, and roots come from a
// floating-point eigen-solve of the companion matrix.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ctlen/exactmat.hpp"
#include "ctlen/numeric.hpp"
#include "ctlen/polynomial.hpp"

namespace oracle {

using ctlen::Integer;
using ctlen::IntMatrix;
using ctlen::Rational;

inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
  std::vector<Integer> c(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c[i * b.cols() + j] += a(i, k) * b(k, j);
  return IntMatrix(a.rows(), b.cols(), std::move(c));
}

inline IntMatrix naive_pow(const IntMatrix& a, unsigned t) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (unsigned i = 0; i < t; ++i) r = naive_mul(r, a);
  return r;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi,
                               double zero_prob = 0.0) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<Integer> e(n * n);
  for (auto& x : e) x = zero(rng) ? 0 : dist(rng);
  return IntMatrix(n, n, std::move(e));
}

/// e_0..e_N by summing products over all k-subsets.
inline std::vector<Integer> elementary_by_subsets(const std::vector<Integer>& roots) {
  const std::size_t n = roots.size();
  std::vector<Integer> e(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Integer prod = 1;
    unsigned bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        prod *= roots[i];
        ++bits;
      }
    e[bits] += prod;
  }
  return e;
}

inline std::vector<Integer> power_sums_direct(const std::vector<Integer>& roots, unsigned k_max) {
  std::vector<Integer> p(k_max, 0);
  for (unsigned k = 1; k <= k_max; ++k)
    for (const Integer& mu : roots) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), mu.get_mpz_t(), k);
      p[k - 1] += pw;
    }
  return p;
}

/// Roots of a monic integer polynomial as eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> numeric_roots(const ctlen::IntPolynomial& q) {
  const int n = q.degree();
  if (n < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -q.coefficient(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

/// Largest real root, polished by Newton steps in long double.
inline double largest_real_root(const ctlen::IntPolynomial& q) {
  double best = -1e300;
  for (const auto& z : numeric_roots(q))
    if (std::abs(z.imag()) < 1e-6 && z.real() > best) best = z.real();
  long double x = best;
  for (int it = 0; it < 50; ++it) {
    long double f = 0, df = 0;
    for (int i = q.degree(); i >= 0; --i) {
      df = df * x + f;
      f = f * x + static_cast<long double>(q.coefficient(i).get_d());
    }
    if (df == 0) break;
    x -= f / df;
  }
  return static_cast<double>(x);
}

/// Smallest positive separation between roots; 0 for repeated roots.
inline double min_root_separation(const std::vector<std::complex<double>>& roots) {
  double sep = 1e300;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
  return sep;
}

}  // namespace oracle
