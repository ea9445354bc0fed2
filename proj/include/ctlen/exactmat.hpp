#pragma once

// Dense exact integer matrices and the support/positivity/spectral utilities
// built on them. Indices in SupportSet are 1-based to match the way branch
// and block indices are written everywhere else in the library; matrix
// element access is 0-based.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctlen/numeric.hpp"
#include "ctlen/polynomial.hpp"

namespace ctlen {

class IntMatrix {
 public:
  /// rows x cols zero matrix.
  IntMatrix(std::size_t rows, std::size_t cols);

  /// Row-major entries; entries.size() must equal rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  /// True when this instance is flagged as a nonnegative (transition-type)
  /// matrix. Set by scanning at construction; products inherit the flag
  /// only when both factors carry it.
  bool nonneg() const { return nonneg_; }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Integer> entries() const { return entries_; }
  std::span<const Integer> row(std::size_t i) const {
    return std::span<const Integer>(entries_).subspan(i * cols_, cols_);
  }

  Integer trace() const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool all_positive() const;

  /// 0/1 matrix marking the nonzero entries.
  IntMatrix pattern() const;

  /// Copy with the (i, j) entry replaced; instances are otherwise immutable.
  IntMatrix with_entry(std::size_t i, std::size_t j, Integer value) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  struct Flagged {};
  IntMatrix(Flagged, std::size_t rows, std::size_t cols, std::vector<Integer> entries,
            bool nonneg);

  friend IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
  bool nonneg_;
};

/// Sorted, duplicate-free set of 1-based indices in [1, dim].
class SupportSet {
 public:
  explicit SupportSet(std::size_t dim) : dim_(dim) {}
  SupportSet(std::size_t dim, std::vector<std::size_t> members);

  /// Indices of the nonzero entries of v.
  static SupportSet of_vector(std::span<const Integer> v);
  /// Contiguous range [first, last].
  static SupportSet range(std::size_t dim, std::size_t first, std::size_t last);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t i) const;

  /// Indicator vector (entry 1 on members, 0 elsewhere).
  std::vector<Integer> indicator() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> members_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> mat_vec(const IntMatrix& a, std::span<const Integer> v);

/// Binary exponentiation; a^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned long t);

/// { i : exists j in s with pattern(i, j) != 0 }.
SupportSet support_propagate(const IntMatrix& pattern, const SupportSet& s);

/// Smallest t <= cap with a^t entrywise positive. Works on the boolean
/// pattern, so entry growth is irrelevant.
std::optional<unsigned> positivity_index(const IntMatrix& a, unsigned cap);

/// Wielandt's bound (n-1)^2 + 1 on the primitivity index of an n x n matrix.
unsigned wielandt_bound(std::size_t n);

struct PerronOptions {
  unsigned long max_iterations = 1'000'000;
};

/// Spectral radius of a primitive nonnegative matrix by power iteration from
/// the all-ones vector. Stops once successive Rayleigh quotients differ by
/// less than tol/2 and the residual norm is below tol. Throws ContractError
/// for non-primitive input and for non-convergence within the cap.
double perron_eigenvalue(const IntMatrix& a, double tol, PerronOptions options = {});

inline constexpr std::size_t kDefaultCharPolyCap = 16;

/// det(xI - a) by the Faddeev-LeVerrier trace recurrence. Every division
/// by the step index is exact over the integers.
IntPolynomial char_poly(const IntMatrix& a, std::size_t dim_cap = kDefaultCharPolyCap);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

}  // namespace ctlen
