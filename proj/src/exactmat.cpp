#include "ctlen/exactmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ctlen/errors.hpp"

namespace ctlen {
namespace {

bool scan_nonneg(const std::vector<Integer>& entries) {
  return std::all_of(entries.begin(), entries.end(), [](const Integer& x) { return x >= 0; });
}

void require_square(const IntMatrix& a, const char* op) {
  if (!a.is_square())
    throw InputError(std::string(op) + ": matrix must be square, got " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()));
}

using BoolMatrix = std::vector<char>;

BoolMatrix bool_pattern(const IntMatrix& a) {
  BoolMatrix p(a.rows() * a.cols());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.entries()[k] != 0;
  return p;
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b, std::size_t n) {
  BoolMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] |= b[k * n + j];
    }
  return c;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0), nonneg_(true) {
  if (rows == 0 || cols == 0) throw InputError("IntMatrix: dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("IntMatrix: dimensions must be positive");
  if (entries_.size() != rows * cols)
    throw InputError("IntMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries_.size()));
  nonneg_ = scan_nonneg(entries_);
}

IntMatrix::IntMatrix(Flagged, std::size_t rows, std::size_t cols, std::vector<Integer> entries,
                     bool nonneg)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), nonneg_(nonneg) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw InputError("IntMatrix: dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged row");
    for (long x : r) entries_.emplace_back(x);
  }
  nonneg_ = scan_nonneg(entries_);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id.entries_[i * n + i] = 1;
  return id;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("IntMatrix: empty row list");
  const std::size_t c = rows.front().size();
  std::vector<Integer> e;
  e.reserve(rows.size() * c);
  for (const auto& r : rows) {
    if (r.size() != c) throw InputError("IntMatrix: ragged row");
    e.insert(e.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), c, std::move(e));
}

Integer IntMatrix::trace() const {
  if (!is_square()) throw InputError("trace: matrix must be square");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Integer> e(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
  return IntMatrix(Flagged{}, cols_, rows_, std::move(e), nonneg_);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::all_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x > 0; });
}

IntMatrix IntMatrix::pattern() const {
  std::vector<Integer> e(entries_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = entries_[k] != 0 ? 1 : 0;
  return IntMatrix(Flagged{}, rows_, cols_, std::move(e), true);
}

IntMatrix IntMatrix::with_entry(std::size_t i, std::size_t j, Integer value) const {
  if (i >= rows_ || j >= cols_) throw InputError("with_entry: index out of range");
  std::vector<Integer> e = entries_;
  e[i * cols_ + j] = std::move(value);
  return IntMatrix(rows_, cols_, std::move(e));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

SupportSet::SupportSet(std::size_t dim, std::vector<std::size_t> members)
    : dim_(dim), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 1 || members_.back() > dim_))
    throw InputError("SupportSet: member outside [1, " + std::to_string(dim_) + "]");
}

SupportSet SupportSet::of_vector(std::span<const Integer> v) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m.push_back(i + 1);
  return SupportSet(v.size(), std::move(m));
}

SupportSet SupportSet::range(std::size_t dim, std::size_t first, std::size_t last) {
  std::vector<std::size_t> m;
  for (std::size_t i = first; i <= last; ++i) m.push_back(i);
  return SupportSet(dim, std::move(m));
}

bool SupportSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::vector<Integer> SupportSet::indicator() const {
  std::vector<Integer> v(dim_, 0);
  for (std::size_t i : members_) v[i - 1] = 1;
  return v;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw InputError("mat_mul: dimension mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
  std::vector<Integer> c(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      Integer* crow = &c[i * m];
      for (std::size_t j = 0; j < m; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) mpz_addmul(crow[j].get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return IntMatrix(IntMatrix::Flagged{}, n, m, std::move(c), a.nonneg() && b.nonneg());
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("mat_add: dimension mismatch");
  std::vector<Integer> c(a.entries().begin(), a.entries().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.entries()[k];
  return IntMatrix(IntMatrix::Flagged{}, a.rows(), a.cols(), std::move(c),
                   a.nonneg() && b.nonneg());
}

std::vector<Integer> mat_vec(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw InputError("mat_vec: dimension mismatch");
  std::vector<Integer> out(a.rows(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Integer& aij = a(i, j);
      if (aij != 0) mpz_addmul(out[i].get_mpz_t(), aij.get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long t) {
  require_square(a, "mat_pow");
  IntMatrix result = IntMatrix::identity(a.rows());
  if (t == 0) return result;
  IntMatrix base = a;
  bool have = false;
  while (true) {
    if (t & 1UL) {
      result = have ? mat_mul(result, base) : base;
      have = true;
    }
    t >>= 1;
    if (t == 0) break;
    base = mat_mul(base, base);
  }
  return result;
}

SupportSet support_propagate(const IntMatrix& pattern, const SupportSet& s) {
  require_square(pattern, "support_propagate");
  if (pattern.rows() != s.dim())
    throw InputError("support_propagate: pattern is " + std::to_string(pattern.rows()) +
                     "-dimensional but support lives in dimension " + std::to_string(s.dim()));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pattern.rows(); ++i) {
    for (std::size_t j : s.members()) {
      if (pattern(i, j - 1) != 0) {
        out.push_back(i + 1);
        break;
      }
    }
  }
  return SupportSet(s.dim(), std::move(out));
}

unsigned wielandt_bound(std::size_t n) { return static_cast<unsigned>((n - 1) * (n - 1) + 1); }

std::optional<unsigned> positivity_index(const IntMatrix& a, unsigned cap) {
  require_square(a, "positivity_index");
  if (!a.nonneg()) throw InputError("positivity_index: matrix must be nonnegative");
  const std::size_t n = a.rows();
  const BoolMatrix base = bool_pattern(a);
  BoolMatrix power = base;
  for (unsigned t = 1; t <= cap; ++t) {
    if (std::all_of(power.begin(), power.end(), [](char c) { return c != 0; })) return t;
    if (t < cap) power = bool_mul(power, base, n);
  }
  return std::nullopt;
}

double perron_eigenvalue(const IntMatrix& a, double tol, PerronOptions options) {
  require_square(a, "perron_eigenvalue");
  if (!(tol > 0)) throw InputError("perron_eigenvalue: tolerance must be positive");
  if (!a.nonneg()) throw ContractError("perron_eigenvalue: matrix is not nonnegative");
  if (!positivity_index(a, wielandt_bound(a.rows())))
    throw ContractError("perron_eigenvalue: matrix is not primitive (no positive power within "
                        "Wielandt's bound)");

  const std::size_t n = a.rows();
  std::vector<long double> m(n * n);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.entries()[k].get_d();

  auto apply = [&](const std::vector<long double>& x) {
    std::vector<long double> y(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
    return y;
  };
  auto normalize = [](std::vector<long double>& x) {
    long double s = 0;
    for (long double v : x) s += v * v;
    s = std::sqrt(s);
    for (long double& v : x) v /= s;
  };

  std::vector<long double> x(n, 1.0L);
  normalize(x);
  long double previous = -1;
  for (unsigned long it = 0; it < options.max_iterations; ++it) {
    std::vector<long double> y = apply(x);
    long double rho = 0;
    for (std::size_t i = 0; i < n; ++i) rho += x[i] * y[i];
    long double residual = 0;
    for (std::size_t i = 0; i < n; ++i) residual += (y[i] - rho * x[i]) * (y[i] - rho * x[i]);
    residual = std::sqrt(residual);
    if (it > 0 && std::fabs(rho - previous) < tol / 2 && residual < tol)
      return static_cast<double>(rho);
    previous = rho;
    x = std::move(y);
    normalize(x);
  }
  throw ContractError("perron_eigenvalue: power iteration did not converge within " +
                      std::to_string(options.max_iterations) + " iterations");
}

IntPolynomial char_poly(const IntMatrix& a, std::size_t dim_cap) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  if (n > dim_cap)
    throw InputError("char_poly: dimension " + std::to_string(n) + " exceeds cap " +
                     std::to_string(dim_cap));
  // coefficient c[k] multiplies x^k; c[n] = 1.
  // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<Integer> d(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) d[i * n + i] = c[n - k + 1];
      mk = mat_add(mat_mul(a, mk), IntMatrix(n, n, std::move(d)));
    }
    Integer tr = mat_mul(a, mk).trace();
    Integer q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), k);
    if (r != 0) throw InvariantViolation("char_poly: inexact division in trace recurrence");
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

Integer determinant(const IntMatrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  std::vector<Integer> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace ctlen
