#include "ctlen/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ctlen/errors.hpp"

namespace ctlen {
namespace {

int sign_pow(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  std::map<unsigned, unsigned> mult;
  for (unsigned part : parts_) {
    if (part == 0) throw InputError("Partition: parts must be positive");
    weight_ += part;
    ++mult[part];
  }
  for (const auto& [i, mi] : mult) {
    Integer ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), i, mi);
    z_ *= ipow * factorial(mi);
  }
  eps_ = sign_pow(static_cast<long>(weight_) - static_cast<long>(parts_.size()));
}

unsigned Partition::multiplicity(unsigned i) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<Partition> partitions_of(unsigned n, unsigned cap) {
  if (n > cap)
    throw InputError("partitions_of: n = " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in reverse-lexicographic order: strip trailing 1s, decrement the
  // last part above 1, then refill greedily with copies of the new value.
  std::vector<unsigned> a{n};
  while (true) {
    out.emplace_back(a);
    unsigned ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    const unsigned v = --a.back();
    unsigned rest = ones + 1;
    while (rest > v) {
      a.push_back(v);
      rest -= v;
    }
    if (rest > 0) a.push_back(rest);
  }
  return out;
}

Rational elementary_from_power(unsigned n, std::span<const Rational> p) {
  if (p.size() < n)
    throw InputError("elementary_from_power: need " + std::to_string(n) + " power sums, got " +
                     std::to_string(p.size()));
  Rational e = 0;
  for (const Partition& lambda : partitions_of(n)) {
    Rational term = lambda.power_product(p) / Rational(lambda.z());
    if (lambda.eps() < 0) term = -term;
    e += term;
  }
  return e;
}

bool newton_check(unsigned n, std::span<const Rational> e, std::span<const Rational> p) {
  if (n == 0 || e.size() < n + 1 || p.size() < n) return false;
  Rational rhs = 0;
  for (unsigned r = 1; r <= n; ++r) {
    Rational term = p[r - 1] * e[n - r];
    rhs += (r % 2 == 1) ? term : Rational(-term);
  }
  return Rational(n) * e[n] == rhs;
}

std::vector<Rational> elementary_by_newton(unsigned n, std::span<const Rational> p) {
  if (p.size() < n) throw InputError("elementary_by_newton: insufficient power sums");
  std::vector<Rational> e(n + 1, 0);
  e[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (unsigned r = 1; r <= k; ++r) {
      Rational term = p[r - 1] * e[k - r];
      acc += (r % 2 == 1) ? term : Rational(-term);
    }
    e[k] = acc / k;
  }
  return e;
}

std::vector<Integer> elementary_from_roots(std::span<const Integer> roots) {
  std::vector<Integer> e(roots.size() + 1, 0);
  e[0] = 1;
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (std::size_t i = k + 1; i >= 1; --i) e[i] += roots[k] * e[i - 1];
  return e;
}

std::vector<Integer> power_sums_of_roots(std::span<const Integer> roots, unsigned count) {
  std::vector<Integer> p(count, 0);
  for (const Integer& mu : roots) {
    Integer pw = 1;
    for (unsigned k = 0; k < count; ++k) {
      pw *= mu;
      p[k] += pw;
    }
  }
  return p;
}

ReciprocalPoly::ReciprocalPoly(IntPolynomial q) : q_(std::move(q)) {
  const int d = q_.degree();
  if (d <= 0 || d % 2 != 0)
    throw InputError("ReciprocalPoly: degree must be even and positive, got " + std::to_string(d));
  if (!q_.is_monic()) throw InputError("ReciprocalPoly: polynomial must be monic");
  for (int i = 0; i <= d; ++i)
    if (q_.coefficient(i) != q_.coefficient(d - i))
      throw InputError("ReciprocalPoly: coefficients are not palindromic: " + q_.to_string());
}

ReciprocalPoly ReciprocalPoly::from_half_elementary(unsigned degree,
                                                    std::span<const Integer> half) {
  if (degree == 0 || degree % 2 != 0 || half.size() != degree / 2)
    throw InputError("from_half_elementary: need N/2 values for even N");
  std::vector<Integer> c(degree + 1, 0);
  auto set_e = [&](unsigned i, const Integer& e) {
    c[degree - i] = (i % 2 == 0) ? e : Integer(-e);
  };
  set_e(0, 1);
  set_e(degree, 1);
  for (unsigned i = 1; i <= degree / 2; ++i) {
    set_e(i, half[i - 1]);
    set_e(degree - i, half[i - 1]);
  }
  return ReciprocalPoly(IntPolynomial(std::move(c)));
}

Integer ReciprocalPoly::elementary(unsigned i) const {
  const unsigned n = degree();
  if (i > n) return 0;
  Integer c = q_.coefficient(n - i);
  return (i % 2 == 0) ? c : Integer(-c);
}

std::vector<Integer> power_from_coefficients(const IntPolynomial& monic, unsigned count) {
  if (!monic.is_monic()) throw InputError("power_from_coefficients: polynomial must be monic");
  const unsigned n = static_cast<unsigned>(monic.degree());
  // Signed elementary values with the Newton sign folded in: s_i = (-1)^{i-1} e_i
  // = -coefficient of x^{n-i}.
  std::vector<Integer> s(n + 1, 0);
  for (unsigned i = 1; i <= n; ++i) s[i] = -monic.coefficient(n - i);

  std::vector<Integer> p(count + 1, 0);
  for (unsigned k = 1; k <= count; ++k) {
    Integer acc = 0;
    for (unsigned i = 1; i < k && i <= n; ++i) acc += s[i] * p[k - i];
    if (k <= n) acc += s[k] * k;
    p[k] = std::move(acc);
  }
  p.erase(p.begin());
  return p;
}

std::vector<Integer> power_from_coefficients(const ReciprocalPoly& q, unsigned count) {
  return power_from_coefficients(q.polynomial(), count);
}

PNext p_next(unsigned n_vars, std::span<const Rational> p) {
  if (n_vars == 0 || p.size() < n_vars)
    throw InputError("p_next: need p_1..p_N for N >= 1");
  const unsigned n = n_vars;
  PNext out;

  for (unsigned r = 1; r <= n; ++r) {
    for (const Partition& lambda : partitions_of(n + 1 - r)) {
      Rational term = lambda.power_product(p) * p[r - 1] / Rational(lambda.z());
      if (sign_pow(2L * n + 1 - static_cast<long>(lambda.length())) < 0) term = -term;
      out.formula += term;
    }
  }

  // (N+1) e_{N+1} = sum_{r=1}^{N+1} (-1)^{r-1} p_r e_{N+1-r} with e_{N+1} = 0.
  const std::vector<Rational> e = elementary_by_newton(n, p);
  Rational rest = 0;
  for (unsigned r = 1; r <= n; ++r) {
    Rational term = p[r - 1] * e[n + 1 - r];
    rest += (r % 2 == 1) ? term : Rational(-term);
  }
  // (-1)^N p_{N+1} + rest = 0
  out.newton = (n % 2 == 0) ? Rational(-rest) : rest;
  return out;
}

Rational coefficient_bound(unsigned n, const Rational& delta) {
  if (delta < 0) throw InputError("coefficient_bound: delta must be nonnegative");
  Rational total = 0;
  for (const Partition& lambda : partitions_of(n)) {
    Rational dpow = 1;
    for (std::size_t j = 0; j < lambda.length(); ++j) dpow *= delta;
    total += dpow / Rational(lambda.z());
  }
  return total;
}

std::vector<ReciprocalPoly> enumerate_bounded_reciprocal(unsigned degree, const Integer& delta) {
  if (degree == 0 || degree % 2 != 0)
    throw InputError("enumerate_bounded_reciprocal: degree must be even and positive");
  if (degree > kMaxEnumerationDegree)
    throw InputError("enumerate_bounded_reciprocal: degree " + std::to_string(degree) +
                     " exceeds the supported maximum " + std::to_string(kMaxEnumerationDegree));
  if (delta < 0) throw InputError("enumerate_bounded_reciprocal: delta must be nonnegative");

  const unsigned half = degree / 2;
  const unsigned window = degree * (degree + 1);
  std::vector<Integer> box(half);
  for (unsigned i = 1; i <= half; ++i) {
    Rational b = coefficient_bound(i, Rational(delta));
    mpz_fdiv_q(box[i - 1].get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  }

  std::vector<ReciprocalPoly> out;
  std::vector<Integer> e(half);
  for (unsigned i = 0; i < half; ++i) e[i] = -box[i];

  // Signed Newton coefficients s_i = (-1)^{i-1} e_i for the full palindrome.
  std::vector<Integer> s(degree + 1, 0);
  std::vector<Integer> p(window + 1, 0);
  while (true) {
    auto e_full = [&](unsigned i) -> Integer {
      if (i == 0 || i == degree) return 1;
      return e[(i <= half ? i : degree - i) - 1];
    };
    for (unsigned i = 1; i <= degree; ++i) s[i] = (i % 2 == 1) ? e_full(i) : Integer(-e_full(i));

    bool ok = true;
    for (unsigned k = 1; k <= window && ok; ++k) {
      Integer acc = 0;
      for (unsigned i = 1; i < k && i <= degree; ++i) acc += s[i] * p[k - i];
      if (k <= degree) acc += s[k] * k;
      if (abs(acc) > delta) ok = false;
      p[k] = std::move(acc);
    }
    if (ok) out.push_back(ReciprocalPoly::from_half_elementary(degree, e));

    // Odometer over the coefficient box.
    unsigned idx = 0;
    while (idx < half && e[idx] == box[idx]) {
      e[idx] = -box[idx];
      ++idx;
    }
    if (idx == half) break;
    ++e[idx];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctlen
