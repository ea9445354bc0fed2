#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ctlen/errors.hpp"
#include "ctlen/homology.hpp"
#include "ctlen/symfun.hpp"
#include "oracles.hpp"

using namespace ctlen;

namespace {

std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

// Random multiset of size 1..8 with entries in [-5, 5].
std::vector<Integer> random_multiset(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 8), entry(-5, 5);
  std::vector<Integer> roots(size(rng));
  for (auto& mu : roots) mu = entry(rng);
  return roots;
}

// prod (x - mu_i), built one linear factor at a time.
IntPolynomial poly_from_roots(const std::vector<Integer>& roots) {
  IntPolynomial q{1};
  for (const Integer& mu : roots) q = q * IntPolynomial(std::vector<Integer>{-mu, 1});
  return q;
}

}  // namespace

TEST_CASE("partitions_of examples") {
  const auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].length() == 0);
  CHECK(p0[0].z() == 1);
  CHECK(p0[0].eps() == 1);

  const auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));

  const Partition l21({1, 2});
  CHECK(l21.parts() == std::vector<unsigned>{2, 1});
  CHECK(l21.z() == 2);
  CHECK(l21.eps() == -1);
  CHECK(l21.multiplicity(1) == 1);
  CHECK(l21.multiplicity(3) == 0);

  CHECK_THROWS_AS(partitions_of(31), InputError);
  CHECK_THROWS_AS(Partition({2, 0}), InputError);
}

TEST_CASE("partition counts and the class-size identity") {
  // p(n) for n = 0..15.
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (unsigned n = 0; n < counts.size(); ++n) {
    const auto parts = partitions_of(n);
    CHECK(parts.size() == counts[n]);
    // sum 1/z_lambda = 1: the conjugacy class sizes of S_n add to n!.
    Rational total = 0;
    for (const auto& lam : parts) {
      CHECK(lam.weight() == n);
      CHECK(lam.z() >= 1);
      total += Rational(1) / Rational(lam.z());
    }
    CHECK(total == 1);
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1].parts() > parts[i].parts());
  }
}

TEST_CASE("elementary_from_power examples") {
  CHECK(elementary_from_power(0, {}) == 1);
  const std::vector<Rational> p123{6, 14, 36};
  CHECK(elementary_from_power(3, p123) == 6);
  CHECK(elementary_from_power(2, p123) == 11);
  CHECK(elementary_from_power(1, p123) == 6);
  const std::vector<Rational> p11{2, 2};
  CHECK(elementary_from_power(2, p11) == 1);
  CHECK_THROWS_AS(elementary_from_power(3, p11), InputError);
}

TEST_CASE("newton_check examples") {
  const std::vector<Rational> e{1, 6, 11, 6}, p{6, 14, 36};
  CHECK(newton_check(3, e, p));
  CHECK(newton_check(1, std::vector<Rational>{1, 7}, std::vector<Rational>{7}));
  const std::vector<Rational> bad{1, 6, 12, 6};
  CHECK_FALSE(newton_check(3, bad, p));
}

TEST_CASE("power_from_coefficients examples") {
  CHECK(power_from_coefficients(IntPolynomial{1, -3, 1}, 3) == std::vector<Integer>{3, 7, 18});
  CHECK(power_from_coefficients(ReciprocalPoly(IntPolynomial{1, -3, 1}), 5) ==
        std::vector<Integer>{3, 7, 18, 47, 123});
  for (unsigned n = 1; n <= 6; ++n) {
    const IntPolynomial q = poly_from_roots(std::vector<Integer>(n, 1));
    CHECK(power_from_coefficients(q, 12) == std::vector<Integer>(12, n));
  }
  CHECK(power_from_coefficients(IntPolynomial{1, 0, 1}, 8) ==
        std::vector<Integer>{0, -2, 0, 2, 0, -2, 0, 2});
  CHECK_THROWS_AS(power_from_coefficients(IntPolynomial{1, 2}, 3), InputError);
}

TEST_CASE("ReciprocalPoly validation") {
  CHECK_NOTHROW(ReciprocalPoly(IntPolynomial{1, 4, 1}));
  CHECK_THROWS_AS(ReciprocalPoly(IntPolynomial{2, 4, 1}), InputError);
  CHECK_THROWS_AS(ReciprocalPoly(IntPolynomial{1, 1, 1, 1}), InputError);
  CHECK_THROWS_AS(ReciprocalPoly(IntPolynomial{2, 0, 2}), InputError);
  CHECK_THROWS_AS(ReciprocalPoly(IntPolynomial{1}), InputError);

  const std::vector<Integer> half{3, -2};
  const ReciprocalPoly q = ReciprocalPoly::from_half_elementary(4, half);
  CHECK(q.polynomial() == IntPolynomial{1, -3, -2, -3, 1});
  CHECK(q.elementary(1) == 3);
  CHECK(q.elementary(2) == -2);
  CHECK(q.elementary(4) == 1);
}

TEST_CASE("p_next examples") {
  const PNext a = p_next(2, std::vector<Rational>{2, 2});
  CHECK(a.newton == 2);
  CHECK(a.formula == 2);
  const PNext b = p_next(2, std::vector<Rational>{3, 5});
  CHECK(b.newton == 9);
  CHECK(b.agree());
  const PNext c = p_next(1, std::vector<Rational>{2});
  CHECK(c.newton == 4);
  CHECK(c.agree());
}

TEST_CASE("p_next: both routes reproduce the next power sum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto roots = random_multiset(rng);
    const auto n = static_cast<unsigned>(roots.size());
    const auto p = oracle::power_sums_direct(roots, n + 1);
    const PNext r = p_next(n, to_rationals(std::vector<Integer>(p.begin(), p.begin() + n)));
    CHECK(r.newton == Rational(p[n]));
    CHECK(r.formula == Rational(p[n]));
  }
}

TEST_CASE("coefficient_bound examples") {
  CHECK(coefficient_bound(1, 2) == 2);
  CHECK(coefficient_bound(2, 2) == 3);
  CHECK(coefficient_bound(0, 2) == 1);
  // z^{-1}-weighted sum at delta = 1 is the class-size identity.
  for (unsigned n = 0; n <= 10; ++n) CHECK(coefficient_bound(n, 1) == 1);
}

TEST_CASE("enumerate_bounded_reciprocal examples") {
  const auto five = enumerate_bounded_reciprocal(2, 2);
  REQUIRE(five.size() == 5);
  for (int a = -2; a <= 2; ++a) CHECK(five[a + 2].polynomial() == IntPolynomial{1, a, 1});
  CHECK(enumerate_bounded_reciprocal(2, 0).empty());
  CHECK_THROWS_AS(enumerate_bounded_reciprocal(3, 2), InputError);
  CHECK_THROWS_AS(enumerate_bounded_reciprocal(8, 2), InputError);
}

TEST_CASE("enumeration matches brute force over a wide quadratic box") {
  for (long delta = 0; delta <= 4; ++delta) {
    std::vector<ReciprocalPoly> brute;
    for (long a = -10; a <= 10; ++a) {
      const auto p = power_from_coefficients(IntPolynomial{1, a, 1}, 6);
      if (std::all_of(p.begin(), p.end(), [&](const Integer& x) { return abs(x) <= delta; }))
        brute.emplace_back(IntPolynomial{1, a, 1});
    }
    CHECK(enumerate_bounded_reciprocal(2, delta) == brute);
  }
}

TEST_CASE("enumerated polynomials are cyclotomic products when delta = N") {
  for (unsigned n : {2u, 4u, 6u}) {
    const auto polys = enumerate_bounded_reciprocal(n, n);
    CHECK_FALSE(polys.empty());
    for (const auto& q : polys) CHECK(is_cyclotomic_product(q.polynomial()));
  }
}

TEST_CASE("enumeration is closed under x -> -x and respects the coefficient bound") {
  for (unsigned n : {2u, 4u}) {
    for (long delta = 1; delta <= 4; ++delta) {
      const auto polys = enumerate_bounded_reciprocal(n, delta);
      const std::set<ReciprocalPoly> seen(polys.begin(), polys.end());
      CHECK(std::is_sorted(polys.begin(), polys.end()));
      for (const auto& q : polys) {
        CHECK(seen.count(ReciprocalPoly(q.polynomial().negate_variable())) == 1);
        for (unsigned i = 0; i <= n; ++i)
          CHECK(Rational(abs(q.elementary(i))) <= coefficient_bound(i, delta));
        const auto p = power_from_coefficients(q, n * (n + 1));
        for (const auto& pk : p) CHECK(abs(pk) <= delta);
      }
    }
  }
}

TEST_CASE("Newton and the partition expansion against subset enumeration") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto roots = random_multiset(rng);
    const auto n = static_cast<unsigned>(roots.size());
    const auto e_ref = oracle::elementary_by_subsets(roots);
    const auto p = to_rationals(oracle::power_sums_direct(roots, n));
    CHECK(elementary_from_roots(roots) == e_ref);
    CHECK(power_sums_of_roots(roots, n) == oracle::power_sums_direct(roots, n));
    for (unsigned k = 0; k <= n; ++k) CHECK(elementary_from_power(k, p) == Rational(e_ref[k]));
    CHECK(newton_check(n, to_rationals(e_ref), p));
    CHECK(elementary_by_newton(n, p) == to_rationals(e_ref));
  }
}

TEST_CASE("power sums from coefficients round-trip to the coefficients") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto roots = random_multiset(rng);
    const auto n = static_cast<unsigned>(roots.size());
    const IntPolynomial q = poly_from_roots(roots);
    const auto p = power_from_coefficients(q, 2 * n + 3);
    CHECK(p == oracle::power_sums_direct(roots, 2 * n + 3));
    const auto pr = to_rationals(p);
    for (unsigned k = 0; k <= n; ++k) {
      const Rational sign = k % 2 ? -1 : 1;
      CHECK(elementary_from_power(k, pr) == sign * Rational(q.coefficient(n - k)));
    }
  }
}

TEST_CASE("generating function identity at rational t") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto roots = random_multiset(rng);
    const auto e = elementary_from_roots(roots);
    const Rational t = make_rational(num(rng), den(rng));
    Rational series = 0, power = 1, product = 1;
    for (const auto& ek : e) {
      series += Rational(ek) * power;
      power *= t;
    }
    for (const auto& mu : roots) product *= 1 + Rational(mu) * t;
    CHECK(series == product);
  }
}
