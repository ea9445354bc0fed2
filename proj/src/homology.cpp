#include "ctlen/homology.hpp"

#include <map>
#include <numeric>

#include "ctlen/errors.hpp"

namespace ctlen {

SymplecticSpace::SymplecticSpace(unsigned genus) : genus_(genus) {
  if (genus < 1) throw InputError("SymplecticSpace: genus must be positive");
}

Integer SymplecticSpace::pairing(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != dim() || y.size() != dim())
    throw InputError("pairing: classes must have length " + std::to_string(dim()));
  Integer acc = 0;
  for (std::size_t i = 0; i < genus_; ++i) acc += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  return acc;
}

IntMatrix SymplecticSpace::form() const {
  const std::size_t n = dim();
  std::vector<Integer> j(n * n, 0);
  for (std::size_t i = 0; i < genus_; ++i) {
    j[(2 * i) * n + 2 * i + 1] = 1;
    j[(2 * i + 1) * n + 2 * i] = -1;
  }
  return IntMatrix(n, n, std::move(j));
}

HomologyClass SymplecticSpace::a(unsigned i) const {
  if (i < 1 || i > genus_) throw InputError("a_i: index out of range");
  HomologyClass c = zero();
  c[2 * (i - 1)] = 1;
  return c;
}

HomologyClass SymplecticSpace::b(unsigned i) const {
  if (i < 1 || i > genus_) throw InputError("b_i: index out of range");
  HomologyClass c = zero();
  c[2 * (i - 1) + 1] = 1;
  return c;
}

bool SymplecticSpace::preserves_form(const IntMatrix& f) const {
  if (f.rows() != dim() || f.cols() != dim()) return false;
  return mat_mul(mat_mul(f.transpose(), form()), f) == form();
}

void TwistWord::validate() const {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k].cls.size() != space.dim())
      throw InputError("TwistWord: letter " + std::to_string(k + 1) + " has class length " +
                       std::to_string(letters[k].cls.size()) + ", expected " +
                       std::to_string(space.dim()));
    if (letters[k].sign != 1 && letters[k].sign != -1)
      throw InputError("TwistWord: letter " + std::to_string(k + 1) + " has sign other than +-1");
  }
}

IntMatrix transvection(const SymplecticSpace& space, std::span<const Integer> c, int sign) {
  const std::size_t n = space.dim();
  if (c.size() != n)
    throw InputError("transvection: class has length " + std::to_string(c.size()) +
                     ", expected " + std::to_string(n));
  if (sign != 1 && sign != -1) throw InputError("transvection: sign must be +1 or -1");
  // Column j of T is e_j + sign * <e_j, c> c.
  std::vector<Integer> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 1;
  HomologyClass basis = space.zero();
  for (std::size_t j = 0; j < n; ++j) {
    basis[j] = 1;
    const Integer w = space.pairing(basis, c) * sign;
    basis[j] = 0;
    if (w == 0) continue;
    for (std::size_t i = 0; i < n; ++i) t[i * n + j] += w * c[i];
  }
  return IntMatrix(n, n, std::move(t));
}

IntMatrix compose_word(const TwistWord& word) {
  word.validate();
  IntMatrix f = IntMatrix::identity(word.space.dim());
  for (const TwistLetter& letter : word.letters)
    f = mat_mul(transvection(word.space, letter.cls, letter.sign), f);
  if (!word.space.preserves_form(f))
    throw InvariantViolation("compose_word: product of transvections is not symplectic");
  return f;
}

Integer lefschetz(const IntMatrix& f, unsigned genus) {
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  if (f.rows() != n || f.cols() != n)
    throw InputError("lefschetz: expected a " + std::to_string(n) + "x" + std::to_string(n) +
                     " matrix for genus " + std::to_string(genus));
  return 2 - f.trace();
}

std::vector<HomologyClass> standard_chain(const SymplecticSpace& space) {
  const unsigned g = space.genus();
  std::vector<HomologyClass> chain;
  chain.push_back(space.b(1));
  for (unsigned i = 1; i <= g; ++i) {
    chain.push_back(space.a(i));
    if (i < g) {
      HomologyClass c = space.b(i);
      const HomologyClass next = space.b(i + 1);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] -= next[k];
      chain.push_back(std::move(c));
    }
  }
  chain.push_back(space.b(g));
  return chain;
}

TwistWord psi_preset(unsigned genus, unsigned punctures) {
  if (genus < 2) throw InputError("psi_preset: genus must be at least 2");
  if (2L * genus - 2 + punctures <= 0) throw InputError("psi_preset: surface is not hyperbolic");
  TwistWord word{SymplecticSpace(genus), {}};
  const std::vector<HomologyClass> chain = standard_chain(word.space);
  const std::size_t count = 2 * static_cast<std::size_t>(genus) + punctures;
  for (std::size_t k = 0; k < count; ++k) {
    HomologyClass cls = k < chain.size() ? chain[k] : word.space.zero();
    word.letters.push_back({std::move(cls), k % 2 == 0 ? 1 : -1});
  }
  return word;
}

unsigned default_escape_cap(std::size_t dim) {
  const std::size_t g = (dim + 1) / 2;
  return static_cast<unsigned>(4 * g * g + 2);
}

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPolynomial cyclotomic(unsigned d) {
  if (d == 0) throw InputError("cyclotomic: index must be positive");
  // Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}
  IntPolynomial num{1}, den{1};
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius(d / e);
    if (mu == 0) continue;
    IntPolynomial factor = IntPolynomial::monomial(e) - IntPolynomial{1};
    (mu > 0 ? num : den) = (mu > 0 ? num : den) * factor;
  }
  auto [q, r] = divmod_monic(num, den);
  if (!r.is_zero()) throw InvariantViolation("cyclotomic: inexact division");
  return q;
}

std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPolynomial& q) {
  if (!q.is_monic()) throw InputError("is_cyclotomic_product: polynomial must be monic");
  const unsigned deg = static_cast<unsigned>(q.degree());
  std::vector<unsigned> factors;
  if (deg == 0) return factors;
  IntPolynomial rest = q;
  // totient(d) >= sqrt(d/2), so totient(d) <= deg forces d <= 2 deg^2.
  const unsigned d_max = std::max(2u, 2 * deg * deg);
  for (unsigned d = 1; d <= d_max && rest.degree() > 0; ++d) {
    if (totient(d) > static_cast<unsigned>(rest.degree())) continue;
    const IntPolynomial phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = divmod_monic(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      factors.push_back(d);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return factors;
}

bool is_cyclotomic_product(const IntPolynomial& q) { return cyclotomic_factorization(q).has_value(); }

EscapeResult escape_iterate(const IntMatrix& a, unsigned cap) {
  if (!a.is_square()) throw InputError("escape_iterate: matrix must be square");
  const Integer det = determinant(a);
  if (det != 1 && det != -1)
    throw InputError("escape_iterate: matrix is not invertible over the integers (det = " +
                     det.get_str() + ")");

  IntMatrix power = a;
  for (unsigned c = 1; c <= cap; ++c) {
    if (power.trace() > 2) return EscapeResult::escape_at(c);
    if (c < cap) power = mat_mul(power, a);
  }

  const auto factors = cyclotomic_factorization(char_poly(a, a.rows()));
  if (!factors) return EscapeResult::exhausted(cap);
  unsigned period = 1;
  for (unsigned d : *factors) period = std::lcm(period, d);

  // The trace sequence of a matrix whose eigenvalues are roots of unity of
  // orders d has exact period lcm(d); confirm over two periods.
  std::vector<Integer> traces;
  IntMatrix p = IntMatrix::identity(a.rows());
  for (unsigned k = 0; k < 2 * period; ++k) {
    p = mat_mul(p, a);
    traces.push_back(p.trace());
  }
  for (unsigned k = period; k < 2 * period; ++k)
    if (traces[k] != traces[k - period])
      throw InvariantViolation("escape_iterate: trace sequence is not periodic with period " +
                               std::to_string(period));
  return EscapeResult::periodic(period);
}

}  // namespace ctlen
