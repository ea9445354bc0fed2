#pragma once

// Action of Dehn twists on H_1 of a closed genus-g surface (punctures are
// forgotten), Lefschetz numbers, and the trace-escape argument for powers of
// an integral symplectic matrix.
//
// Basis order is (a_1, b_1, ..., a_g, b_g) with <a_i, b_i> = 1 and every other
// basis pairing zero. A twist about c with sign s acts by x -> x + s <x, c> c.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ctlen/exactmat.hpp"
#include "ctlen/numeric.hpp"
#include "ctlen/polynomial.hpp"

namespace ctlen {

using HomologyClass = std::vector<Integer>;

class SymplecticSpace {
 public:
  explicit SymplecticSpace(unsigned genus);

  unsigned genus() const { return genus_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(genus_); }

  /// Algebraic intersection number <x, y>.
  Integer pairing(std::span<const Integer> x, std::span<const Integer> y) const;

  /// Gram matrix J of the pairing, so <x, y> = x^T J y.
  IntMatrix form() const;

  /// Basis vectors a_i and b_i (1-based i).
  HomologyClass a(unsigned i) const;
  HomologyClass b(unsigned i) const;
  HomologyClass zero() const { return HomologyClass(dim(), 0); }

  /// f^T J f == J.
  bool preserves_form(const IntMatrix& f) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  unsigned genus_;
};

struct TwistLetter {
  HomologyClass cls;
  int sign = 1;
};

struct TwistWord {
  SymplecticSpace space;
  std::vector<TwistLetter> letters;

  /// Class lengths equal 2g and signs are +-1; throws InputError.
  void validate() const;
};

IntMatrix transvection(const SymplecticSpace& space, std::span<const Integer> c, int sign);

/// Letters act in order: the first letter is applied first, so the result is
/// T_k * ... * T_1.
IntMatrix compose_word(const TwistWord& word);

/// 2 - Tr(f) for f acting on H_1 of a closed genus-g surface.
Integer lefschetz(const IntMatrix& f, unsigned genus);

/// Twist word for the chain mapping class psi_{g,n}: 2g + n letters with
/// signs +, -, +, ...; the first min(2g+1, 2g+n) classes form the standard
/// chain b_1, a_1, b_1 - b_2, a_2, ..., a_g, b_g and the rest are null.
TwistWord psi_preset(unsigned genus, unsigned punctures);

/// Standard chain classes c_1..c_{2g+1}.
std::vector<HomologyClass> standard_chain(const SymplecticSpace& space);

struct EscapeResult {
  enum class Kind { escape_at, periodic, cap_exhausted };
  Kind kind;
  /// Escape exponent C, trace-sequence period, or the exhausted cap.
  unsigned value;

  static EscapeResult escape_at(unsigned c) { return {Kind::escape_at, c}; }
  static EscapeResult periodic(unsigned period) { return {Kind::periodic, period}; }
  static EscapeResult exhausted(unsigned cap) { return {Kind::cap_exhausted, cap}; }
  friend bool operator==(const EscapeResult&, const EscapeResult&) = default;
};

/// 4g^2 + 2 for a 2g x 2g matrix.
unsigned default_escape_cap(std::size_t dim);

/// Smallest C <= cap with Tr(a^C) > 2. Failing that, a periodic certificate
/// when the characteristic polynomial is a product of cyclotomic polynomials.
EscapeResult escape_iterate(const IntMatrix& a, unsigned cap);

/// Phi_d.
IntPolynomial cyclotomic(unsigned d);

/// Euler's totient.
unsigned totient(unsigned n);

/// Indices d (with repetition, ascending) of the cyclotomic factors of q
/// when q is a product of cyclotomic polynomials; empty optional otherwise.
std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPolynomial& q);

/// Trial division by Phi_d for every d with totient(d) <= deg q.
/// Throws InputError for non-monic input.
bool is_cyclotomic_product(const IntPolynomial& q);

}  // namespace ctlen
