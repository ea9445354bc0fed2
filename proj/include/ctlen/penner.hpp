#pragma once

// Block transition matrix of the m-th power of a Penner-sequence mapping
// class, its support shadows, and the "last block vanishes" certificate that
// bounds the curve-complex translation length from above.
//
// The matrix is an m x m array of r x r blocks:
//
//   row 1      : A (col 1)  D (col 2)                F  (col m)
//   row 2      : B (col 1)  E (col 2)  G (col 3)     F² (col m)
//   row i      : F (col i-1)  H (col i)  G (col i+1)    for 3 <= i <= m-1
//   row m      : C (col 1)  F (col m-1)  H (col m)
//
// so a vector supported on a middle block spreads to its two neighbours per
// application, and the last block stays unreachable for floor(m/2) - 1 steps
// from a start block near the middle.

#include <array>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ctlen/exactmat.hpp"
#include "ctlen/numeric.hpp"

namespace ctlen {

enum class ShadowMode { exact, pattern };

/// Affine Euler characteristic model chi(m) = c1 * m + c0 for the surface
/// carrying the m-th member of the family.
struct ChiModel {
  long c1 = -2;
  long c0 = 0;
  Integer at(unsigned m) const { return Integer(c1) * m + c0; }
  friend bool operator==(const ChiModel&, const ChiModel&) = default;
};

inline constexpr std::array<char, 8> kPennerBlockLabels = {'A', 'B', 'C', 'D',
                                                          'E', 'F', 'G', 'H'};

struct PennerSpec {
  unsigned r = 1;
  unsigned m = 4;
  std::map<char, IntMatrix> blocks;
  ShadowMode mode = ShadowMode::exact;
  ChiModel chi;

  /// Every block the r x r all-ones matrix.
  static PennerSpec all_ones(unsigned r, unsigned m);
  /// Every block drawn entrywise uniformly from [1, max_entry].
  static PennerSpec random_positive(unsigned r, unsigned m, unsigned max_entry,
                                    std::mt19937_64& rng);

  const IntMatrix& block(char label) const;

  /// Structural checks: all eight blocks present, r x r, nonnegative, m >= 4.
  /// Throws InputError.
  void validate() const;

  /// Structural checks plus F, G, H strictly positive and A..E nonzero.
  /// Returns the list of violated hypotheses (empty when all hold).
  std::vector<std::string> strict_violations() const;
};

IntMatrix build_penner(const PennerSpec& spec);

/// Block number (1-based) containing the 1-based index i.
inline std::size_t block_of(std::size_t i, unsigned r) { return (i - 1) / r + 1; }

/// Block-level view of an index support: the blocks that meet it.
std::vector<std::size_t> blocks_meeting(const SupportSet& s, unsigned r);

/// All indices of blocks [first_block, last_block].
SupportSet block_interval(unsigned r, unsigned m, std::size_t first_block,
                          std::size_t last_block);

/// Supports of B^s * 1_{start_block} for s = 0..t, where B = build_penner(spec)
/// and 1_{start_block} is the indicator of the whole start block.
std::vector<SupportSet> shadow(const PennerSpec& spec, unsigned start_block, unsigned t);

struct VanishCertificate {
  unsigned r = 0;
  unsigned m = 0;
  unsigned start_block = 0;
  /// Starting basis vectors e_k with k_low <= k <= k_high (the start block).
  std::size_t k_low = 0;
  std::size_t k_high = 0;
  unsigned t = 0;
  bool certified = false;
  std::vector<SupportSet> support_trace;
  /// Indices of the last block present in the final support (empty when certified).
  std::vector<std::size_t> offending;
};

/// Start block floor(m/2) for even m and ceil(m/2) for odd m.
unsigned vanishing_start_block(unsigned m);
/// Number of applications floor(m/2) - 1.
unsigned vanishing_steps(unsigned m);

/// Certificate for the canonical start block and step count.
VanishCertificate vanishing_certificate(const PennerSpec& spec);

/// Same check from an arbitrary start block and step count.
VanishCertificate vanishing_certificate_at(const PennerSpec& spec, unsigned start_block,
                                           unsigned t);

struct PennerBound {
  /// 2 / (m (floor(m/2) - 1)), the bound the certificate actually proves.
  Rational exact_bound;
  /// 4 / (m^2 - 2m).
  Rational closed_form;
  bool closed_form_dominates() const { return exact_bound <= closed_form; }
};

/// The two bound expressions for a given m >= 4, with no certification.
PennerBound penner_bound_formula(unsigned m);

/// Bounds for a spec whose vanishing certificate holds; ContractError otherwise.
PennerBound penner_upper_bound(const PennerSpec& spec);

std::string to_string(ShadowMode mode);
ShadowMode parse_shadow_mode(const std::string& s);

}  // namespace ctlen
