#pragma once

// Closed-form translation-length bounds for S_{g,n}: train-track branch
// budgets, the iterate-count lower bound, the fixed-genus and Penner-family
// upper bounds, and log-log slope fits used to check their asymptotics.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "ctlen/numeric.hpp"
#include "ctlen/penner.hpp"

namespace ctlen {

class SurfaceSig {
 public:
  /// Throws InputError unless 2g - 2 + n > 0.
  SurfaceSig(long genus, long punctures);

  long genus() const { return g_; }
  long punctures() const { return n_; }
  long chi() const { return 2 - 2 * g_ - n_; }
  long abs_chi() const { return -chi(); }

  friend auto operator<=>(const SurfaceSig&, const SurfaceSig&) = default;

 private:
  long g_;
  long n_;
};

struct BranchBudget {
  Integer real;            // 9|chi|
  Integer infinitesimal;   // 24|chi| - 8n
  Integer real_hit;        // 6|chi| - 2n
};

BranchBudget branch_budget(const SurfaceSig& sig);

struct LowerBound {
  Integer k;
  Rational lower;
};

/// k = (9 alpha_c + 30)|chi| - 10n and lower = 1/k. Throws InputError when
/// alpha_c < 1 or k <= 0.
LowerBound lower_bound_iterate(const SurfaceSig& sig, long alpha_c);

/// (9 alpha_c + 6)|chi| - 2n + 24|chi| - 8n, the grouping that arises from
/// the real-branch count plus the infinitesimal branch budget.
Integer lower_bound_iterate_decomposed(const SurfaceSig& sig, long alpha_c);

/// 2 / n.
Rational upper_bound_fixed_genus(long punctures);

/// Closed surface carrying the m-th Penner map under the chi model:
/// chi = c1 m + c0, n = 0, g = (2 - chi) / 2. Throws InputError when chi is
/// odd or the surface is not hyperbolic.
SurfaceSig penner_surface(const ChiModel& model, unsigned m);

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  std::size_t points = 0;
};

/// Least-squares line through (log x, log y). Needs at least three points
/// with positive coordinates.
FitResult asymptotic_fit(std::span<const std::pair<double, double>> points);

struct BoundReport {
  SurfaceSig sig;
  long alpha_c;
  Integer k_iterate;
  Rational lower;
  std::optional<Rational> upper_penner;
  std::optional<Rational> upper_fixed_genus;
  std::optional<unsigned> m;
  std::optional<unsigned> r;
  /// Formula used for each populated bound field.
  std::map<std::string, std::string> provenance;
};

/// Lower bound plus the fixed-genus upper bound 2/n when n >= 1.
BoundReport make_report(const SurfaceSig& sig, long alpha_c);

/// Report for the m-th Penner map: lower bound on penner_surface(chi, m)
/// and the certified Penner upper bound (ContractError when uncertified).
BoundReport make_penner_report(const PennerSpec& spec, long alpha_c);

/// lower <= every populated upper bound.
bool sandwich_holds(const BoundReport& report);

}  // namespace ctlen
