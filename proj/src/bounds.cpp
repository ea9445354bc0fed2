#include "ctlen/bounds.hpp"

#include <cmath>
#include <vector>

#include "ctlen/errors.hpp"

namespace ctlen {

SurfaceSig::SurfaceSig(long genus, long punctures) : g_(genus), n_(punctures) {
  if (genus < 0 || punctures < 0)
    throw InputError("SurfaceSig: genus and punctures must be nonnegative");
  if (2 * genus - 2 + punctures <= 0)
    throw InputError("SurfaceSig: S_{" + std::to_string(genus) + "," + std::to_string(punctures) +
                     "} is not of hyperbolic type");
}

BranchBudget branch_budget(const SurfaceSig& sig) {
  const Integer x = sig.abs_chi(), n = sig.punctures();
  return BranchBudget{9 * x, 24 * x - 8 * n, 6 * x - 2 * n};
}

LowerBound lower_bound_iterate(const SurfaceSig& sig, long alpha_c) {
  if (alpha_c < 1) throw InputError("lower_bound_iterate: alpha_c must be at least 1");
  const Integer k = (9 * Integer(alpha_c) + 30) * sig.abs_chi() - 10 * Integer(sig.punctures());
  if (k <= 0)
    throw InputError("lower_bound_iterate: iterate count " + k.get_str() +
                     " is not positive for this signature");
  return LowerBound{k, make_rational(1, k)};
}

Integer lower_bound_iterate_decomposed(const SurfaceSig& sig, long alpha_c) {
  const Integer x = sig.abs_chi(), n = sig.punctures(), a = alpha_c;
  return (9 * a + 6) * x - 2 * n + 24 * x - 8 * n;
}

Rational upper_bound_fixed_genus(long punctures) {
  if (punctures < 1) throw InputError("upper_bound_fixed_genus: n must be at least 1");
  return make_rational(2, punctures);
}

SurfaceSig penner_surface(const ChiModel& model, unsigned m) {
  const Integer chi = model.at(m);
  if (chi % 2 != 0)
    throw InputError("penner_surface: chi(" + std::to_string(m) + ") = " + chi.get_str() +
                     " is odd; a closed surface needs even Euler characteristic");
  if (!chi.fits_slong_p()) throw InputError("penner_surface: chi out of range");
  return SurfaceSig((2 - chi.get_si()) / 2, 0);
}

FitResult asymptotic_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InputError("asymptotic_fit: need at least 3 points");
  std::vector<double> lx, ly;
  for (const auto& [x, y] : points) {
    if (!(x > 0) || !(y > 0)) throw InputError("asymptotic_fit: coordinates must be positive");
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw InputError("asymptotic_fit: all x values coincide");
  FitResult fit;
  fit.points = lx.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

BoundReport make_report(const SurfaceSig& sig, long alpha_c) {
  const LowerBound lb = lower_bound_iterate(sig, alpha_c);
  BoundReport report{sig, alpha_c, lb.k, lb.lower, std::nullopt, std::nullopt,
                     std::nullopt, std::nullopt, {}};
  report.provenance["k_iterate"] = "(9*alpha_c + 30)*|chi| - 10*n";
  report.provenance["lower"] = "1/k_iterate (translation length scales with powers)";
  report.provenance["alpha_c"] = "assumed configuration constant (existence only, no effective value)";
  if (sig.punctures() >= 1) {
    report.upper_fixed_genus = upper_bound_fixed_genus(sig.punctures());
    report.provenance["upper_fixed_genus"] = "2/n from the chain twist map psi_{g,n}";
  }
  return report;
}

BoundReport make_penner_report(const PennerSpec& spec, long alpha_c) {
  const SurfaceSig sig = penner_surface(spec.chi, spec.m);
  const PennerBound pb = penner_upper_bound(spec);
  BoundReport report = make_report(sig, alpha_c);
  report.upper_penner = pb.exact_bound;
  report.m = spec.m;
  report.r = spec.r;
  report.provenance["upper_penner"] =
      "2/(m*(floor(m/2)-1)) from the certified vanishing of the last block";
  report.provenance["chi_model"] = "chi(m) = " + std::to_string(spec.chi.c1) + "*m + " +
                                   std::to_string(spec.chi.c0) + " (modeling input, n = 0)";
  return report;
}

bool sandwich_holds(const BoundReport& report) {
  if (report.upper_penner && report.lower > *report.upper_penner) return false;
  if (report.upper_fixed_genus && report.lower > *report.upper_fixed_genus) return false;
  return true;
}

}  // namespace ctlen
