#include "ctlen/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ctlen/bounds.hpp"
#include "ctlen/errors.hpp"
#include "ctlen/exactmat.hpp"
#include "ctlen/homology.hpp"
#include "ctlen/io.hpp"
#include "ctlen/penner.hpp"
#include "ctlen/symfun.hpp"

namespace ctlen::cli {
namespace {

using io::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

/// Runs work(i) for i in [0, count) on up to `threads` workers; results land
/// in index order so output never depends on scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads,
                                 const std::function<Result(std::size_t)>& work) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// 15 significant digits, then back to double so the JSON writer prints
/// the short form.
double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// --- penner -----------------------------------------------------------------

struct PennerCertifyArgs {
  std::string config;
  std::string out;
};

int penner_certify(const PennerCertifyArgs& a, std::ostream& out) {
  const PennerSpec spec =
      a.config.empty() ? PennerSpec::all_ones(1, 6) : io::penner_spec_from_json(io::read_json_file(a.config));
  const VanishCertificate cert = vanishing_certificate(spec);
  json report{{"config", io::penner_spec_to_json(spec)},
              {"certificate", io::certificate_to_json(cert)},
              {"strict_violations", spec.strict_violations()}};
  const PennerBound pb = penner_bound_formula(spec.m);
  if (cert.certified) {
    report["bound"] = {{"exact_bound", to_fraction_string(pb.exact_bound)},
                       {"closed_form", to_fraction_string(pb.closed_form)},
                       {"closed_form_dominates", pb.closed_form_dominates()}};
  }
  emit(io::dump(report), a.out, out);
  return cert.certified ? kExitOk : kExitFailure;
}

struct PennerSweepArgs {
  unsigned r = 1;
  unsigned m_min = 4;
  unsigned m_max = 20;
  std::string out;
  std::string mode = "exact";
  bool random_blocks = false;
  unsigned max_entry = 3;
  std::uint64_t seed = 0;
  long alpha_c = 1;
  long chi_c1 = -2;
  long chi_c0 = 0;
  unsigned threads = default_threads();
};

std::uint64_t grid_seed(std::uint64_t seed, unsigned r, unsigned m) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), r, m};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

int penner_sweep(const PennerSweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.m_min < 4 || a.m_max < a.m_min) throw InputError("penner sweep: need 4 <= m-min <= m-max");
  const ShadowMode mode = parse_shadow_mode(a.mode);
  const ChiModel chi{a.chi_c1, a.chi_c0};
  json config{{"command", "penner sweep"}, {"r", a.r},           {"m_min", a.m_min},
              {"m_max", a.m_max},          {"mode", a.mode},     {"blocks", a.random_blocks ? "random" : "ones"},
              {"max_entry", a.max_entry},  {"seed", a.seed},     {"alpha_c", a.alpha_c},
              {"chi", {{"c1", a.chi_c1}, {"c0", a.chi_c0}}}};

  struct Point {
    io::SweepRow row;
    bool certified = false;
  };
  const std::size_t count = a.m_max - a.m_min + 1;
  auto points = parallel_map<Point>(count, a.threads, [&](std::size_t i) {
    const unsigned m = a.m_min + static_cast<unsigned>(i);
    PennerSpec spec;
    if (a.random_blocks) {
      std::mt19937_64 rng(grid_seed(a.seed, a.r, m));
      spec = PennerSpec::random_positive(a.r, m, a.max_entry, rng);
    } else {
      spec = PennerSpec::all_ones(a.r, m);
    }
    spec.mode = mode;
    spec.chi = chi;
    Point p;
    p.certified = vanishing_certificate(spec).certified;
    if (p.certified) p.row = io::sweep_row_from_report(make_penner_report(spec, a.alpha_c));
    return p;
  });

  std::vector<io::SweepRow> rows;
  bool all_certified = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].certified) {
      all_certified = false;
      err << "penner sweep: certificate failed at m = " << a.m_min + i << "\n";
      continue;
    }
    rows.push_back(points[i].row);
  }
  emit(io::format_sweep_table(config, rows), a.out, out);
  return all_certified ? kExitOk : kExitFailure;
}

// --- symfun -----------------------------------------------------------------

struct NewtonCheckArgs {
  unsigned degree = 3;
  unsigned trials = 200;
  std::uint64_t seed = 0;
  std::string out;
};

int symfun_newton_check(const NewtonCheckArgs& a, std::ostream& out) {
  if (a.degree < 1 || a.degree > kDefaultPartitionCap)
    throw InputError("newton-check: degree must be in [1, " + std::to_string(kDefaultPartitionCap) + "]");
  std::ostringstream csv;
  json config{{"command", "symfun newton-check"}, {"degree", a.degree}, {"trials", a.trials}, {"seed", a.seed}};
  csv << "# config: " << config.dump() << "\nseed,N,result\n";
  bool all = true;
  for (unsigned trial = 0; trial < a.trials; ++trial) {
    const std::uint64_t s = a.seed + trial;
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<int> dist(-5, 5);
    std::vector<Integer> roots(a.degree);
    for (auto& x : roots) x = dist(rng);

    const std::vector<Integer> e_direct = elementary_from_roots(roots);
    const std::vector<Integer> p_int = power_sums_of_roots(roots, a.degree);
    std::vector<Rational> e(e_direct.begin(), e_direct.end()), p(p_int.begin(), p_int.end());
    bool ok = true;
    for (unsigned n = 1; n <= a.degree; ++n) {
      ok = ok && newton_check(n, e, p);
      ok = ok && elementary_from_power(n, p) == e[n];
    }
    all = all && ok;
    csv << s << ',' << a.degree << ',' << (ok ? "pass" : "fail") << '\n';
  }
  emit(csv.str(), a.out, out);
  return all ? kExitOk : kExitFailure;
}

struct EnumerateArgs {
  unsigned degree = 2;
  long delta = 2;
  std::string out;
};

int symfun_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const auto polys = enumerate_bounded_reciprocal(a.degree, Integer(a.delta));
  json list = json::array();
  for (const ReciprocalPoly& q : polys) list.push_back(io::polynomial_to_json(q.polynomial()));
  json report{{"config", {{"command", "symfun enumerate"}, {"degree", a.degree}, {"delta", a.delta},
                          {"window", a.degree * (a.degree + 1)}, {"bound_reading", "|p_k| <= delta"}}},
              {"coefficient_order", "lowest degree first"},
              {"count", polys.size()},
              {"polynomials", list}};
  emit(io::dump(report), a.out, out);
  return kExitOk;
}

// --- homology ---------------------------------------------------------------

struct LefschetzArgs {
  unsigned genus = 2;
  std::string word;
  long psi_punctures = -1;
  std::string out;
};

int homology_lefschetz(const LefschetzArgs& a, std::ostream& out) {
  TwistWord word{SymplecticSpace(a.genus), {}};
  if (!a.word.empty()) {
    word = io::twist_word_from_json(io::read_json_file(a.word));
    if (word.space.genus() != a.genus)
      throw InputError("lefschetz: --genus " + std::to_string(a.genus) + " disagrees with the word's genus " +
                       std::to_string(word.space.genus()));
  } else if (a.psi_punctures >= 0) {
    word = psi_preset(a.genus, static_cast<unsigned>(a.psi_punctures));
  } else {
    throw InputError("lefschetz: give --word FILE or --psi N");
  }
  const IntMatrix f = compose_word(word);
  json config{{"command", "homology lefschetz"}, {"genus", a.genus}, {"word", io::twist_word_to_json(word)}};
  json report{{"config", config},
              {"matrix", io::matrix_to_json(f)},
              {"trace", f.trace().get_str()},
              {"lefschetz", lefschetz(f, a.genus).get_str()},
              {"symplectic", word.space.preserves_form(f)}};
  emit(io::dump(report), a.out, out);
  return kExitOk;
}

struct EscapeArgs {
  std::string matrix;
  unsigned cap = 0;
  std::string out;
};

int homology_escape(const EscapeArgs& a, std::ostream& out) {
  const IntMatrix m = io::matrix_from_json(io::read_json_file(a.matrix));
  const unsigned cap = a.cap ? a.cap : default_escape_cap(m.rows());
  const EscapeResult res = escape_iterate(m, cap);
  const char* kind = res.kind == EscapeResult::Kind::escape_at  ? "escape_at"
                     : res.kind == EscapeResult::Kind::periodic ? "periodic"
                                                                : "cap_exhausted";
  json report{{"config", {{"command", "homology escape"}, {"matrix", io::matrix_to_json(m)}, {"cap", cap}}},
              {"result", {{"kind", kind}, {"value", res.value}}}};
  if (m.rows() <= kDefaultCharPolyCap) {
    const IntPolynomial cp = char_poly(m);
    report["char_poly"] = io::polynomial_to_json(cp);
    report["cyclotomic_product"] = is_cyclotomic_product(cp);
  }
  emit(io::dump(report), a.out, out);
  return res.kind == EscapeResult::Kind::cap_exhausted ? kExitFailure : kExitOk;
}

// --- bounds -----------------------------------------------------------------

struct ReportArgs {
  long genus = 2;
  long punctures = 0;
  long alpha_c = 1;
  std::string out;
};

json report_to_json(const BoundReport& r) {
  json j{{"sig", {{"g", r.sig.genus()}, {"n", r.sig.punctures()}, {"chi", r.sig.chi()}}},
         {"alpha_c", r.alpha_c},
         {"k_iterate", r.k_iterate.get_str()},
         {"lower", to_fraction_string(r.lower)},
         {"provenance", r.provenance},
         {"sandwich", sandwich_holds(r)}};
  j["upper_fixed_genus"] = r.upper_fixed_genus ? json(to_fraction_string(*r.upper_fixed_genus)) : json(nullptr);
  j["upper_penner"] = r.upper_penner ? json(to_fraction_string(*r.upper_penner)) : json(nullptr);
  return j;
}

int bounds_report(const ReportArgs& a, std::ostream& out) {
  const SurfaceSig sig(a.genus, a.punctures);
  const BoundReport r = make_report(sig, a.alpha_c);
  const BranchBudget bb = branch_budget(sig);
  json report = report_to_json(r);
  report["config"] = {{"command", "bounds report"}, {"genus", a.genus}, {"punctures", a.punctures},
                      {"alpha_c", a.alpha_c}};
  report["branch_budget"] = {{"real", bb.real.get_str()},
                             {"infinitesimal", bb.infinitesimal.get_str()},
                             {"real_hit", bb.real_hit.get_str()}};
  report["decomposition_holds"] = lower_bound_iterate_decomposed(sig, a.alpha_c) == r.k_iterate;
  emit(io::dump(report), a.out, out);
  return sandwich_holds(r) ? kExitOk : kExitFailure;
}

struct BoundsSweepArgs {
  long genus = 2;
  long n_min = 1;
  long n_max = 100;
  long alpha_c = 1;
  std::string out;
};

int bounds_sweep(const BoundsSweepArgs& a, std::ostream& out) {
  if (a.n_min < 1 || a.n_max < a.n_min) throw InputError("bounds sweep: need 1 <= n-min <= n-max");
  json config{{"command", "bounds sweep"}, {"genus", a.genus}, {"n_min", a.n_min}, {"n_max", a.n_max},
              {"alpha_c", a.alpha_c}};
  std::vector<io::SweepRow> rows;
  bool ok = true;
  for (long n = a.n_min; n <= a.n_max; ++n) {
    const SurfaceSig sig(a.genus, n);
    const BoundReport r = make_report(sig, a.alpha_c);
    ok = ok && sandwich_holds(r);
    rows.push_back(io::sweep_row_from_report(r));
  }
  emit(io::format_sweep_table(config, rows), a.out, out);
  return ok ? kExitOk : kExitFailure;
}

struct FitArgs {
  std::string in;
  std::string out;
  std::string x;
  std::string y;
};

int bounds_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream f(a.in, std::ios::binary);
  if (!f) throw InputError("cannot open '" + a.in + "'");
  std::stringstream raw;
  raw << f.rdbuf();
  const std::string text = raw.str();
  std::istringstream in(text);
  const io::SweepTable table = io::parse_sweep_table(in);
  if (table.rows.empty()) throw InputError("bounds fit: no data rows in '" + a.in + "'");

  // Lossless check: re-serializing what was read must reproduce the file.
  std::string again;
  if (table.config_line) again += "# config: " + *table.config_line + "\n";
  again += std::string(io::kSweepHeader) + "\n";
  for (const auto& row : table.rows) again += io::format_sweep_row(row) + "\n";
  const bool lossless = again == text;
  if (!lossless) err << "bounds fit: re-serialized table differs from '" << a.in << "'\n";

  std::string x = a.x, y = a.y;
  if (x.empty() || y.empty()) {
    const bool penner = table.rows.front().upper_penner.has_value();
    if (x.empty()) x = penner ? "m" : "n";
    if (y.empty()) y = penner ? "upper_penner" : "upper_fixed_genus";
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows) {
    const auto xv = io::sweep_column(row, x), yv = io::sweep_column(row, y);
    if (!xv || !yv) throw InputError("bounds fit: empty '" + (xv ? y : x) + "' cell");
    pts.emplace_back(*xv, *yv);
  }
  const FitResult fit = asymptotic_fit(pts);
  json report{{"config", {{"command", "bounds fit"}, {"in", a.in}, {"x", x}, {"y", y}}},
              {"slope", round15(fit.slope)},
              {"intercept", round15(fit.intercept)},
              {"r_squared", round15(fit.r_squared)},
              {"points", fit.points},
              {"lossless", lossless}};
  emit(io::dump(report), a.out, out);
  return lossless ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions for curve-complex translation length bounds", "ctlen"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* penner = app.add_subcommand("penner", "Penner block matrices and vanishing certificates");
  penner->require_subcommand(1);
  PennerCertifyArgs certify_args;
  auto* certify = penner->add_subcommand("certify", "Certify the last-block vanishing for one spec");
  certify->add_option("--config", certify_args.config, "PennerSpec JSON (default: all-ones r=1, m=6)");
  certify->add_option("--out", certify_args.out, "Output file (default: stdout)");
  certify->callback([&] { action = [&] { return penner_certify(certify_args, out); }; });

  PennerSweepArgs sweep_args;
  auto* psweep = penner->add_subcommand("sweep", "Certificates and bounds over a range of m");
  psweep->add_option("--r", sweep_args.r, "Block dimension")->required()->check(CLI::PositiveNumber);
  psweep->add_option("--m-min", sweep_args.m_min, "Smallest m (>= 4)")->required();
  psweep->add_option("--m-max", sweep_args.m_max, "Largest m")->required();
  psweep->add_option("--out", sweep_args.out, "Output CSV (default: stdout)");
  psweep->add_option("--mode", sweep_args.mode, "exact or pattern");
  psweep->add_flag("--random-blocks", sweep_args.random_blocks, "Seeded random positive blocks instead of all-ones");
  psweep->add_option("--max-entry", sweep_args.max_entry, "Largest random block entry");
  psweep->add_option("--seed", sweep_args.seed, "Random seed");
  psweep->add_option("--alpha-c", sweep_args.alpha_c, "Assumed constant for the lower bound");
  psweep->add_option("--chi-c1", sweep_args.chi_c1, "chi(m) = c1*m + c0");
  psweep->add_option("--chi-c0", sweep_args.chi_c0, "chi(m) = c1*m + c0");
  psweep->add_option("--threads", sweep_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  psweep->callback([&] { action = [&] { return penner_sweep(sweep_args, out, err); }; });

  auto* symfun = app.add_subcommand("symfun", "Symmetric function identities and enumeration");
  symfun->require_subcommand(1);
  NewtonCheckArgs newton_args;
  auto* newton = symfun->add_subcommand("newton-check", "Newton's identity on seeded random multisets");
  newton->add_option("--degree", newton_args.degree, "Multiset size")->required();
  newton->add_option("--trials", newton_args.trials, "Number of multisets");
  newton->add_option("--seed", newton_args.seed, "Base seed");
  newton->add_option("--out", newton_args.out, "Output CSV (default: stdout)");
  newton->callback([&] { action = [&] { return symfun_newton_check(newton_args, out); }; });

  EnumerateArgs enum_args;
  auto* enumerate = symfun->add_subcommand("enumerate", "Monic reciprocal polynomials with bounded power sums");
  enumerate->add_option("--degree", enum_args.degree, "Even degree N <= 6")->required();
  enumerate->add_option("--delta", enum_args.delta, "Power-sum bound")->required();
  enumerate->add_option("--out", enum_args.out, "Output JSON (default: stdout)");
  enumerate->callback([&] { action = [&] { return symfun_enumerate(enum_args, out); }; });

  auto* homology = app.add_subcommand("homology", "Homology action of twist words");
  homology->require_subcommand(1);
  LefschetzArgs lef_args;
  auto* lef = homology->add_subcommand("lefschetz", "Lefschetz number of a twist word");
  lef->add_option("--genus", lef_args.genus, "Genus")->required()->check(CLI::PositiveNumber);
  lef->add_option("--word", lef_args.word, "TwistWord JSON");
  lef->add_option("--psi", lef_args.psi_punctures, "Use the chain map psi_{g,n} with n punctures");
  lef->add_option("--out", lef_args.out, "Output JSON (default: stdout)");
  lef->callback([&] { action = [&] { return homology_lefschetz(lef_args, out); }; });

  EscapeArgs esc_args;
  auto* esc = homology->add_subcommand("escape", "First power with trace > 2, or a periodicity certificate");
  esc->add_option("--matrix", esc_args.matrix, "Matrix JSON")->required();
  esc->add_option("--cap", esc_args.cap, "Largest power tried (default 4g^2 + 2)");
  esc->add_option("--out", esc_args.out, "Output JSON (default: stdout)");
  esc->callback([&] { action = [&] { return homology_escape(esc_args, out); }; });

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and slope fits");
  bounds->require_subcommand(1);
  ReportArgs rep_args;
  auto* rep = bounds->add_subcommand("report", "Bounds for one surface");
  rep->add_option("--genus", rep_args.genus, "Genus")->required();
  rep->add_option("--punctures", rep_args.punctures, "Punctures")->required();
  rep->add_option("--alpha-c", rep_args.alpha_c, "Assumed constant alpha*C")->required();
  rep->add_option("--out", rep_args.out, "Output JSON (default: stdout)");
  rep->callback([&] { action = [&] { return bounds_report(rep_args, out); }; });

  BoundsSweepArgs bsweep_args;
  auto* bsweep = bounds->add_subcommand("sweep", "Fixed-genus bounds over a range of n");
  bsweep->add_option("--genus", bsweep_args.genus, "Genus")->required();
  bsweep->add_option("--n-min", bsweep_args.n_min, "Smallest n")->required();
  bsweep->add_option("--n-max", bsweep_args.n_max, "Largest n")->required();
  bsweep->add_option("--alpha-c", bsweep_args.alpha_c, "Assumed constant alpha*C");
  bsweep->add_option("--out", bsweep_args.out, "Output CSV (default: stdout)");
  bsweep->callback([&] { action = [&] { return bounds_sweep(bsweep_args, out); }; });

  FitArgs fit_args;
  auto* fit = bounds->add_subcommand("fit", "Log-log least squares on a sweep CSV");
  fit->add_option("--in", fit_args.in, "Sweep CSV")->required();
  fit->add_option("--out", fit_args.out, "Output JSON (default: stdout)");
  fit->add_option("--x", fit_args.x, "x column (default m or n)");
  fit->add_option("--y", fit_args.y, "y column (default upper_penner or upper_fixed_genus)");
  fit->callback([&] { action = [&] { return bounds_fit(fit_args, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }
  if (!action) {
    err << app.help();
    return kExitBadInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ctlen::cli
