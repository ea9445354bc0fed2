#include "ctlen/penner.hpp"

#include <utility>

#include "ctlen/errors.hpp"

namespace ctlen {
namespace {

IntMatrix ones(unsigned r) { return IntMatrix(r, r, std::vector<Integer>(r * r, 1)); }

// Copies block into the (block_row, block_col) slot, both 1-based.
void place(std::vector<Integer>& dst, std::size_t dim, unsigned r, std::size_t block_row,
           std::size_t block_col, const IntMatrix& block) {
  const std::size_t row0 = (block_row - 1) * r, col0 = (block_col - 1) * r;
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) dst[(row0 + i) * dim + col0 + j] = block(i, j);
}

}  // namespace

PennerSpec PennerSpec::all_ones(unsigned r, unsigned m) {
  PennerSpec spec;
  spec.r = r;
  spec.m = m;
  for (char label : kPennerBlockLabels) spec.blocks.emplace(label, ones(r));
  return spec;
}

PennerSpec PennerSpec::random_positive(unsigned r, unsigned m, unsigned max_entry,
                                       std::mt19937_64& rng) {
  if (max_entry < 1) throw InputError("random_positive: max_entry must be >= 1");
  std::uniform_int_distribution<unsigned> dist(1, max_entry);
  PennerSpec spec;
  spec.r = r;
  spec.m = m;
  for (char label : kPennerBlockLabels) {
    std::vector<Integer> e(r * r);
    for (auto& x : e) x = dist(rng);
    spec.blocks.emplace(label, IntMatrix(r, r, std::move(e)));
  }
  return spec;
}

const IntMatrix& PennerSpec::block(char label) const {
  auto it = blocks.find(label);
  if (it == blocks.end()) throw InputError(std::string("PennerSpec: missing block ") + label);
  return it->second;
}

void PennerSpec::validate() const {
  if (r < 1) throw InputError("PennerSpec: r must be positive");
  if (m < 4) throw InputError("PennerSpec: m must be at least 4, got " + std::to_string(m));
  for (char label : kPennerBlockLabels) {
    const IntMatrix& b = block(label);
    if (b.rows() != r || b.cols() != r)
      throw InputError(std::string("PennerSpec: block ") + label + " is " +
                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                       ", expected " + std::to_string(r) + "x" + std::to_string(r));
    if (!b.nonneg()) throw InputError(std::string("PennerSpec: block ") + label + " has a negative entry");
  }
  if (blocks.size() != kPennerBlockLabels.size())
    throw InputError("PennerSpec: unexpected block labels (only A-H are allowed)");
}

std::vector<std::string> PennerSpec::strict_violations() const {
  validate();
  std::vector<std::string> out;
  for (char label : {'F', 'G', 'H'})
    if (!block(label).all_positive())
      out.push_back(std::string("block ") + label + " is not strictly positive");
  for (char label : {'A', 'B', 'C', 'D', 'E'})
    if (block(label).is_zero()) out.push_back(std::string("block ") + label + " is zero");
  return out;
}

IntMatrix build_penner(const PennerSpec& spec) {
  spec.validate();
  const unsigned r = spec.r, m = spec.m;
  const std::size_t dim = static_cast<std::size_t>(r) * m;
  std::vector<Integer> e(dim * dim, 0);
  const IntMatrix& f = spec.block('F');
  const IntMatrix& g = spec.block('G');
  const IntMatrix& h = spec.block('H');

  place(e, dim, r, 1, 1, spec.block('A'));
  place(e, dim, r, 1, 2, spec.block('D'));
  place(e, dim, r, 1, m, f);

  place(e, dim, r, 2, 1, spec.block('B'));
  place(e, dim, r, 2, 2, spec.block('E'));
  place(e, dim, r, 2, 3, g);
  place(e, dim, r, 2, m, mat_mul(f, f));

  for (unsigned i = 3; i <= m - 1; ++i) {
    place(e, dim, r, i, i - 1, f);
    place(e, dim, r, i, i, h);
    place(e, dim, r, i, i + 1, g);
  }

  place(e, dim, r, m, 1, spec.block('C'));
  place(e, dim, r, m, m - 1, f);
  place(e, dim, r, m, m, h);
  return IntMatrix(dim, dim, std::move(e));
}

std::vector<std::size_t> blocks_meeting(const SupportSet& s, unsigned r) {
  std::vector<std::size_t> out;
  for (std::size_t i : s.members()) {
    const std::size_t b = block_of(i, r);
    if (out.empty() || out.back() != b) out.push_back(b);
  }
  return out;
}

SupportSet block_interval(unsigned r, unsigned m, std::size_t first_block,
                          std::size_t last_block) {
  const std::size_t dim = static_cast<std::size_t>(r) * m;
  if (first_block > last_block) return SupportSet(dim);
  return SupportSet::range(dim, (first_block - 1) * r + 1, last_block * r);
}

std::vector<SupportSet> shadow(const PennerSpec& spec, unsigned start_block, unsigned t) {
  spec.validate();
  if (start_block < 1 || start_block > spec.m)
    throw InputError("shadow: start block " + std::to_string(start_block) + " outside [1, " +
                     std::to_string(spec.m) + "]");
  const IntMatrix b = build_penner(spec);
  const SupportSet start = block_interval(spec.r, spec.m, start_block, start_block);

  std::vector<SupportSet> trace;
  trace.reserve(t + 1);
  trace.push_back(start);
  if (spec.mode == ShadowMode::pattern) {
    const IntMatrix pattern = b.pattern();
    for (unsigned s = 1; s <= t; ++s) trace.push_back(support_propagate(pattern, trace.back()));
  } else {
    std::vector<Integer> v = start.indicator();
    for (unsigned s = 1; s <= t; ++s) {
      v = mat_vec(b, v);
      trace.push_back(SupportSet::of_vector(v));
    }
  }
  return trace;
}

unsigned vanishing_start_block(unsigned m) { return m % 2 == 0 ? m / 2 : (m + 1) / 2; }

unsigned vanishing_steps(unsigned m) { return m / 2 - 1; }

VanishCertificate vanishing_certificate(const PennerSpec& spec) {
  spec.validate();
  return vanishing_certificate_at(spec, vanishing_start_block(spec.m), vanishing_steps(spec.m));
}

VanishCertificate vanishing_certificate_at(const PennerSpec& spec, unsigned start_block,
                                           unsigned t) {
  PennerSpec exact = spec;
  exact.mode = ShadowMode::exact;

  VanishCertificate cert;
  cert.r = spec.r;
  cert.m = spec.m;
  cert.start_block = start_block;
  cert.t = t;
  cert.k_low = static_cast<std::size_t>(spec.r) * (cert.start_block - 1) + 1;
  cert.k_high = static_cast<std::size_t>(spec.r) * cert.start_block;
  cert.support_trace = shadow(exact, cert.start_block, cert.t);

  const SupportSet& last = cert.support_trace.back();
  const std::size_t tail_first = static_cast<std::size_t>(spec.r) * (spec.m - 1) + 1;
  for (std::size_t i : last.members())
    if (i >= tail_first) cert.offending.push_back(i);
  cert.certified = cert.offending.empty();
  return cert;
}

PennerBound penner_bound_formula(unsigned m) {
  if (m < 4) throw InputError("penner_bound_formula: m must be at least 4");
  const Integer mm = m;
  return PennerBound{make_rational(2, mm * (m / 2 - 1)), make_rational(4, mm * mm - 2 * mm)};
}

PennerBound penner_upper_bound(const PennerSpec& spec) {
  if (!vanishing_certificate(spec).certified)
    throw ContractError("penner_upper_bound: the last block is reached within floor(m/2)-1 "
                        "steps; the vanishing certificate fails for this spec");
  return penner_bound_formula(spec.m);
}

std::string to_string(ShadowMode mode) { return mode == ShadowMode::exact ? "exact" : "pattern"; }

ShadowMode parse_shadow_mode(const std::string& s) {
  if (s == "exact") return ShadowMode::exact;
  if (s == "pattern") return ShadowMode::pattern;
  throw InputError("unknown shadow mode '" + s + "' (expected exact or pattern)");
}

}  // namespace ctlen
