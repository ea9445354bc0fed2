#pragma once

// JSON and CSV formats for matrices, Penner specs, twist words, certificates
// and sweep tables. Integers and rationals travel as decimal strings so no
// precision is lost.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctlen/bounds.hpp"
#include "ctlen/exactmat.hpp"
#include "ctlen/homology.hpp"
#include "ctlen/numeric.hpp"
#include "ctlen/penner.hpp"
#include "ctlen/symfun.hpp"

namespace ctlen::io {

using nlohmann::json;

/// Accepts a JSON string of decimal digits or a JSON integer.
Integer integer_from_json(const json& j);
/// Parses "p/q" or "p"; throws InputError on anything else.
Rational parse_rational(const std::string& s);

/// { "rows": R, "cols": C, "entries": [["1", "0"], ...] }
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// Rows only (no rows/cols header), as used for Penner blocks.
json rows_to_json(const IntMatrix& m);
IntMatrix rows_from_json(const json& j);

json penner_spec_to_json(const PennerSpec& spec);
PennerSpec penner_spec_from_json(const json& j);

json support_to_json(const SupportSet& s);
json certificate_to_json(const VanishCertificate& cert);

json twist_word_to_json(const TwistWord& w);
TwistWord twist_word_from_json(const json& j);

json polynomial_to_json(const IntPolynomial& q);

json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const json& j);

/// One line of a sweep table. Empty optional fields serialize as empty cells.
struct SweepRow {
  long g = 0;
  long n = 0;
  long chi = 0;
  long alpha_c = 0;
  Integer k_iterate;
  Rational lower;
  std::optional<Rational> upper_fixed_genus;
  std::optional<Rational> upper_penner;
  std::optional<unsigned> m;
  std::optional<unsigned> r;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr const char* kSweepHeader =
    "g,n,chi,alpha_c,k_iterate,lower,upper_fixed_genus,upper_penner,m,r";

SweepRow sweep_row_from_report(const BoundReport& report);
std::string format_sweep_row(const SweepRow& row);
SweepRow parse_sweep_row(const std::string& line);

struct SweepTable {
  /// The text after "# config: " when present.
  std::optional<std::string> config_line;
  std::vector<SweepRow> rows;
};

/// "# config: <json>" line, header, then one line per row.
std::string format_sweep_table(const json& config, const std::vector<SweepRow>& rows);
SweepTable parse_sweep_table(std::istream& in);

/// Numeric value of a named sweep column for fitting; nullopt for empty cells.
std::optional<double> sweep_column(const SweepRow& row, const std::string& column);

}  // namespace ctlen::io
