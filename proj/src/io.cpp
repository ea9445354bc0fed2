#include "ctlen/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "ctlen/errors.hpp"

namespace ctlen::io {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("sweep CSV: bad ") + what + " value '" + s + "'");
  }
}

template <typename T>
std::string optional_cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, Rational>) {
    return to_fraction_string(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not a decimal integer: '" + s + "'");
    return v;
  }
  throw InputError("expected an integer or a decimal string, got " + j.dump());
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  Integer num, den = 1;
  const std::string ns = s.substr(0, slash);
  if (ns.empty() || num.set_str(ns, 10) != 0) throw InputError("not a rational: '" + s + "'");
  if (slash != std::string::npos) {
    const std::string ds = s.substr(slash + 1);
    if (ds.empty() || den.set_str(ds, 10) != 0 || den == 0)
      throw InputError("not a rational: '" + s + "'");
  }
  return make_rational(num, den);
}

json rows_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const Integer& x : m.row(i)) row.push_back(x.get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix rows_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix rows must be a nonempty array");
  std::vector<std::vector<Integer>> rows;
  for (const json& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<Integer> r;
    for (const json& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

json matrix_to_json(const IntMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows_to_json(m)}};
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw InputError("matrix JSON needs an 'entries' field");
  IntMatrix m = rows_from_json(j.at("entries"));
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
    throw InputError("matrix JSON: 'rows' disagrees with entries");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
    throw InputError("matrix JSON: 'cols' disagrees with entries");
  return m;
}

json penner_spec_to_json(const PennerSpec& spec) {
  json blocks = json::object();
  for (const auto& [label, b] : spec.blocks) blocks[std::string(1, label)] = rows_to_json(b);
  return json{{"r", spec.r},
              {"m", spec.m},
              {"mode", to_string(spec.mode)},
              {"blocks", blocks},
              {"chi", {{"c1", spec.chi.c1}, {"c0", spec.chi.c0}}}};
}

PennerSpec penner_spec_from_json(const json& j) {
  try {
    PennerSpec spec;
    spec.r = j.at("r").get<unsigned>();
    spec.m = j.at("m").get<unsigned>();
    if (j.contains("mode")) spec.mode = parse_shadow_mode(j.at("mode").get<std::string>());
    for (const auto& [label, rows] : j.at("blocks").items()) {
      if (label.size() != 1) throw InputError("PennerSpec JSON: bad block label '" + label + "'");
      spec.blocks.emplace(label[0], rows_from_json(rows));
    }
    if (j.contains("chi")) {
      spec.chi.c1 = j.at("chi").at("c1").get<long>();
      spec.chi.c0 = j.at("chi").at("c0").get<long>();
    }
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("PennerSpec JSON: ") + e.what());
  }
}

json support_to_json(const SupportSet& s) { return s.members(); }

json certificate_to_json(const VanishCertificate& cert) {
  json trace = json::array();
  for (const SupportSet& s : cert.support_trace) trace.push_back(support_to_json(s));
  return json{{"r", cert.r},
              {"m", cert.m},
              {"start_block", cert.start_block},
              {"k_low", cert.k_low},
              {"k_high", cert.k_high},
              {"k_range", "r*(floor(m/2)-1) < k <= r*floor(m/2) for even m; "
                          "r*floor(m/2) < k <= r*ceil(m/2) for odd m"},
              {"t", cert.t},
              {"certified", cert.certified},
              {"support_trace", trace},
              {"offending", cert.offending}};
}

json twist_word_to_json(const TwistWord& w) {
  json letters = json::array();
  for (const TwistLetter& l : w.letters) {
    json cls = json::array();
    for (const Integer& x : l.cls) {
      if (x.fits_slong_p()) cls.push_back(x.get_si());
      else cls.push_back(x.get_str());
    }
    letters.push_back(json{{"class", cls}, {"sign", l.sign}});
  }
  return json{{"genus", w.space.genus()}, {"letters", letters}};
}

TwistWord twist_word_from_json(const json& j) {
  try {
    TwistWord w{SymplecticSpace(j.at("genus").get<unsigned>()), {}};
    for (const json& l : j.at("letters")) {
      TwistLetter letter;
      for (const json& x : l.at("class")) letter.cls.push_back(integer_from_json(x));
      letter.sign = l.at("sign").get<int>();
      w.letters.push_back(std::move(letter));
    }
    w.validate();
    return w;
  } catch (const json::exception& e) {
    throw InputError(std::string("TwistWord JSON: ") + e.what());
  }
}

json polynomial_to_json(const IntPolynomial& q) {
  json c = json::array();
  for (const Integer& x : q.coefficients()) c.push_back(x.get_str());
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

SweepRow sweep_row_from_report(const BoundReport& report) {
  SweepRow row;
  row.g = report.sig.genus();
  row.n = report.sig.punctures();
  row.chi = report.sig.chi();
  row.alpha_c = report.alpha_c;
  row.k_iterate = report.k_iterate;
  row.lower = report.lower;
  row.upper_fixed_genus = report.upper_fixed_genus;
  row.upper_penner = report.upper_penner;
  row.m = report.m;
  row.r = report.r;
  return row;
}

std::string format_sweep_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.g << ',' << row.n << ',' << row.chi << ',' << row.alpha_c << ','
     << row.k_iterate.get_str() << ',' << to_fraction_string(row.lower) << ','
     << optional_cell(row.upper_fixed_genus) << ',' << optional_cell(row.upper_penner) << ','
     << optional_cell(row.m) << ',' << optional_cell(row.r);
  return os.str();
}

SweepRow parse_sweep_row(const std::string& line) {
  const std::vector<std::string> c = split_csv(line);
  if (c.size() != 10)
    throw InputError("sweep CSV: expected 10 cells, got " + std::to_string(c.size()) + " in '" +
                     line + "'");
  SweepRow row;
  row.g = parse_long(c[0], "g");
  row.n = parse_long(c[1], "n");
  row.chi = parse_long(c[2], "chi");
  row.alpha_c = parse_long(c[3], "alpha_c");
  if (c[4].empty() || row.k_iterate.set_str(c[4], 10) != 0)
    throw InputError("sweep CSV: bad k_iterate '" + c[4] + "'");
  row.lower = parse_rational(c[5]);
  if (!c[6].empty()) row.upper_fixed_genus = parse_rational(c[6]);
  if (!c[7].empty()) row.upper_penner = parse_rational(c[7]);
  if (!c[8].empty()) row.m = static_cast<unsigned>(parse_long(c[8], "m"));
  if (!c[9].empty()) row.r = static_cast<unsigned>(parse_long(c[9], "r"));
  return row;
}

std::string format_sweep_table(const json& config, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# config: " << config.dump() << '\n' << kSweepHeader << '\n';
  for (const SweepRow& row : rows) os << format_sweep_row(row) << '\n';
  return os.str();
}

SweepTable parse_sweep_table(std::istream& in) {
  SweepTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# config: ", 0) == 0) {
      table.config_line = line.substr(10);
      continue;
    }
    if (line[0] == '#') continue;
    if (!header_seen) {
      if (line != kSweepHeader) throw InputError("sweep CSV: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    table.rows.push_back(parse_sweep_row(line));
  }
  if (!header_seen) throw InputError("sweep CSV: missing header line");
  return table;
}

std::optional<double> sweep_column(const SweepRow& row, const std::string& column) {
  auto rat = [](const std::optional<Rational>& q) -> std::optional<double> {
    if (!q) return std::nullopt;
    return q->get_d();
  };
  if (column == "g") return static_cast<double>(row.g);
  if (column == "n") return static_cast<double>(row.n);
  if (column == "chi") return static_cast<double>(row.chi);
  if (column == "abs_chi") return static_cast<double>(-row.chi);
  if (column == "alpha_c") return static_cast<double>(row.alpha_c);
  if (column == "k_iterate") return row.k_iterate.get_d();
  if (column == "lower") return row.lower.get_d();
  if (column == "upper_fixed_genus") return rat(row.upper_fixed_genus);
  if (column == "upper_penner") return rat(row.upper_penner);
  if (column == "m") return row.m ? std::optional<double>(*row.m) : std::nullopt;
  if (column == "r") return row.r ? std::optional<double>(*row.r) : std::nullopt;
  throw InputError("unknown sweep column '" + column + "'");
}

}  // namespace ctlen::io
