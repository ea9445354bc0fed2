#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ctlen/cli.hpp"
#include "ctlen/errors.hpp"
#include "ctlen/io.hpp"

using namespace ctlen;
using io::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("ctlen_test_" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST_CASE("rational and integer parsing") {
  CHECK(io::parse_rational("3/6") == Rational(1, 2));
  CHECK(io::parse_rational("-7") == -7);
  CHECK(io::parse_rational("123456789012345678901234567890/7") ==
        make_rational(Integer("123456789012345678901234567890"), 7));
  CHECK(io::parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(io::parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(io::parse_rational("x"), InputError);
  CHECK_THROWS_AS(io::parse_rational(""), InputError);
  CHECK(io::integer_from_json(json("-42")) == -42);
  CHECK(io::integer_from_json(json(17)) == 17);
  CHECK_THROWS_AS(io::integer_from_json(json("4.5")), InputError);
  CHECK(to_fraction_string(Rational(3)) == "3/1");
}

TEST_CASE("matrix JSON round trip") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + trial % 3;
    std::vector<Integer> e(r * c);
    for (auto& x : e) x = Integer(d(rng)) * Integer(d(rng)) * Integer(d(rng));
    const IntMatrix m(r, c, e);
    CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    CHECK(io::rows_from_json(io::rows_to_json(m)) == m);
  }
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[["1","2"]]})")),
                  InputError);
  CHECK_THROWS_AS(io::rows_from_json(json::parse(R"([["1"],["2","3"]])")), InputError);
}

TEST_CASE("PennerSpec JSON round trip") {
  std::mt19937_64 rng(52);
  PennerSpec spec = PennerSpec::random_positive(3, 9, 5, rng);
  spec.mode = ShadowMode::pattern;
  spec.chi = ChiModel{-4, 2};
  const PennerSpec back = io::penner_spec_from_json(io::penner_spec_to_json(spec));
  CHECK(back.r == spec.r);
  CHECK(back.m == spec.m);
  CHECK(back.blocks == spec.blocks);
  CHECK(back.mode == spec.mode);
  CHECK(back.chi == spec.chi);
}

TEST_CASE("TwistWord JSON round trip") {
  const TwistWord w = psi_preset(3, 2);
  const TwistWord back = io::twist_word_from_json(io::twist_word_to_json(w));
  CHECK(back.space == w.space);
  REQUIRE(back.letters.size() == w.letters.size());
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    CHECK(back.letters[i].cls == w.letters[i].cls);
    CHECK(back.letters[i].sign == w.letters[i].sign);
  }
  const json j = io::twist_word_to_json(w);
  CHECK(j.at("genus") == 3);
  CHECK(j.at("letters").size() == 8);
  CHECK_THROWS_AS(io::twist_word_from_json(json::parse(R"({"genus":1,"letters":[{"class":[1],"sign":1}]})")),
                  InputError);
}

TEST_CASE("sweep row round trip") {
  io::SweepRow row;
  row.g = 7;
  row.n = 0;
  row.chi = -12;
  row.alpha_c = 3;
  row.k_iterate = 684;
  row.lower = Rational(1, 684);
  row.upper_penner = Rational(1, 6);
  row.m = 6;
  row.r = 2;
  const std::string line = io::format_sweep_row(row);
  CHECK(line == "7,0,-12,3,684,1/684,,1/6,6,2");
  CHECK(io::parse_sweep_row(line) == row);
  CHECK(io::sweep_column(row, "upper_penner") == doctest::Approx(1.0 / 6));
  CHECK_FALSE(io::sweep_column(row, "upper_fixed_genus").has_value());
  CHECK_THROWS_AS(io::parse_sweep_row("1,2,3"), InputError);
  CHECK_THROWS_AS(io::sweep_column(row, "nope"), InputError);

  const io::SweepRow fixed = io::sweep_row_from_report(make_report(SurfaceSig(2, 50), 1));
  CHECK(io::format_sweep_row(fixed) == "2,50,-52,1,1528,1/1528,1/25,,,");
  CHECK(io::parse_sweep_row(io::format_sweep_row(fixed)) == fixed);
}

TEST_CASE("sweep table round trip") {
  std::vector<io::SweepRow> rows;
  for (long n = 1; n <= 20; ++n) rows.push_back(io::sweep_row_from_report(make_report(SurfaceSig(1, n), 2)));
  const std::string text = io::format_sweep_table(json{{"command", "test"}, {"seed", 5}}, rows);
  std::istringstream in(text);
  const io::SweepTable table = io::parse_sweep_table(in);
  REQUIRE(table.config_line.has_value());
  CHECK(json::parse(*table.config_line).at("seed") == 5);
  CHECK(table.rows == rows);

  std::istringstream bad_header("g,n\n1,2\n");
  CHECK_THROWS_AS(io::parse_sweep_table(bad_header), InputError);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli({}).code == cli::kExitBadInput);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitBadInput);
  CHECK(run_cli({"penner"}).code == cli::kExitBadInput);
  CHECK(run_cli({"bounds", "report", "--genus", "2"}).code == cli::kExitBadInput);
  CHECK(run_cli({"bounds", "report", "--genus", "1", "--punctures", "0", "--alpha-c", "1"}).code ==
        cli::kExitBadInput);
  CHECK(run_cli({"symfun", "enumerate", "--degree", "3", "--delta", "2"}).code == cli::kExitBadInput);
  CHECK(run_cli({"homology", "escape", "--matrix", "/nonexistent/ctlen.json"}).code == cli::kExitBadInput);
}

TEST_CASE("cli: bounds report") {
  const RunResult r = run_cli({"bounds", "report", "--genus", "2", "--punctures", "50", "--alpha-c", "1"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("lower") == "1/1528");
  CHECK(j.at("k_iterate") == "1528");
  CHECK(j.at("upper_fixed_genus") == "1/25");
  CHECK(j.at("decomposition_holds") == true);
  CHECK(j.at("config").at("alpha_c") == 1);
  CHECK(j.at("branch_budget").at("real") == "468");
}

TEST_CASE("cli: penner certify") {
  const RunResult r = run_cli({"penner", "certify"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("certificate").at("certified") == true);
  CHECK(j.at("certificate").at("t") == 2);
  CHECK(j.at("bound").at("exact_bound") == "1/6");
  CHECK(j.at("config").at("m") == 6);

  TempDir dir;
  PennerSpec spec = PennerSpec::all_ones(2, 9);
  write(dir.file("spec.json"), io::dump(io::penner_spec_to_json(spec)));
  const RunResult r2 = run_cli({"penner", "certify", "--config", dir.file("spec.json"), "--out", dir.file("o.json")});
  CHECK(r2.code == cli::kExitOk);
  CHECK(r2.out.empty());
  CHECK(json::parse(slurp(dir.file("o.json"))).at("bound").at("exact_bound") == "2/27");

  write(dir.file("bad.json"), "{\"r\": 1, \"m\": 6}");
  CHECK(run_cli({"penner", "certify", "--config", dir.file("bad.json")}).code == cli::kExitBadInput);
  write(dir.file("junk.json"), "{not json");
  CHECK(run_cli({"penner", "certify", "--config", dir.file("junk.json")}).code == cli::kExitBadInput);
}

TEST_CASE("cli: symfun commands") {
  const RunResult e = run_cli({"symfun", "enumerate", "--degree", "2", "--delta", "2"});
  CHECK(e.code == cli::kExitOk);
  const json j = json::parse(e.out);
  CHECK(j.at("count") == 5);
  CHECK(j.at("polynomials").at(0) == json::array({"1", "-2", "1"}));

  const RunResult n = run_cli({"symfun", "newton-check", "--degree", "6", "--trials", "20", "--seed", "9"});
  CHECK(n.code == cli::kExitOk);
  std::istringstream lines(n.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# config: ", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "seed,N,result");
  std::getline(lines, line);
  CHECK(line == "9,6,pass");
  int count = 1;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 20);
}

TEST_CASE("cli: homology commands") {
  const RunResult r = run_cli({"homology", "lefschetz", "--genus", "2", "--psi", "1"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("symplectic") == true);
  CHECK(j.at("config").at("word").at("letters").size() == 5);

  TempDir dir;
  write(dir.file("word.json"), R"({"genus": 2, "letters": [{"class": [1,0,0,0], "sign": 1},
                                                           {"class": [0,0,1,0], "sign": -1}]})");
  const RunResult w = run_cli({"homology", "lefschetz", "--genus", "2", "--word", dir.file("word.json")});
  CHECK(w.code == cli::kExitOk);
  CHECK(json::parse(w.out).at("lefschetz") == "-2");
  CHECK(run_cli({"homology", "lefschetz", "--genus", "3", "--word", dir.file("word.json")}).code ==
        cli::kExitBadInput);
  CHECK(run_cli({"homology", "lefschetz", "--genus", "2"}).code == cli::kExitBadInput);

  write(dir.file("cat.json"), io::dump(io::matrix_to_json(IntMatrix{{2, 1}, {1, 1}})));
  const RunResult c = run_cli({"homology", "escape", "--matrix", dir.file("cat.json")});
  CHECK(c.code == cli::kExitOk);
  CHECK(json::parse(c.out).at("result") == json{{"kind", "escape_at"}, {"value", 1}});

  write(dir.file("rot.json"), io::dump(io::matrix_to_json(IntMatrix{{0, -1}, {1, 0}})));
  const json rot = json::parse(run_cli({"homology", "escape", "--matrix", dir.file("rot.json")}).out);
  CHECK(rot.at("result") == json{{"kind", "periodic"}, {"value", 4}});
  CHECK(rot.at("cyclotomic_product") == true);

  write(dir.file("sing.json"), io::dump(io::matrix_to_json(IntMatrix{{1, 1}, {1, 1}})));
  CHECK(run_cli({"homology", "escape", "--matrix", dir.file("sing.json")}).code == cli::kExitBadInput);
}

TEST_CASE("cli: sweeps are deterministic and fit reads them back losslessly") {
  TempDir dir;
  const std::vector<std::string> penner{"penner", "sweep", "--r", "2", "--m-min", "4", "--m-max", "24",
                                        "--random-blocks"};
  auto with = [](std::vector<std::string> v, std::initializer_list<std::string> extra) {
    v.insert(v.end(), extra);
    return v;
  };
  REQUIRE(run_cli(with(penner, {"--seed", "7", "--threads", "1", "--out", dir.file("a.csv")})).code == cli::kExitOk);
  REQUIRE(run_cli(with(penner, {"--seed", "7", "--threads", "4", "--out", dir.file("b.csv")})).code == cli::kExitOk);
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));
  const RunResult other = run_cli(with(penner, {"--seed", "8"}));
  CHECK(other.code == cli::kExitOk);
  CHECK(other.out != slurp(dir.file("a.csv")));

  const RunResult fit = run_cli({"bounds", "fit", "--in", dir.file("a.csv")});
  CHECK(fit.code == cli::kExitOk);
  const json f = json::parse(fit.out);
  CHECK(f.at("lossless") == true);
  CHECK(f.at("points") == 21);
  CHECK(f.at("config").at("x") == "m");

  REQUIRE(run_cli({"bounds", "sweep", "--genus", "2", "--n-min", "10", "--n-max", "1000", "--out",
                   dir.file("n.csv")})
              .code == cli::kExitOk);
  const json fn = json::parse(run_cli({"bounds", "fit", "--in", dir.file("n.csv")}).out);
  CHECK(fn.at("lossless") == true);
  CHECK(fn.at("slope").get<double>() == doctest::Approx(-1.0).epsilon(1e-12));

  // A hand-edited table that no longer re-serializes identically is flagged.
  std::string text = slurp(dir.file("n.csv"));
  text.replace(text.find("1/5,"), 4, "2/10,");
  write(dir.file("edited.csv"), text);
  const RunResult lossy = run_cli({"bounds", "fit", "--in", dir.file("edited.csv")});
  CHECK(lossy.code == cli::kExitFailure);
  CHECK(json::parse(lossy.out).at("lossless") == false);
}
