#include <gtest/gtest.h>

#include "../support/printers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fanomirror/catalog.hpp"
#include "fanomirror/json_io.hpp"
#include "fanomirror_cli/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = fano::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("fanomirror-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    auto p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"grassmannian", "--k", "2"}).code, 2);
  EXPECT_EQ(call({"period", "--order", "-1", "--catalog", "p2"}).code, 2);
  EXPECT_EQ(call({"period", "--catalog", "p2", "--emit", "bogus"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(call({"catalog", "nope"}).code, 1);
  EXPECT_EQ(call({"grassmannian", "--k", "4", "--n", "4"}).code, 1);
  TempDir dir;
  EXPECT_EQ(call({"period", "--poly", dir.file("bad.json", "{\"vars\":")}).code, 1);
  EXPECT_EQ(call({"period", "--poly", dir.path("missing.json")}).code, 1);
  std::string bad_periods = dir.file("p.json", R"({"coeffs":["1","2","3"]})");
  Outcome o = call({"frobenius", "--periods", bad_periods});
  EXPECT_EQ(o.code, 1);
  EXPECT_FALSE(o.err.empty());
}

TEST(Cli, CatalogPeriodsAreNonNegativeIntegers) {
  for (const auto& entry : fano::catalog()) {
    Outcome o = call({"period", "--catalog", entry.name, "--order", "6"});
    ASSERT_EQ(o.code, 0) << o.err;
    fano::PeriodSequence s = fano::io::parse_periods(o.out);
    ASSERT_EQ(s.coeffs.size(), 7u);
    EXPECT_EQ(s.coeffs, entry.expected_head) << entry.name;
    for (const auto& c : s.coeffs) {
      EXPECT_TRUE(c.has_integer_coefficients());
      EXPECT_TRUE(c.has_nonnegative_coefficients());
    }
  }
}

TEST(Cli, PeriodFromFileMatchesCatalogAndIsDeterministic) {
  TempDir dir;
  std::string poly = dir.file("p2.json", fano::io::laurent_to_json(fano::catalog_entry("p2").mirror));
  Outcome a = call({"period", "--poly", poly, "--order", "9"});
  Outcome b = call({"period", "--catalog", "p2", "--order", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, call({"period", "--poly", poly, "--order", "9"}).out);
  EXPECT_EQ(fano::io::parse_periods(a.out).coeffs, fano::io::parse_periods(b.out).coeffs);
  std::string target = dir.path("out.json");
  EXPECT_EQ(call({"period", "--poly", poly, "--order", "9", "--out", target}).code, 0);
  std::ifstream in(target);
  std::string written((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(written, a.out);
}

TEST(Cli, QModeOne) {
  Outcome o = call({"period", "--catalog", "p1xp1", "--order", "4", "--q", "one"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto s = fano::io::parse_periods(o.out);
  EXPECT_EQ(s.coeffs[4], fano::QPolynomial(36));
}

TEST(Cli, PolytopeOutput) {
  Outcome o = call({"polytope", "--catalog", "p2", "--max-r", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  fano::io::PolytopeDocument doc = fano::io::parse_polytope(o.out);
  EXPECT_EQ(doc.vertices.size(), 3u);
  // The polar of the P^2 fan polytope is the triangle with 1, 10, 28, 55 points.
  EXPECT_EQ(doc.lattice_counts.at(1), 10);
  EXPECT_EQ(doc.lattice_counts.at(3), 55);
  ASSERT_TRUE(doc.flags.has_value());
  EXPECT_TRUE(doc.flags->origin_interior);
}

TEST(Cli, GrassmannianEmits) {
  Outcome w = call({"grassmannian", "--k", "2", "--n", "4"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(fano::io::parse_laurent(w.out).size(), 6u);
  Outcome v = call({"grassmannian", "--k", "2", "--n", "5", "--emit", "valuations"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(json::parse(v.out).empty());
  Outcome p = call({"grassmannian", "--k", "2", "--n", "4", "--emit", "periods", "--order", "4"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(fano::io::parse_periods(p.out).coeffs[4], fano::QPolynomial::monomial(48, 1));
  Outcome nob = call({"grassmannian", "--k", "2", "--n", "4", "--emit", "polytope", "--max-r", "1"});
  ASSERT_EQ(nob.code, 0) << nob.err;
  EXPECT_EQ(fano::io::parse_polytope(nob.out).lattice_counts.at(1), 105);
}

TEST(Cli, FrobeniusTableAndSeries) {
  Outcome t = call({"frobenius", "--catalog", "p2", "--max-p", "3"});
  ASSERT_EQ(t.code, 0) << t.err;
  fano::StructureTable table = fano::io::parse_table(t.out, 3);
  EXPECT_EQ(table.entry(1, 2, 0), fano::QPolynomial::monomial(6, 1));
  EXPECT_NE(t.err.find("associativity: 0"), std::string::npos) << t.err;
  Outcome s = call({"frobenius", "--catalog", "p2", "--max-p", "2", "--emit", "series"});
  ASSERT_EQ(s.code, 0) << s.err;
  auto series = fano::io::parse_series(s.out);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[1].tail(2), fano::QPolynomial::monomial(2, 1));
  TempDir dir;
  std::string periods = dir.file("p.json", R"({"index":3,"coeffs":["1","0","0","6","0","0","90","0","0","1680"]})");
  Outcome f = call({"frobenius", "--periods", periods, "--max-p", "2", "--emit", "series"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(fano::io::parse_series(f.out)[1].tail(5), fano::QPolynomial::monomial(5, 2));
}

TEST(Cli, CatalogListing) {
  Outcome o = call({"catalog"});
  ASSERT_EQ(o.code, 0);
  for (const auto& e : fano::catalog()) EXPECT_NE(o.out.find(e.name), std::string::npos);
  EXPECT_EQ(call({"catalog", "p1"}).code, 0);
}
