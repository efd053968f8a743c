#include "fixtures.hpp"

#include "igrass/cli.hpp"
#include "igrass/igrass.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace igrass;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source_path(const std::string& rel) { return std::string(IGRASS_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, CountRange) {
  const auto r = run({"count", "--range", "4..8"});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_EQ(r.out, "1,2,2,4,4\n");
  EXPECT_EQ(run({"count", "--n", "7", "--oracle"}).out, "4\n");
  EXPECT_EQ(run({"count", "--range", "9..12"}).out, run({"count", "--range", "9..12", "--oracle"}).out);
}

TEST(Cli, RelationsText) {
  const auto r = run({"relations", "--n", "4"});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_EQ(r.out, "g_1234 = +T12*T34 -T13*T24 +T14*T23\n");
  EXPECT_EQ(lines(run({"relations", "--n", "6"}).out).size(), 15u);
}

TEST(Cli, RelationsJson) {
  const auto j = json::parse(run({"relations", "--n", "5", "--format", "json"}).out);
  EXPECT_EQ(j.at("n"), 5);
  ASSERT_EQ(j.at("relations").size(), 5u);
  const auto& first = j.at("relations")[0];
  EXPECT_EQ(first.at("quad"), json::array({1, 2, 3, 4}));
  EXPECT_EQ(first.at("terms")[1], json::parse("[-1, [1, 3], [2, 4]]"));
}

TEST(Cli, EnumerateFanoCsv) {
  const auto r = run({"enumerate", "--n", "5", "--fano", "--format", "csv"});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "no,n,matrix,antican,h0");
  for (int row = 0; row < 2; ++row) {
    const auto g = fixtures::published_grading(fixtures::published_rows()[static_cast<std::size_t>(row)]);
    EXPECT_NE(ls[static_cast<std::size_t>(row) + 1].find(cli::matrix_string(g)), std::string::npos) << ls[row + 1];
  }
  EXPECT_EQ(ls[1], "1,5,\"[1 1 1 0 1 1 0 1 0 0; 0 0 0 1 0 0 1 0 1 1]\",\"(3,2)\",280");
}

TEST(Cli, EnumerateNeedsAFamilyBound) {
  const auto r = run({"enumerate", "--n", "5"});
  EXPECT_EQ(r.code, cli::exit_validation);
  const auto j = json::parse(r.err);
  EXPECT_EQ(j.at("error"), "invalid-parameter");
  EXPECT_EQ(lines(run({"enumerate", "--n", "5", "--max-alpha", "2", "--no-h0", "--format", "csv"}).out).size(), 1u + 4u);
}

TEST(Cli, TableMatchesGoldenFile) {
  const auto r = run({"table", "--n-from", "5", "--n-to", "8", "--format", "md"});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  EXPECT_EQ(r.out, slurp(source_path("tests/golden/table_5_8.md")));
}

TEST(Cli, TableIsIndependentOfJobs) {
  const auto one = run({"table", "--n-from", "5", "--n-to", "7", "--format", "csv", "--jobs", "1"});
  const auto many = run({"table", "--n-from", "5", "--n-to", "7", "--format", "csv", "--jobs", "4"});
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(lines(one.out).size(), 1u + 8u);
}

TEST(Cli, TableWithoutH0) {
  const auto r = run({"table", "--no-h0"});
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u + 12u);
  EXPECT_EQ(ls[0], "| No. | n | Q | -K_X |");
  EXPECT_EQ(ls[13].substr(ls[13].size() - 9), "| (2,6) |");
}

TEST(Cli, TableJsonRoundTrips) {
  const auto arr = json::parse(run({"table", "--n-from", "5", "--n-to", "6", "--format", "json"}).out);
  ASSERT_EQ(arr.size(), 4u);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto v = variety_from_json(arr[i]);
    EXPECT_EQ(to_json(v).at("matrix"), arr[i].at("matrix"));
    const auto& row = fixtures::published_rows()[i];
    EXPECT_EQ(v, fixtures::published_variety(row));
  }
  EXPECT_EQ(arr[0].at("h0"), "280");
}

TEST(Cli, ValidateAndAnalyze) {
  const auto v = run({"validate", "--matrix", source_path("samples/row1_grading.json"), "--format", "json"});
  ASSERT_EQ(v.code, cli::exit_ok) << v.err;
  const auto j = json::parse(v.out);
  EXPECT_TRUE(j.at("homogeneous").get<bool>());
  EXPECT_EQ(j.at("moving_cone"), "cone((1,0),(0,1))");

  const auto a = run({"analyze", "--matrix", source_path("samples/row2_grading.json"), "--ample", "1,2", "--json"});
  const auto k = json::parse(a.out);
  EXPECT_EQ(k.at("smoothness"), "smooth");
  EXPECT_EQ(k.at("anticanonical"), "(1,4)");
  EXPECT_EQ(k.at("fano"), "fano");

  const auto bad = json::parse(
      run({"analyze", "--matrix", source_path("samples/not_smooth_grading.json"), "--ample", "1,1", "--json"}).out);
  EXPECT_EQ(bad.at("smoothness"), "not-smooth");
  EXPECT_EQ(bad.at("witness"), "{12,14}");
}

TEST(Cli, Hilbert) {
  const auto r = run({"hilbert", "--matrix", source_path("samples/row1_grading.json"), "--degree", "3,2", "--oracle"});
  EXPECT_EQ(r.code, cli::exit_ok) << r.err;
  EXPECT_EQ(r.out, "280\noracle: 280\n");
  EXPECT_EQ(run({"hilbert", "--matrix", source_path("samples/row1_grading.json"), "--degree", "1,1"}).out, "20\n");
}

TEST(Cli, Geometry) {
  const auto r = run({"geometry", "--variety", source_path("samples/type3_variety.json"), "--json"});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("dim_x"), 6);
  EXPECT_EQ(j.at("contractions")[0].at("kind"), "divisorial");
  EXPECT_TRUE(j.at("fujita").get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count", "--bogus"}).code, cli::exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"relations"}).code, cli::exit_usage);
  EXPECT_EQ(run({"count", "--range", "4-8"}).code, cli::exit_validation);
  EXPECT_EQ(run({"count", "--n", "3"}).code, cli::exit_validation);
  EXPECT_EQ(run({"analyze", "--matrix", source_path("samples/row1_grading.json"), "--ample", "1"}).code,
            cli::exit_validation);
  EXPECT_EQ(run({"geometry", "--variety", source_path("samples/row1_grading.json")}).code, cli::exit_validation);
  EXPECT_EQ(run({"count", "--help"}).code, cli::exit_ok);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"enumerate", "--n", "6", "--almost-fano", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
