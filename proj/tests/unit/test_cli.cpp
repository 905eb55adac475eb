#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "asigma/canonical.hpp"
#include "asigma/cli.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"

using namespace asigma;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = cli_main(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpectralPrintsFifteenDigits) {
  Result r = run({"spectral", to_graph6(f_graph(3, 3)), "--sigma", "0.5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2.50000000000000\n");
  r = run({"spectral", to_graph6(path_graph(5)), "--sigma", "0"});
  EXPECT_EQ(r.out.substr(0, 14), "1.732050807568");
}

TEST(Cli, SpectralJsonAndStdin) {
  Result r = run({"spectral", "-", "--sigma", "0.25", "--json"}, "Bw\nC~\n");
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("perron"));
    ++count;
  }
  EXPECT_EQ(count, 2);
}

TEST(Cli, AlphaAndFamily) {
  Result d10 = run({"family", "d_graph:10"});
  ASSERT_EQ(d10.status, 0);
  std::string code = d10.out.substr(0, d10.out.size() - 1);
  EXPECT_EQ(run({"alpha", code}).out, "6\n");
  EXPECT_EQ(run({"family", "nope:1"}).status, 2);
}

TEST(Cli, SearchF33) {
  Result r = run({"search", "--n", "6", "--alpha", "2", "--sigma", "0.4", "--class", "graph"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["minimizers"], nlohmann::json::array({canonical_code(f_graph(3, 3))}));
  EXPECT_NE(r.out.find("\"min_lambda\":2.47177978870"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({"spectral", "C~"}).status, 2);
  EXPECT_EQ(run({"spectral", "C~~", "--sigma", "0.5"}).status, 2);
  EXPECT_EQ(run({"spectral", "C~", "--sigma", "1.5"}).status, 2);
  EXPECT_EQ(run({"search", "--n", "6", "--alpha", "9", "--sigma", "0.4"}).status, 2);
  EXPECT_EQ(run({"verify"}).status, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).status, 2);
  EXPECT_EQ(run({"verify", "--check", "nope"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, VerifyExitStatus) {
  Result ok = run({"verify", "--check", "path_radius", "--seed", "3"});
  EXPECT_EQ(ok.status, 0);
  auto header = nlohmann::json::parse(ok.out.substr(0, ok.out.find('\n')));
  EXPECT_EQ(header["seed"], 3);
  Result bad = run({"verify", "--check", "degree_bound", "--param", "instances=10"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("\"status\":\"fail\""), std::string::npos);
}

TEST(Cli, Candidates) {
  Result r = run({"candidates", "--n", "19", "--refined"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"counts\":[4,2,2,4]"), std::string::npos) << r.out;
}

TEST(Cli, CensusDeterminismAndTransfer) {
  fs::path dir = fs::temp_directory_path() / ("asigma_cli_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  std::string store = (dir / "store.jsonl").string();
  std::vector<std::string> args = {"search", "--n", "10", "--alpha", "6", "--sigma", "0.3", "--sigma", "0.7",
                                   "--census", store};
  Result first = run(args);
  ASSERT_EQ(first.status, 0) << first.err;
  Result second = run(args);
  EXPECT_EQ(second.status, 0) << second.err;
  EXPECT_EQ(first.out, second.out);

  std::string exported = (dir / "export.jsonl").string();
  EXPECT_EQ(run({"census", "--store", store, "export", exported}).status, 0);
  std::string other = (dir / "other.jsonl").string();
  EXPECT_EQ(run({"census", "--store", other, "import", exported}).status, 0);
  EXPECT_EQ(run({"search", "--n", "10", "--alpha", "6", "--sigma", "0.3", "--census", other}).status, 0);

  // Tamper with a cached payload: the fresh search no longer matches bit-for-bit.
  std::ifstream in(store);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = text.find("\"tie_tol\":1e-09");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 15, "\"tie_tol\":2e-09");
  std::ofstream(store, std::ios::trunc) << text;
  EXPECT_EQ(run(args).status, 1);

  std::ofstream(store, std::ios::app) << "{\"version\":";
  Result broken = run(args);
  EXPECT_EQ(broken.status, 1);
  EXPECT_NE(broken.err.find("store.jsonl:3"), std::string::npos) << broken.err;
  fs::remove_all(dir);
}
