#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "asigma/census.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"

using namespace asigma;
namespace fs = std::filesystem;

namespace {

class Census : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("asigma_census_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::vector<CensusEntry> three() {
  return {make_census_entry(find_minimizers({6, 2, GraphClass::connected}, 0.4)),
          make_census_entry(find_minimizers({10, 6, GraphClass::tree}, 0.5)),
          make_census_entry(find_minimizers({9, 6, GraphClass::tree}, 0.1234567890123))};
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_F(Census, RoundTrip) {
  auto entries = three();
  census_store(entries, path("c.jsonl"));
  CensusLoad load = census_load(path("c.jsonl"));
  EXPECT_TRUE(load.warnings.empty());
  ASSERT_EQ(load.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(census_line(load.entries[i]), census_line(entries[i]));
    EXPECT_EQ(load.entries[i].record.min_lambda, entries[i].record.min_lambda);
  }
  EXPECT_TRUE(census_find(load.entries, entries[1].key()).has_value());
  EXPECT_FALSE(census_find(load.entries, {7, 2, 0.4, GraphClass::connected}).has_value());
}

TEST_F(Census, DuplicateKeyLaterWins) {
  auto entries = three();
  CensusEntry again = entries[0];
  again.timestamp = "2030-01-01T00:00:00Z";
  census_store(entries, path("d.jsonl"));
  census_store({again}, path("d.jsonl"));
  CensusLoad load = census_load(path("d.jsonl"));
  ASSERT_EQ(load.entries.size(), 3u);
  ASSERT_EQ(load.warnings.size(), 1u);
  EXPECT_NE(load.warnings[0].find(":4:"), std::string::npos) << load.warnings[0];
  EXPECT_EQ(load.entries[0].timestamp, "2030-01-01T00:00:00Z");
}

TEST_F(Census, TruncatedFinalLineNamesLine) {
  census_store(three(), path("t.jsonl"));
  std::string text = slurp(path("t.jsonl"));
  text.resize(text.size() - 20);
  std::ofstream(path("t.jsonl"), std::ios::trunc) << text;
  try {
    census_load(path("t.jsonl"));
    FAIL();
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("t.jsonl:3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("truncated"), std::string::npos) << msg;
  }
}

TEST_F(Census, CorruptMiddleLine) {
  census_store(three(), path("m.jsonl"));
  std::string text = slurp(path("m.jsonl"));
  auto nl = text.find('\n');
  text.insert(nl + 1, "{not json}\n");
  std::ofstream(path("m.jsonl"), std::ios::trunc) << text;
  EXPECT_THROW(
      {
        try {
          census_load(path("m.jsonl"));
        } catch (const std::runtime_error& e) {
          EXPECT_NE(std::string(e.what()).find("m.jsonl:2"), std::string::npos);
          throw;
        }
      },
      std::runtime_error);
}

TEST_F(Census, PayloadRevalidation) {
  CensusEntry e = three()[1];
  CensusEntry wrong_lambda = e;
  wrong_lambda.record.min_lambda += 1e-3;
  census_store({wrong_lambda}, path("l.jsonl"));
  EXPECT_THROW(census_load(path("l.jsonl")), std::runtime_error);

  CensusEntry not_canonical = e;
  not_canonical.record.minimizers = {to_graph6(d_graph(10))};
  ASSERT_NE(not_canonical.record.minimizers[0], e.record.minimizers[0]);
  census_store({not_canonical}, path("n.jsonl"));
  EXPECT_THROW(census_load(path("n.jsonl")), std::runtime_error);

  CensusEntry wrong_alpha = e;
  wrong_alpha.record.alpha = 7;
  census_store({wrong_alpha}, path("a.jsonl"));
  EXPECT_THROW(census_load(path("a.jsonl")), std::runtime_error);
}

TEST_F(Census, MissingFile) { EXPECT_THROW(census_load(path("absent.jsonl")), std::runtime_error); }
