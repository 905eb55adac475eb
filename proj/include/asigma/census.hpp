#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asigma/search.hpp"

namespace asigma {

struct CensusKey {
  int n = 0;
  int alpha = 0;
  double sigma = 0.0;
  GraphClass cls = GraphClass::tree;
  friend bool operator==(const CensusKey&, const CensusKey&) = default;
  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct CensusEntry {
  SearchRecord record;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
  CensusKey key() const { return {record.n, record.alpha, record.sigma, record.cls}; }
};

CensusEntry make_census_entry(const SearchRecord& record);

// One JSON object per line; the record keeps its exact min_lambda text.
std::string census_line(const CensusEntry& e);
CensusEntry census_entry_from_line(const std::string& line);

// Appends to the file, creating it if needed.
void census_store(const std::vector<CensusEntry>& entries, const std::string& path);

struct CensusLoad {
  std::vector<CensusEntry> entries;  // first-seen key order, later records win
  std::vector<std::string> warnings;
};

// Throws std::runtime_error naming the line on malformed, truncated or
// inconsistent records (non-canonical graph6, wrong order or independence
// number, minimiser outside the recorded tie window).
CensusLoad census_load(const std::string& path);

std::optional<CensusEntry> census_find(const std::vector<CensusEntry>& entries, const CensusKey& key);

}  // namespace asigma
