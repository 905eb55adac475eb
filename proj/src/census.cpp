#include "asigma/census.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "asigma/canonical.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/spectral.hpp"

namespace asigma {

namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Re-derives what the record claims about each stored graph.
void validate(const SearchRecord& r) {
  if (r.minimizers.empty()) throw std::runtime_error("record lists no minimizers");
  check_sigma(r.sigma);
  double window = r.tie_tol * std::max(1.0, r.min_lambda) + 1e-10;
  for (const std::string& code : r.minimizers) {
    Graph g = from_graph6(code);
    if (canonical_code(g) != code) throw std::runtime_error("graph6 '" + code + "' is not in canonical form");
    if (g.order() != r.n) throw std::runtime_error("graph6 '" + code + "' has the wrong order");
    if (r.cls == GraphClass::tree ? !is_tree(g) : !is_connected(g)) {
      throw std::runtime_error("graph6 '" + code + "' is outside the class " + to_string(r.cls));
    }
    if (independence_number(g).alpha != r.alpha) {
      throw std::runtime_error("graph6 '" + code + "' has the wrong independence number");
    }
    double l = largest_eigenvalue(g, r.sigma);
    if (l < r.min_lambda - 1e-10 || l > r.min_lambda + window) {
      throw std::runtime_error("graph6 '" + code + "' has lambda outside the recorded tie window");
    }
  }
}

}  // namespace

CensusEntry make_census_entry(const SearchRecord& record) {
  return {record, ASIGMA_VERSION, utc_now()};
}

std::string census_line(const CensusEntry& e) {
  using nlohmann::json;
  return "{\"version\":" + json(e.version).dump() + ",\"timestamp\":" + json(e.timestamp).dump() +
         ",\"record\":" + to_json(e.record) + "}";
}

CensusEntry census_entry_from_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  CensusEntry e;
  e.version = j.at("version").get<std::string>();
  e.timestamp = j.at("timestamp").get<std::string>();
  e.record = search_record_from_json(j.at("record").dump());
  return e;
}

void census_store(const std::vector<CensusEntry>& entries, const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open census file '" + path + "' for writing");
  for (const auto& e : entries) out << census_line(e) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write to census file '" + path + "' failed");
}

CensusLoad census_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open census file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CensusLoad out;
  std::map<CensusKey, std::size_t> index;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    bool terminated = nl != std::string::npos;
    std::string line = text.substr(pos, terminated ? nl - pos : std::string::npos);
    pos = terminated ? nl + 1 : text.size();
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto where = path + ":" + std::to_string(lineno);
    CensusEntry e;
    try {
      e = census_entry_from_line(line);
      validate(e.record);
    } catch (const std::exception& ex) {
      std::string why = terminated ? "corrupt record" : "truncated final record";
      throw std::runtime_error(where + ": " + why + ": " + ex.what());
    }
    auto [it, fresh] = index.try_emplace(e.key(), out.entries.size());
    if (fresh) {
      out.entries.push_back(std::move(e));
    } else {
      out.warnings.push_back(where + ": duplicate key (n=" + std::to_string(e.record.n) + ", alpha=" +
                             std::to_string(e.record.alpha) + ", sigma=" + nlohmann::json(e.record.sigma).dump() +
                             ", class=" + to_string(e.record.cls) + "), later record wins");
      out.entries[it->second] = std::move(e);
    }
  }
  return out;
}

std::optional<CensusEntry> census_find(const std::vector<CensusEntry>& entries, const CensusKey& key) {
  for (const auto& e : entries) {
    if (e.key() == key) return e;
  }
  return std::nullopt;
}

}  // namespace asigma
