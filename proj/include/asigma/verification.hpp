#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "asigma/graph.hpp"

namespace asigma {

using CheckParams = nlohmann::json;

enum class CheckStatus { pass, fail, skipped, info };
std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string id;
  CheckParams params;
  CheckStatus status = CheckStatus::pass;
  long instances = 0;
  std::optional<double> margin;  // smallest slack seen on strict or one-sided claims
  std::string witness;           // always set on failure
  std::string reproduce;         // CLI command reproducing the witness, if any
  std::string detail;
  double seconds = 0.0;
};

nlohmann::json to_json(const CheckOutcome& o);

// Registered check ids in suite order.
const std::vector<std::string>& check_ids();
std::string check_description(const std::string& id);
std::vector<std::string> suite_checks(const std::string& suite);
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for unknown ids or bad parameters.
CheckOutcome run_check(const std::string& id, const CheckParams& params = CheckParams::object());

// Runs the suite's checks concurrently; a check that has not started when the
// budget runs out is reported as skipped. Outcomes are sorted by check id.
std::vector<CheckOutcome> run_suite(const std::string& suite, double budget_seconds,
                                    std::uint64_t seed = 1, unsigned threads = 0);

// Seeded instance generators shared with the tests.
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng);
Graph random_bipartite_connected(int n, int extra_edges, std::mt19937_64& rng);
// Two copies of a random connected graph joined by mirrored cross edges.
// Vertex i and vertex i + n/2 are swapped by an automorphism.
Graph random_mirror_graph(int half, std::mt19937_64& rng);

}  // namespace asigma
