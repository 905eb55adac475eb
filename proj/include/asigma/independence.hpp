#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "asigma/graph.hpp"

namespace asigma {

struct IndependenceCertificate {
  int alpha = 0;
  VertexSet witness;
};

// Exact. Trees go through a linear dynamic program, everything else through
// branch and bound.
IndependenceCertificate independence_number(const Graph& g);

// Maximum independent set inside the vertex mask `allowed`.
IndependenceCertificate max_independent_within(const Graph& g, std::uint64_t allowed);

IndependenceCertificate tree_independence(const Graph& t);

// A maximum independent set containing every leaf. P_2 has none (its two
// leaves are adjacent); that case returns nullopt.
std::optional<VertexSet> leaf_containing_mis(const Graph& t);

struct AlternatingClassification {
  bool consistent = true;
  VertexSet odd;      // non-leaves at odd distance along end-branch-point paths
  VertexSet even;     // non-leaves at even distance
  VertexSet leaf_set;
  std::string conflict;  // set when !consistent
};

// Parity classes of the non-leaf vertices along paths between end branch
// points. Requires a tree with at least two end branch points.
AlternatingClassification alternating_classification(const Graph& t);

}  // namespace asigma
