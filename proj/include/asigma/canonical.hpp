#pragma once

#include <string>
#include <vector>

#include "asigma/graph.hpp"

namespace asigma {

struct CanonicalLabeling {
  std::vector<int> order;  // order[i] is the vertex placed at canonical position i
  Graph form;              // g relabelled so that order[i] becomes i
};

// Individualisation-refinement with automorphism pruning. The returned form
// is identical for isomorphic inputs.
CanonicalLabeling canonical_labeling(const Graph& g);

// graph6 string of the canonical form.
std::string canonical_code(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace asigma
