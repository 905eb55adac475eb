#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "asigma/enumeration.hpp"
#include "asigma/families.hpp"
#include "asigma/graph.hpp"

namespace asigma {

enum class GraphClass { tree, connected };

std::string to_string(GraphClass c);
// Accepts "tree", "connected" and "graph".
GraphClass parse_graph_class(const std::string& s);

struct SearchSpace {
  int n = 1;
  std::optional<int> alpha;
  GraphClass cls = GraphClass::tree;
};

struct SearchRecord {
  int n = 0;
  int alpha = 0;
  double sigma = 0.0;
  GraphClass cls = GraphClass::tree;
  double min_lambda = 0.0;
  double tie_tol = 1e-9;
  std::vector<std::string> minimizers;  // canonical graph6, sorted
};

struct SearchOptions {
  double tie_tol = 1e-9;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Exhaustive search of G_{n,alpha} within the given class. A graph is a
// minimiser when lambda - min <= tie_tol * max(1, min).
SearchRecord find_minimizers(const SearchSpace& space, double sigma, double tie_tol = 1e-9);
// One enumeration pass shared by several sigma values.
std::vector<SearchRecord> find_minimizers_multi(const SearchSpace& space,
                                                const std::vector<double>& sigmas,
                                                const SearchOptions& opts = {});
// Same, reading candidates from an arbitrary stream (e.g. external graph6).
std::vector<SearchRecord> find_minimizers_in(GraphStream& src, const SearchSpace& space,
                                             const std::vector<double>& sigmas,
                                             const SearchOptions& opts = {});

std::string to_json(const SearchRecord& r);
SearchRecord search_record_from_json(const std::string& text);

struct ShapeWitness {
  Graph skeleton;
  VertexSet skeleton_vertices;  // vertex of G for each skeleton vertex
  std::vector<int> counts;      // pendant leaves on each skeleton vertex
};

struct ShapeDecomposition {
  std::optional<ShapeWitness> witness;
  std::string rejection;
};

// Strips the leaves and tests whether what remains is a subdivision graph
// whose original vertices carry all the stripped leaves. If that fails, leaves
// sitting on degree-2 vertices are retried as pendant-free skeleton leaves.
ShapeDecomposition shape_decompose(const Graph& g);
Graph rebuild_shape(const ShapeWitness& w);

// Identifies a tree as T1/T2 with normalised counts, if it is one.
std::optional<CandidateRow> identify_candidate(const Graph& g);

struct PredicateResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct AuditReport {
  std::vector<PredicateResult> predicates;
  bool all_pass() const;
};

// Six structural predicates expected of minimising trees with
// ceil(n/2)+2 <= alpha <= n-2.
AuditReport structural_audit(const Graph& t, int alpha);

// Per-skeleton-vertex attachment ranges for the sigma regime.
AuditReport attachment_range_check(const Graph& g, double sigma);

}  // namespace asigma
