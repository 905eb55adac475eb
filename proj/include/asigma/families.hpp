#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asigma/graph.hpp"

namespace asigma {

enum class FamilyKind {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  d_graph,
  w_graph,
  subdivision,
  rooted_attach,
  t1,
  t2,
  f_graph,
  g1,
  g2,
  prism
};

// Text form: `kind[:p1,p2,...]`, e.g. `t2:2,1,1,2`, `d_graph:10`, `f_graph:3,3`.
// `subdivision:<inner>` subdivides the inner tree; `rooted_attach:l1,...:<inner>`
// attaches l_i pendant vertices to vertex i-1 of the inner graph.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;
  std::vector<int> counts;
  std::shared_ptr<FamilySpec> inner;
};

FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, centre 0
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
// Spider with legs (1, 1, n-3): centre 0, short legs 1 and 2, long leg 3..n-1.
Graph d_graph(int n);
// Spine 0..n-5 with pendants n-4, n-3 on vertex 0 and n-2, n-1 on vertex n-5.
Graph w_graph(int n);
// Original vertices keep their labels; subdivision vertices follow in edge order.
Graph subdivision_graph(const Graph& t);
Graph rooted_attach(const Graph& g, const std::vector<int>& roots, const std::vector<int>& ells);
// S(K_{1,3}) with pendant counts on w1..w4 (w4 is the centre).
// Labels: w1..w4 = 0..3, u_i (between w_i and w4) = 4..6, then pendants by root.
Graph t1_graph(const std::array<int, 4>& counts);
// S(P_4) with pendant counts on u1..u4.
// Labels: u1..u4 = 0..3, w_i (between u_i and u_{i+1}) = 4..6, then pendants by root.
Graph t2_graph(const std::array<int, 4>& counts);
// K_s on 0..s-1 and K_t on s..s+t-1 joined by the edge (s-1, s).
Graph f_graph(int s, int t);
// Labels v1, v2, v3, v4, v_i, v_j = 0..5.
Graph g1_graph();
Graph g2_graph();
Graph prism_graph(int k = 3);

enum class Shape { t1, t2 };

struct CandidateRow {
  Shape shape = Shape::t1;
  std::array<int, 4> counts{};
  int t = 0;
  int lp = 0;
  friend bool operator==(const CandidateRow&, const CandidateRow&) = default;
  friend auto operator<=>(const CandidateRow&, const CandidateRow&) = default;
};

std::string to_string(Shape s);
std::string to_string(const CandidateRow& row);

// t = floor((2a-n+1)/(n-a)) and l' the remainder.
std::pair<int, int> t_lp(int n, int alpha);

// Representative of the symmetry class of an attachment tuple: T1 sorts the
// first three counts, T2 takes the lexicographically smaller of the tuple and
// its reverse.
std::array<int, 4> normalize_counts(Shape shape, std::array<int, 4> counts);

// Rows for alpha = n - 4. Unrefined rows are regenerated from the attachment
// ranges; refined rows come from the stored exclusion tables.
std::vector<CandidateRow> candidate_rows(int n, bool refined);
// The unrefined table as stored data (offsets from t), instantiated for n.
std::vector<CandidateRow> stored_unrefined_rows(int n);
Graph build_row(const CandidateRow& row);

}  // namespace asigma
