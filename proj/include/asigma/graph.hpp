#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace asigma {

constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;
// Sorted ascending, no repeats.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. One 64-bit adjacency row per
// vertex; immutable once built.
class Graph {
 public:
  Graph() : Graph(1, {}) {}
  Graph(int n, const EdgeList& edges);

  // Rows must be symmetric with clear diagonal; throws otherwise.
  static Graph from_rows(int n, std::vector<std::uint64_t> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  bool adjacent(int u, int v) const;
  std::uint64_t row(int v) const { return rows_[v]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  VertexSet neighbors(int v) const;
  EdgeList edges() const;
  std::uint64_t all_mask() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph(int n, std::vector<std::uint64_t> rows, int m)
      : n_(n), m_(m), rows_(std::move(rows)) {}
  int n_;
  int m_;
  std::vector<std::uint64_t> rows_;
};

inline Graph new_graph(int n, const EdgeList& edges) { return Graph(n, edges); }

VertexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const VertexSet& s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
// Two-colouring (0/1 per vertex); empty when the graph is not bipartite.
std::vector<int> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
// BFS distances from src, -1 for unreachable.
std::vector<int> distances(const Graph& g, int src);
// Vertices of the unique u-v path in a tree, u first.
std::vector<int> tree_path(const Graph& t, int u, int v);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);
Graph disjoint_union(const Graph& a, const Graph& b);
// perm[old] = new label.
Graph relabel(const Graph& g, const std::vector<int>& perm);

VertexSet leaves(const Graph& g);
VertexSet branch_points(const Graph& t);
VertexSet end_branch_points(const Graph& t);
EdgeList internal_edges(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);

Graph subdivide_edge(const Graph& g, Edge e, int times);
Graph shift_neighbors(const Graph& g, int v, int u, const VertexSet& r);
Graph attach_pendant_paths(const Graph& g, int v, const std::vector<int>& lengths);

}  // namespace asigma
