#include "asigma/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace asigma {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n, const EdgeList& edges) : n_(n), m_(0) {
  check_order(n);
  rows_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u] & bit(v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++m_;
  }
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count mismatch");
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
  int deg_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw std::invalid_argument("adjacency row has bits beyond n");
    if (rows[v] & bit(v)) throw std::invalid_argument("self-loop in adjacency rows");
    for (std::uint64_t r = rows[v]; r; r &= r - 1) {
      int w = std::countr_zero(r);
      if (!(rows[w] & bit(v))) throw std::invalid_argument("adjacency rows not symmetric");
    }
    deg_sum += std::popcount(rows[v]);
  }
  return Graph(n, std::move(rows), deg_sum / 2);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return (rows_[u] >> v) & 1U;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

VertexSet Graph::neighbors(int v) const { return mask_to_set(rows_[v]); }

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t r = rows_[u] & ~((bit(u) << 1) - 1); r; r &= r - 1) {
      out.emplace_back(u, std::countr_zero(r));
    }
  }
  return out;
}

std::uint64_t Graph::all_mask() const { return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1; }

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::uint64_t set_to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

namespace {

std::uint64_t reach(const Graph& g, int src, std::uint64_t allowed) {
  std::uint64_t seen = bit(src), frontier = bit(src);
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) { return reach(g, 0, g.all_mask()) == g.all_mask(); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t left = g.all_mask();
  while (left) {
    std::uint64_t c = reach(g, std::countr_zero(left), g.all_mask());
    out.push_back(mask_to_set(c));
    left &= ~c;
  }
  return out;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return !bipartition(g).empty(); }

std::vector<int> distances(const Graph& g, int src) {
  check_vertex(g, src);
  std::vector<int> dist(g.order(), -1);
  dist[src] = 0;
  std::uint64_t seen = bit(src), frontier = bit(src);
  for (int d = 1; frontier; ++d) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= ~seen;
    for (std::uint64_t x = next; x; x &= x - 1) dist[std::countr_zero(x)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::vector<int> tree_path(const Graph& t, int u, int v) {
  std::vector<int> dv = distances(t, v);
  if (dv[u] < 0) throw std::invalid_argument("vertices not connected");
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    for (int w : t.neighbors(cur)) {
      if (dv[w] == dv[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = ~g.row(v) & g.all_mask() & ~bit(v);
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(g, keep[i]);
    pos[keep[i]] = static_cast<int>(i);
  }
  EdgeList e;
  for (auto [a, b] : g.edges()) {
    if (pos[a] >= 0 && pos[b] >= 0) e.emplace_back(pos[a], pos[b]);
  }
  return Graph(static_cast<int>(keep.size()), e);
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  if (g.order() == 1) throw std::invalid_argument("cannot delete the only vertex");
  VertexSet keep;
  for (int w = 0; w < g.order(); ++w) {
    if (w != v) keep.push_back(w);
  }
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw std::invalid_argument("edge not present");
  std::vector<std::uint64_t> rows = g.rows();
  rows[u] &= ~bit(v);
  rows[v] &= ~bit(u);
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (g.adjacent(u, v)) throw std::invalid_argument("edge already present");
  std::vector<std::uint64_t> rows = g.rows();
  rows[u] |= bit(v);
  rows[v] |= bit(u);
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList e = a.edges();
  for (auto [x, y] : b.edges()) e.emplace_back(x + a.order(), y + a.order());
  return Graph(a.order() + b.order(), e);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("bad permutation");
  std::vector<char> hit(g.order(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw std::invalid_argument("bad permutation");
    hit[p] = 1;
  }
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (std::uint64_t r = g.row(v); r; r &= r - 1) rows[perm[v]] |= bit(perm[std::countr_zero(r)]);
  }
  return Graph::from_rows(g.order(), std::move(rows));
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

VertexSet branch_points(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("branch_points requires a tree");
  VertexSet out;
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

VertexSet end_branch_points(const Graph& t) {
  VertexSet bp = branch_points(t);
  std::vector<std::vector<int>> dist;
  for (int b : bp) dist.push_back(distances(t, b));
  VertexSet out;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    bool inner = false;
    for (std::size_t x = 0; x < bp.size() && !inner; ++x) {
      for (std::size_t y = x + 1; y < bp.size() && !inner; ++y) {
        if (x == i || y == i) continue;
        inner = dist[x][bp[i]] + dist[i][bp[y]] == dist[x][bp[y]];
      }
    }
    if (!inner) out.push_back(bp[i]);
  }
  return out;
}

EdgeList internal_edges(const Graph& g) {
  std::set<Edge> found;
  for (int v0 = 0; v0 < g.order(); ++v0) {
    if (g.degree(v0) < 3) continue;
    for (int first : g.neighbors(v0)) {
      EdgeList walk{{std::min(v0, first), std::max(v0, first)}};
      int prev = v0, cur = first;
      while (g.degree(cur) == 2) {
        int next = mask_to_set(g.row(cur) & ~bit(prev))[0];
        walk.emplace_back(std::min(cur, next), std::max(cur, next));
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) >= 3 && cur != v0) found.insert(walk.begin(), walk.end());
    }
  }
  return EdgeList(found.begin(), found.end());
}

std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> out;
  if (g.order() < 3) return out;
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t rest = g.all_mask() & ~bit(v);
    if (reach(g, std::countr_zero(rest), rest) != rest) out.push_back(v);
  }
  return out;
}

Graph subdivide_edge(const Graph& g, Edge e, int times) {
  auto [u, v] = e;
  if (times < 1) throw std::invalid_argument("times must be >= 1");
  if (!g.adjacent(u, v)) throw std::invalid_argument("edge to subdivide is not present");
  int n = g.order();
  EdgeList out;
  for (auto [a, b] : g.edges()) {
    if (!((a == u && b == v) || (a == v && b == u))) out.emplace_back(a, b);
  }
  int prev = u;
  for (int i = 0; i < times; ++i) {
    out.emplace_back(prev, n + i);
    prev = n + i;
  }
  out.emplace_back(prev, v);
  return Graph(n + times, out);
}

Graph shift_neighbors(const Graph& g, int v, int u, const VertexSet& r) {
  check_vertex(g, v);
  check_vertex(g, u);
  if (r.empty()) throw std::invalid_argument("shift set R is empty");
  std::uint64_t allowed = g.row(v) & ~g.row(u) & ~bit(u);
  std::vector<std::uint64_t> rows = g.rows();
  for (int w : r) {
    check_vertex(g, w);
    if (!(allowed & bit(w))) {
      throw std::invalid_argument("vertex " + std::to_string(w) +
                                  " is not in N(v) minus N(u) and u");
    }
    rows[v] &= ~bit(w);
    rows[w] &= ~bit(v);
    rows[u] |= bit(w);
    rows[w] |= bit(u);
  }
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph attach_pendant_paths(const Graph& g, int v, const std::vector<int>& lengths) {
  check_vertex(g, v);
  EdgeList e = g.edges();
  int next = g.order();
  for (int len : lengths) {
    if (len < 1) throw std::invalid_argument("pendant path length must be >= 1");
    int prev = v;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e);
}

}  // namespace asigma
