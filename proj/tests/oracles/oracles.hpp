#pragma once

// Independent brute-force reference implementations. Nothing here calls the
// library's canonical labelling, enumeration, independence or eigen code, so
// agreement is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "asigma/graph.hpp"

namespace oracle {

using asigma::Edge;
using asigma::EdgeList;
using asigma::Graph;

// Upper-triangle adjacency bits, minimised over all vertex permutations.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("brute_canonical is for n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) key += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
}

// AHU encoding of a free tree rooted at each centre; the smaller string wins.
inline std::string tree_code(const Graph& t) {
  const int n = t.order();
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> layer, alive(n, 1);
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive[v] = 0;
      --remaining;
      for (int w : t.neighbors(v)) {
        if (alive[w] && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::vector<int> centres;
  for (int v = 0; v < n; ++v) {
    if (alive[v]) centres.push_back(v);
  }
  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v)) {
      if (w != parent) kids.push_back(enc(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : centres) {
    std::string s = enc(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Free trees on n vertices by leaf extension, deduplicated by AHU code.
inline std::vector<Graph> trees_by_extension(int n) {
  std::map<std::string, Graph> level = {{"()", Graph(1, {})}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      for (int v = 0; v < t.order(); ++v) {
        EdgeList e = t.edges();
        e.emplace_back(v, k - 1);
        Graph c(k, e);
        next.emplace(tree_code(c), c);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(t);
  return out;
}

inline bool connected_bfs(int n, const EdgeList& e) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : e) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> seen(n, 0), stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Connected graphs on n <= 7 vertices up to isomorphism. Up to 6 vertices
// every edge subset of K_n is tried; for 7 each 6-vertex representative is
// extended by a vertex joined to every non-empty subset (every connected graph
// has a vertex whose removal leaves it connected).
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("connected_graphs oracle is for 1 <= n <= 7");
  std::map<std::string, Graph> reps;
  if (n <= 6) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      EdgeList e;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1U) e.push_back(all[i]);
      }
      if (static_cast<int>(e.size()) < n - 1 || !connected_bfs(n, e)) continue;
      Graph g(n, e);
      reps.emplace(brute_canonical(g), g);
    }
  } else {
    for (const Graph& p : connected_graphs(n - 1)) {
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
        EdgeList e = p.edges();
        for (int w = 0; w < n - 1; ++w) {
          if (s >> w & 1U) e.emplace_back(w, n - 1);
        }
        Graph g(n, e);
        reps.emplace(brute_canonical(g), g);
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [k, g] : reps) out.push_back(g);
  return out;
}

inline int brute_alpha(const Graph& g) {
  const int n = g.order();
  if (n > 22) throw std::invalid_argument("brute_alpha is for n <= 22");
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int c = __builtin_popcountll(s);
    if (c <= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((s >> v & 1U) && (g.row(v) & s)) ok = false;
    }
    if (ok) best = c;
  }
  return best;
}

inline Eigen::MatrixXd a_sigma(const Graph& g, double sigma) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    m(v, v) = sigma * g.degree(v);
    for (int w : g.neighbors(v)) m(v, w) = 1.0 - sigma;
  }
  return m;
}

inline double eigen_lambda(const Graph& g, double sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_sigma(g, sigma), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline Eigen::VectorXd eigen_perron(const Graph& g, double sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_sigma(g, sigma));
  Eigen::Index k;
  es.eigenvalues().maxCoeff(&k);
  Eigen::VectorXd x = es.eigenvectors().col(k);
  if (x.sum() < 0) x = -x;
  return x;
}

// Minimisers with no pruning: every candidate's lambda is computed.
inline std::set<std::string> naive_minimizers(const std::vector<Graph>& pool, int alpha, double sigma,
                                              double tie, double* min_lambda = nullptr) {
  std::vector<std::pair<double, const Graph*>> vals;
  for (const Graph& g : pool) {
    if (brute_alpha(g) == alpha) vals.emplace_back(eigen_lambda(g, sigma), &g);
  }
  if (vals.empty()) throw std::domain_error("empty class");
  double best = vals.front().first;
  for (auto& [l, g] : vals) best = std::min(best, l);
  std::set<std::string> out;
  for (auto& [l, g] : vals) {
    if (l - best <= tie * std::max(1.0, best)) out.insert(brute_canonical(*g));
  }
  if (min_lambda) *min_lambda = best;
  return out;
}

}  // namespace oracle
