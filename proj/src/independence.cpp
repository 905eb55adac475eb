#include "asigma/independence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace asigma {

namespace {

using u64 = std::uint64_t;

u64 bit(int v) { return u64{1} << v; }

int clique_cover_size(const Graph& g, u64 p) {
  int count = 0;
  while (p) {
    int u = std::countr_zero(p);
    u64 clique = bit(u);
    u64 cand = g.row(u) & p;
    while (cand) {
      int w = std::countr_zero(cand);
      clique |= bit(w);
      cand &= g.row(w);
    }
    p &= ~clique;
    ++count;
  }
  return count;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g) {}

  IndependenceCertificate solve(u64 allowed) {
    best_size_ = -1;
    best_ = 0;
    grow(allowed, 0, 0);
    return {best_size_, mask_to_set(best_)};
  }

 private:
  void grow(u64 p, u64 chosen, int size) {
    // Vertices of degree <= 1 inside p can always be taken.
    for (bool again = true; again && p;) {
      again = false;
      for (u64 x = p; x; x &= x - 1) {
        int v = std::countr_zero(x);
        if (std::popcount(g_.row(v) & p) <= 1) {
          chosen |= bit(v);
          ++size;
          p &= ~(g_.row(v) | bit(v));
          again = true;
          break;
        }
      }
    }
    if (!p) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + clique_cover_size(g_, p) <= best_size_) return;
    int v = -1, dmin = 65;
    for (u64 x = p; x; x &= x - 1) {
      int w = std::countr_zero(x);
      int d = std::popcount(g_.row(w) & p);
      if (d < dmin) {
        dmin = d;
        v = w;
      }
    }
    // Every maximal independent set meets N[v].
    for (u64 x = (g_.row(v) & p) | bit(v); x; x &= x - 1) {
      int w = std::countr_zero(x);
      grow(p & ~(g_.row(w) | bit(w)), chosen | bit(w), size + 1);
    }
  }

  const Graph& g_;
  int best_size_ = -1;
  u64 best_ = 0;
};

void verify(const Graph& g, const IndependenceCertificate& c) {
  u64 s = set_to_mask(c.witness);
  for (int v : c.witness) {
    if (g.row(v) & s) throw std::logic_error("independence witness is not independent");
  }
  if (static_cast<int>(c.witness.size()) != c.alpha) {
    throw std::logic_error("independence witness size mismatch");
  }
}

}  // namespace

IndependenceCertificate max_independent_within(const Graph& g, std::uint64_t allowed) {
  IndependenceCertificate c = BranchAndBound(g).solve(allowed & g.all_mask());
  verify(g, c);
  return c;
}

IndependenceCertificate tree_independence(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_independence requires a tree");
  int n = t.order();
  std::vector<int> order{0}, parent(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.neighbors(v)) {
      if (w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<int> inc(n, 1), exc(n, 0);
  for (int i = n - 1; i > 0; --i) {
    int v = order[i], p = parent[v];
    inc[p] += exc[v];
    exc[p] += std::max(inc[v], exc[v]);
  }
  std::vector<char> taken(n, 0);
  for (int v : order) {
    bool parent_taken = parent[v] >= 0 && taken[parent[v]];
    taken[v] = !parent_taken && inc[v] >= exc[v];
  }
  IndependenceCertificate c;
  for (int v = 0; v < n; ++v) {
    if (taken[v]) c.witness.push_back(v);
  }
  c.alpha = static_cast<int>(c.witness.size());
  verify(t, c);
  if (c.alpha != std::max(inc[0], exc[0])) throw std::logic_error("tree DP reconstruction mismatch");
  return c;
}

IndependenceCertificate independence_number(const Graph& g) {
  if (is_tree(g)) return tree_independence(g);
  return max_independent_within(g, g.all_mask());
}

std::optional<VertexSet> leaf_containing_mis(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("leaf_containing_mis requires a tree");
  if (t.order() == 2) return std::nullopt;
  u64 forced = set_to_mask(leaves(t));
  u64 blocked = forced;
  for (u64 x = forced; x; x &= x - 1) blocked |= t.row(std::countr_zero(x));
  IndependenceCertificate rest = max_independent_within(t, t.all_mask() & ~blocked);
  return mask_to_set(forced | set_to_mask(rest.witness));
}

AlternatingClassification alternating_classification(const Graph& t) {
  VertexSet ends = end_branch_points(t);
  if (ends.size() < 2) throw std::invalid_argument("need at least two end branch points");
  AlternatingClassification out;
  out.leaf_set = leaves(t);
  std::vector<int> parity(t.order(), -1);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      std::vector<int> path = tree_path(t, ends[i], ends[j]);
      int k = static_cast<int>(path.size()) - 1;
      if (k % 2 != 0 && out.consistent) {
        out.consistent = false;
        out.conflict = "odd distance " + std::to_string(k) + " between end branch points " +
                       std::to_string(ends[i]) + " and " + std::to_string(ends[j]);
      }
      for (int idx = 0; idx <= k; ++idx) {
        int v = path[idx];
        if (parity[v] >= 0 && parity[v] != idx % 2 && out.consistent) {
          out.consistent = false;
          out.conflict = "vertex " + std::to_string(v) + " receives both parities";
        }
        if (parity[v] < 0) parity[v] = idx % 2;
      }
    }
  }
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) continue;
    if (parity[v] < 0) {
      if (out.consistent) {
        out.consistent = false;
        out.conflict = "vertex " + std::to_string(v) + " lies on no end-branch-point path";
      }
      continue;
    }
    (parity[v] ? out.odd : out.even).push_back(v);
  }
  return out;
}

}  // namespace asigma
