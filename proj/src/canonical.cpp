#include "asigma/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "asigma/graph6.hpp"

namespace asigma {

namespace {

using u64 = std::uint64_t;
constexpr std::size_t kMaxAutomorphisms = 256;

// Ordered partition of positions 0..n-1. Cells are contiguous runs; len[] and
// the queue are indexed by the start position of a cell.
struct Part {
  int cells = 0;
  std::array<int, kMaxVertices> lab{};
  std::array<int, kMaxVertices> pos{};
  std::array<int, kMaxVertices> start_of{};
  std::array<int, kMaxVertices> len{};
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Part p;
    p.cells = 1;
    for (int i = 0; i < n_; ++i) {
      p.lab[i] = p.pos[i] = i;
      p.start_of[i] = 0;
    }
    p.len[0] = n_;
    refine(p, 0);
    std::vector<int> prefix;
    search(p, prefix);
    return std::vector<int>(best_lab_.begin(), best_lab_.begin() + n_);
  }

 private:
  void refine(Part& p, int first_splitter) const {
    std::array<int, kMaxVertices> queue{};
    std::array<bool, kMaxVertices> queued{};
    int head = 0, tail = 0;
    auto push = [&](int s) {
      if (!queued[s]) {
        queued[s] = true;
        queue[tail++ % kMaxVertices] = s;
      }
    };
    push(first_splitter);
    std::array<int, kMaxVertices> cnt{};
    std::array<std::pair<int, int>, kMaxVertices> buf{};
    while (head != tail) {
      int s = queue[head++ % kMaxVertices];
      queued[s] = false;
      u64 split_mask = 0;
      for (int i = s; i < s + p.len[s]; ++i) split_mask |= u64{1} << p.lab[i];
      for (int c = 0; c < n_; c += p.len[c]) {
        int L = p.len[c];
        if (L == 1) continue;
        bool uniform = true;
        for (int i = c; i < c + L; ++i) {
          cnt[i] = std::popcount(g_.row(p.lab[i]) & split_mask);
          if (cnt[i] != cnt[c]) uniform = false;
        }
        if (uniform) continue;
        for (int i = 0; i < L; ++i) buf[i] = {cnt[c + i], p.lab[c + i]};
        std::stable_sort(buf.begin(), buf.begin() + L,
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        int run_start = c;
        for (int i = 0; i < L; ++i) {
          p.lab[c + i] = buf[i].second;
          p.pos[buf[i].second] = c + i;
          if (i > 0 && buf[i].first != buf[i - 1].first) {
            p.len[run_start] = c + i - run_start;
            push(run_start);
            run_start = c + i;
            ++p.cells;
          }
          p.start_of[c + i] = run_start;
        }
        p.len[run_start] = c + L - run_start;
        push(run_start);
      }
    }
  }

  void individualize(Part& p, int v) const {
    int i = p.pos[v];
    int c = p.start_of[i];
    int L = p.len[c];
    int w = p.lab[c];
    p.lab[c] = v;
    p.pos[v] = c;
    p.lab[i] = w;
    p.pos[w] = i;
    p.len[c] = 1;
    p.len[c + 1] = L - 1;
    for (int k = c + 1; k < c + L; ++k) p.start_of[k] = c + 1;
    ++p.cells;
    refine(p, c);
  }

  std::array<u64, kMaxVertices> code_of(const Part& p) const {
    std::array<u64, kMaxVertices> code{};
    for (int i = 0; i < n_; ++i) {
      u64 r = 0;
      for (u64 x = g_.row(p.lab[i]); x; x &= x - 1) r |= u64{1} << (n_ - 1 - p.pos[std::countr_zero(x)]);
      code[i] = r;
    }
    return code;
  }

  void store(const std::array<int, kMaxVertices>& from, const std::array<int, kMaxVertices>& to,
             std::vector<int>& gamma) {
    gamma.assign(n_, 0);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    if (auts_.size() < kMaxAutomorphisms) auts_.push_back(gamma);
  }

  int leaf(const Part& p, const std::vector<int>& prefix) {
    auto code = code_of(p);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = p.lab;
      first_prefix_ = prefix;
      return -1;
    }
    int jump = -1;
    std::vector<int> gamma;
    if (code == first_code_) {
      store(p.lab, first_lab_, gamma);
      std::size_t d = 0;
      while (d < prefix.size() && d < first_prefix_.size() && prefix[d] == first_prefix_[d]) ++d;
      bool fixes = d < prefix.size() && d < first_prefix_.size() &&
                   gamma[prefix[d]] == first_prefix_[d];
      for (std::size_t k = 0; k < d && fixes; ++k) fixes = gamma[prefix[k]] == prefix[k];
      if (fixes) jump = static_cast<int>(d);
    }
    if (code > best_code_) {
      best_code_ = code;
      best_lab_ = p.lab;
    } else if (code == best_code_ && best_code_ != first_code_) {
      store(p.lab, best_lab_, gamma);
    }
    return jump;
  }

  // Union-find orbits of the stored automorphisms that fix the prefix.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : auts_) {
      bool fixes = true;
      for (int v : prefix) fixes = fixes && a[v] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int search(const Part& p, std::vector<int>& prefix) {
    int level = static_cast<int>(prefix.size());
    if (p.cells == n_) return leaf(p, prefix);
    int c = 0;
    while (p.len[c] == 1) c += 1;
    std::vector<int> cand(p.lab.begin() + c, p.lab.begin() + c + p.len[c]);
    std::vector<int> done_roots;
    std::size_t seen_auts = 0;
    std::vector<int> orb;
    for (int v : cand) {
      if (!done_roots.empty()) {
        if (orb.empty() || seen_auts != auts_.size()) {
          orb = orbits(prefix);
          seen_auts = auts_.size();
        }
        bool dup = false;
        for (int r : done_roots) dup = dup || orb[r] == orb[v];
        if (dup) continue;
      }
      done_roots.push_back(v);
      Part child = p;
      individualize(child, v);
      prefix.push_back(v);
      int j = search(child, prefix);
      prefix.pop_back();
      if (j >= 0 && j < level) return j;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::array<u64, kMaxVertices> first_code_{}, best_code_{};
  std::array<int, kMaxVertices> first_lab_{}, best_lab_{};
  std::vector<int> first_prefix_;
  std::vector<std::vector<int>> auts_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  std::vector<int> order = Canonizer(g).run();
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
  return {order, relabel(g, perm)};
}

std::string canonical_code(const Graph& g) { return to_graph6(canonical_labeling(g).form); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace asigma
