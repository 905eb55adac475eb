#include "asigma/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "asigma/canonical.hpp"
#include "asigma/independence.hpp"

namespace asigma {

namespace {

using Layout = std::vector<int>;

// Level sequences of rooted trees; a free tree is emitted once, rooted at its
// centre, following Wright, Richmond, Odlyzko and McKay.
std::optional<Layout> next_rooted(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

void split(const Layout& layout, Layout& left, Layout& rest) {
  std::size_t m = layout.size();
  bool one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one) {
        m = i;
        break;
      }
      one = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  rest.insert(rest.end(), layout.begin() + m, layout.end());
}

Layout next_free(const Layout& cand) {
  Layout left, rest;
  split(cand, left, rest);
  int lh = *std::max_element(left.begin(), left.end());
  int rh = *std::max_element(rest.begin(), rest.end());
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return cand;
  int p = static_cast<int>(left.size());
  Layout out = *next_rooted(cand, p);
  if (cand[p] > 2) {
    Layout nl, nr;
    split(out, nl, nr);
    int h = *std::max_element(nl.begin(), nl.end());
    for (int k = 0; k <= h; ++k) out[out.size() - 1 - h + k] = k + 1;
  }
  return out;
}

Graph layout_to_graph(const Layout& layout) {
  int n = static_cast<int>(layout.size());
  std::vector<std::uint64_t> rows(n, 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
    if (!stack.empty()) {
      int j = stack.back();
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
    stack.push_back(i);
  }
  return Graph::from_rows(n, std::move(rows));
}

class TreeStream : public GraphStream {
 public:
  explicit TreeStream(int n) : n_(n) {
    if (n >= 3) {
      Layout l;
      for (int i = 0; i <= n / 2; ++i) l.push_back(i);
      for (int i = 1; i < (n + 1) / 2; ++i) l.push_back(i);
      layout_ = l;
    }
  }

  std::optional<Graph> next() override {
    if (n_ <= 2) {
      if (done_) return std::nullopt;
      done_ = true;
      return n_ == 1 ? Graph(1, {}) : Graph(2, {{0, 1}});
    }
    if (!layout_) return std::nullopt;
    Layout cur = next_free(*layout_);
    layout_ = next_rooted(cur);
    return layout_to_graph(cur);
  }

 private:
  int n_;
  bool done_ = false;
  std::optional<Layout> layout_;
};

std::vector<Graph> connected_level(int k);

class ConnectedStream : public GraphStream {
 public:
  explicit ConnectedStream(int n) : n_(n) {
    if (n > 1) {
      parents_ = connected_level(n - 1);
      for (const Graph& p : parents_) parent_codes_.push_back(to_graph6(p));
    }
  }

  std::optional<Graph> next() override {
    if (n_ == 1) {
      if (done_) return std::nullopt;
      done_ = true;
      return Graph(1, {});
    }
    const std::uint64_t limit = std::uint64_t{1} << (n_ - 1);
    while (pi_ < parents_.size()) {
      while (++subset_ < limit) {
        if (auto g = try_child(parents_[pi_], parent_codes_[pi_], subset_)) return g;
      }
      ++pi_;
      subset_ = 0;
      seen_.clear();
    }
    return std::nullopt;
  }

 private:
  std::optional<Graph> try_child(const Graph& parent, const std::string& parent_code,
                                 std::uint64_t subset) {
    int v_new = n_ - 1;
    std::vector<std::uint64_t> rows = parent.rows();
    for (auto& r : rows) r &= (std::uint64_t{1} << v_new) - 1;
    rows.push_back(subset);
    for (int w = 0; w < v_new; ++w) {
      if (subset >> w & 1U) rows[w] |= std::uint64_t{1} << v_new;
    }
    Graph child = Graph::from_rows(n_, std::move(rows));
    CanonicalLabeling cl = canonical_labeling(child);
    std::string code = to_graph6(cl.form);
    if (!seen_.insert(code).second) return std::nullopt;
    std::vector<int> cuts = cut_vertices(child);
    int chosen = -1;
    for (int pos = n_ - 1; pos >= 0 && chosen < 0; --pos) {
      int v = cl.order[pos];
      if (!std::binary_search(cuts.begin(), cuts.end(), v)) chosen = v;
    }
    if (chosen != v_new && canonical_code(delete_vertex(child, chosen)) != parent_code) {
      return std::nullopt;
    }
    return cl.form;
  }

  int n_;
  bool done_ = false;
  std::vector<Graph> parents_;
  std::vector<std::string> parent_codes_;
  std::size_t pi_ = 0;
  std::uint64_t subset_ = 0;
  std::unordered_set<std::string> seen_;
};

std::vector<Graph> connected_level(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  ConnectedStream s(k);
  std::vector<Graph> level = collect(s);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, level);
  return level;
}

class AlphaFilter : public GraphStream {
 public:
  AlphaFilter(std::unique_ptr<GraphStream> src, int alpha) : src_(std::move(src)), alpha_(alpha) {}
  std::optional<Graph> next() override {
    while (auto g = src_->next()) {
      if (independence_number(*g).alpha == alpha_) return g;
    }
    return std::nullopt;
  }

 private:
  std::unique_ptr<GraphStream> src_;
  int alpha_;
};

class VectorStream : public GraphStream {
 public:
  explicit VectorStream(const std::vector<Graph>& graphs) : graphs_(graphs) {}
  std::optional<Graph> next() override {
    if (pos_ == graphs_.size()) return std::nullopt;
    return graphs_[pos_++];
  }

 private:
  const std::vector<Graph>& graphs_;
  std::size_t pos_ = 0;
};

class Graph6Stream : public GraphStream {
 public:
  explicit Graph6Stream(std::istream& in) : reader_(in) {}
  std::optional<Graph> next() override { return reader_.next(); }

 private:
  Graph6Reader reader_;
};

}  // namespace

std::unique_ptr<GraphStream> all_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw std::invalid_argument("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  return std::make_unique<TreeStream>(n);
}

std::unique_ptr<GraphStream> all_connected_graphs(int n) {
  if (n < 1 || n > kMaxConnectedOrder) {
    throw std::invalid_argument("connected-graph enumeration supports 1 <= n <= " +
                                std::to_string(kMaxConnectedOrder));
  }
  return std::make_unique<ConnectedStream>(n);
}

std::unique_ptr<GraphStream> filter_alpha(std::unique_ptr<GraphStream> src, int alpha) {
  return std::make_unique<AlphaFilter>(std::move(src), alpha);
}

std::unique_ptr<GraphStream> graph6_stream(std::istream& in) {
  return std::make_unique<Graph6Stream>(in);
}

std::vector<Graph> collect(GraphStream& s) {
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

std::unique_ptr<GraphStream> vector_stream(const std::vector<Graph>& graphs) {
  return std::make_unique<VectorStream>(graphs);
}

}  // namespace asigma
