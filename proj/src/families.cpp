#include "asigma/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace asigma {

namespace {

const std::vector<std::pair<std::string, FamilyKind>>& kind_names() {
  static const std::vector<std::pair<std::string, FamilyKind>> names = {
      {"path", FamilyKind::path},
      {"cycle", FamilyKind::cycle},
      {"star", FamilyKind::star},
      {"complete", FamilyKind::complete},
      {"complete_bipartite", FamilyKind::complete_bipartite},
      {"d_graph", FamilyKind::d_graph},
      {"w_graph", FamilyKind::w_graph},
      {"subdivision", FamilyKind::subdivision},
      {"rooted_attach", FamilyKind::rooted_attach},
      {"t1", FamilyKind::t1},
      {"t2", FamilyKind::t2},
      {"f_graph", FamilyKind::f_graph},
      {"g1", FamilyKind::g1},
      {"g2", FamilyKind::g2},
      {"prism", FamilyKind::prism},
  };
  return names;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"d", "d_graph"},  {"w", "w_graph"},   {"f", "f_graph"},
      {"k", "complete"}, {"kbip", "complete_bipartite"}, {"attach", "rooted_attach"},
  };
  return a;
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    std::size_t comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad integer '" + std::string(tok) + "' in family spec");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::array<int, 4> four(const std::vector<int>& v, const char* what) {
  need(v.size() == 4, std::string(what) + " needs four attachment counts");
  for (int x : v) need(x >= 0, "attachment counts must be non-negative");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  std::size_t colon = text.find(':');
  std::string name(text.substr(0, colon));
  if (auto it = aliases().find(name); it != aliases().end()) name = it->second;
  FamilySpec spec;
  bool found = false;
  for (const auto& [n, k] : kind_names()) {
    if (n == name) {
      spec.kind = k;
      found = true;
    }
  }
  need(found, "unknown family kind '" + name + "'");
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  switch (spec.kind) {
    case FamilyKind::subdivision:
      need(!rest.empty(), "subdivision needs an inner family");
      spec.inner = std::make_shared<FamilySpec>(parse_family(rest));
      break;
    case FamilyKind::rooted_attach: {
      std::size_t c2 = rest.find(':');
      need(c2 != std::string_view::npos, "rooted_attach needs counts and an inner family");
      spec.counts = parse_ints(rest.substr(0, c2));
      spec.inner = std::make_shared<FamilySpec>(parse_family(rest.substr(c2 + 1)));
      break;
    }
    case FamilyKind::t1:
    case FamilyKind::t2:
      spec.counts = parse_ints(rest);
      need(spec.counts.size() == 4, name + " expects four attachment counts");
      break;
    default:
      if (!rest.empty()) spec.params = parse_ints(rest);
  }
  for (int c : spec.counts) need(c >= 0, "attachment counts must be >= 0");
  std::size_t k = spec.params.size();
  switch (spec.kind) {
    case FamilyKind::complete_bipartite:
    case FamilyKind::f_graph:
      need(k == 2, name + " expects 2 parameters");
      break;
    case FamilyKind::g1:
    case FamilyKind::g2:
      need(k == 0, name + " takes no parameters");
      break;
    case FamilyKind::prism:
      need(k <= 1, "prism takes at most one parameter");
      break;
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::star:
    case FamilyKind::complete:
    case FamilyKind::d_graph:
    case FamilyKind::w_graph:
      need(k == 1, name + " expects 1 parameter");
      break;
    default:
      break;
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string name;
  for (const auto& [n, k] : kind_names()) {
    if (k == spec.kind) name = n;
  }
  switch (spec.kind) {
    case FamilyKind::subdivision:
      return name + ":" + to_string(*spec.inner);
    case FamilyKind::rooted_attach:
      return name + ":" + join(spec.counts) + ":" + to_string(*spec.inner);
    case FamilyKind::t1:
    case FamilyKind::t2:
      return name + ":" + join(spec.counts);
    default:
      return spec.params.empty() ? name : name + ":" + join(spec.params);
  }
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    need(p.size() == k, "family expects " + std::to_string(k) + " parameter(s)");
  };
  switch (spec.kind) {
    case FamilyKind::path:
      arity(1);
      return path_graph(p[0]);
    case FamilyKind::cycle:
      arity(1);
      return cycle_graph(p[0]);
    case FamilyKind::star:
      arity(1);
      return star_graph(p[0]);
    case FamilyKind::complete:
      arity(1);
      return complete_graph(p[0]);
    case FamilyKind::complete_bipartite:
      arity(2);
      return complete_bipartite(p[0], p[1]);
    case FamilyKind::d_graph:
      arity(1);
      return d_graph(p[0]);
    case FamilyKind::w_graph:
      arity(1);
      return w_graph(p[0]);
    case FamilyKind::subdivision:
      need(spec.inner != nullptr, "subdivision needs an inner family");
      return subdivision_graph(build(*spec.inner));
    case FamilyKind::rooted_attach: {
      need(spec.inner != nullptr, "rooted_attach needs an inner family");
      std::vector<int> roots(spec.counts.size());
      for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = static_cast<int>(i);
      return rooted_attach(build(*spec.inner), roots, spec.counts);
    }
    case FamilyKind::t1:
      return t1_graph(four(spec.counts, "t1"));
    case FamilyKind::t2:
      return t2_graph(four(spec.counts, "t2"));
    case FamilyKind::f_graph:
      arity(2);
      return f_graph(p[0], p[1]);
    case FamilyKind::g1:
      arity(0);
      return g1_graph();
    case FamilyKind::g2:
      arity(0);
      return g2_graph();
    case FamilyKind::prism:
      need(p.size() <= 1, "prism takes at most one parameter");
      return prism_graph(p.empty() ? 3 : p[0]);
  }
  throw std::invalid_argument("unhandled family kind");
}

Graph path_graph(int n) {
  need(n >= 1, "path needs n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  need(n >= 3, "cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  need(leaves >= 1, "star needs at least one leaf");
  EdgeList e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_graph(int n) {
  need(n >= 1, "complete graph needs n >= 1");
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  need(a >= 1 && b >= 1, "complete bipartite needs both sides non-empty");
  EdgeList e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

Graph d_graph(int n) {
  need(n >= 4, "d_graph needs n >= 4");
  return attach_pendant_paths(Graph(1, {}), 0, {1, 1, n - 3});
}

Graph w_graph(int n) {
  need(n >= 6, "w_graph needs n >= 6");
  int spine = n - 4;
  EdgeList e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 4);
  e.emplace_back(0, n - 3);
  e.emplace_back(spine - 1, n - 2);
  e.emplace_back(spine - 1, n - 1);
  return Graph(n, e);
}

Graph subdivision_graph(const Graph& t) {
  need(is_tree(t), "subdivision graph needs a tree");
  EdgeList e;
  int next = t.order();
  for (auto [u, v] : t.edges()) {
    e.emplace_back(u, next);
    e.emplace_back(next, v);
    ++next;
  }
  return Graph(next, e);
}

Graph rooted_attach(const Graph& g, const std::vector<int>& roots, const std::vector<int>& ells) {
  need(roots.size() == ells.size(), "rooted_attach: roots and counts differ in length");
  EdgeList e = g.edges();
  int next = g.order();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    need(roots[i] >= 0 && roots[i] < g.order(), "rooted_attach: root out of range");
    need(ells[i] >= 0, "rooted_attach: negative count");
    for (int k = 0; k < ells[i]; ++k) e.emplace_back(roots[i], next++);
  }
  return Graph(next, e);
}

Graph t1_graph(const std::array<int, 4>& counts) {
  Graph s = subdivision_graph(Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
  return rooted_attach(s, {0, 1, 2, 3}, {counts.begin(), counts.end()});
}

Graph t2_graph(const std::array<int, 4>& counts) {
  Graph s = subdivision_graph(path_graph(4));
  return rooted_attach(s, {0, 1, 2, 3}, {counts.begin(), counts.end()});
}

Graph f_graph(int s, int t) {
  need(s >= 1 && t >= 1, "f_graph needs s, t >= 1");
  EdgeList e;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) e.emplace_back(i, j);
  }
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) e.emplace_back(s + i, s + j);
  }
  e.emplace_back(s - 1, s);
  return Graph(s + t, e);
}

Graph g1_graph() {
  return Graph(6, {{0, 1}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 5}, {5, 4}});
}

Graph g2_graph() { return complement(g1_graph()); }

Graph prism_graph(int k) {
  need(k >= 3, "prism needs k >= 3");
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return Graph(2 * k, e);
}

std::string to_string(Shape s) { return s == Shape::t1 ? "t1" : "t2"; }

std::string to_string(const CandidateRow& row) {
  return to_string(row.shape) + ":" + join({row.counts.begin(), row.counts.end()});
}

std::pair<int, int> t_lp(int n, int alpha) {
  need(alpha >= 1 && alpha < n, "t_lp needs 1 <= alpha < n");
  int num = 2 * alpha - n + 1;
  int den = n - alpha;
  int t = num >= 0 ? num / den : -((-num + den - 1) / den);
  return {t, num - den * t};
}

std::array<int, 4> normalize_counts(Shape shape, std::array<int, 4> c) {
  if (shape == Shape::t1) {
    std::sort(c.begin(), c.begin() + 3);
    return c;
  }
  std::array<int, 4> r{c[3], c[2], c[1], c[0]};
  return std::min(c, r);
}

namespace {

using Offsets = std::array<int, 4>;

struct OffsetTable {
  std::vector<Offsets> t1, t2;
};

// Unrefined candidates by l', as offsets from t.
const std::array<OffsetTable, 4>& unrefined_offsets() {
  static const std::array<OffsetTable, 4> table = {{
      {{{-1, 1, 1, -1}, {0, 1, 1, -2}, {0, 0, 1, -1}, {1, 1, 1, -3}},
       {{-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}, {0, 0, 0, 0}, {1, -2, 0, 1}, {1, -1, -1, 1}}},
      {{{0, 1, 1, -1}, {1, 1, 1, -2}}, {{0, 0, 0, 1}, {1, -1, 0, 1}}},
      {{{1, 1, 1, -1}}, {{1, 0, 0, 1}}},
      {{{-1, 2, 2, 0}, {0, 2, 2, -1}, {0, 1, 2, 0}, {1, 2, 2, -2}, {1, 1, 2, -1}, {1, 1, 1, 0},
        {2, 2, 2, -3}},
       {{-1, 1, 1, 2}, {0, 0, 1, 2}, {0, 1, 0, 2}, {0, 1, 1, 1}, {1, 1, -1, 2}, {1, -1, 1, 2},
        {1, 0, 0, 2}, {1, 0, 1, 1}, {2, -2, 1, 2}, {2, -1, 0, 2}}},
  }};
  return table;
}

// Refined candidates for t >= 3.
const std::array<OffsetTable, 4>& refined_offsets() {
  static const std::array<OffsetTable, 4> table = {{
      {{{0, 1, 1, -2}, {0, 0, 1, -1}, {1, 1, 1, -3}}, {{0, 0, -1, 1}, {1, -1, -1, 1}}},
      {{{0, 1, 1, -1}, {1, 1, 1, -2}}, {{0, 0, 0, 1}, {1, -1, 0, 1}}},
      {{{1, 1, 1, -1}}, {{1, 0, 0, 1}}},
      {{{1, 2, 2, -2}, {1, 1, 2, -1}, {2, 2, 2, -3}},
       {{1, 1, -1, 2}, {1, 0, 0, 2}, {2, -1, 0, 2}}},
  }};
  return table;
}

// Refined candidates for t in {1, 2}, by n.
const std::map<int, OffsetTable>& small_refined() {
  static const std::map<int, OffsetTable> table = {
      {12, {{}, {{2, 0, 1, 2}}}},
      {13, {{{2, 2, 2, 0}}, {{2, 1, 1, 2}}}},
      {14, {{{2, 2, 3, 0}, {2, 2, 2, 1}}, {{2, 2, 0, 3}, {2, 1, 1, 3}, {3, 0, 1, 3}}}},
      {15, {{{2, 3, 3, 0}, {2, 2, 3, 1}}, {{2, 2, 1, 3}, {3, 1, 1, 3}}}},
      {16, {{{2, 3, 3, 1}, {3, 3, 3, 0}}, {{2, 2, 2, 3}, {3, 1, 2, 3}}}},
      {17, {{{3, 3, 3, 1}}, {{3, 2, 2, 3}}}},
      {18, {{{3, 4, 4, 0}, {3, 3, 4, 1}, {3, 3, 3, 2}}, {{3, 3, 1, 4}, {3, 2, 2, 4}, {4, 1, 2, 4}}}},
  };
  return table;
}

void check_regime(int n) { need(n >= 12 && n <= kMaxVertices, "candidate rows need 12 <= n <= 64"); }

std::vector<CandidateRow> instantiate(const OffsetTable& table, int t, int lp, bool offsets) {
  std::vector<CandidateRow> rows;
  for (Shape shape : {Shape::t1, Shape::t2}) {
    for (const Offsets& o : shape == Shape::t1 ? table.t1 : table.t2) {
      CandidateRow row{shape, o, t, lp};
      bool valid = true;
      for (int& c : row.counts) {
        if (offsets) c += t;
        valid = valid && c >= 0;
      }
      if (valid) rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

std::vector<CandidateRow> stored_unrefined_rows(int n) {
  check_regime(n);
  auto [t, lp] = t_lp(n, n - 4);
  return instantiate(unrefined_offsets()[lp], t, lp, true);
}

std::vector<CandidateRow> candidate_rows(int n, bool refined) {
  check_regime(n);
  auto [t, lp] = t_lp(n, n - 4);
  if (refined) {
    if (t >= 3) return instantiate(refined_offsets()[lp], t, lp, true);
    return instantiate(small_refined().at(n), t, lp, false);
  }
  // Attachment ranges with n - alpha = 4; skeleton degrees are (1,1,1,3) for
  // the star skeleton and (1,2,2,1) for the path skeleton.
  std::vector<CandidateRow> rows;
  for (Shape shape : {Shape::t1, Shape::t2}) {
    std::array<int, 4> deg = shape == Shape::t1 ? std::array<int, 4>{1, 1, 1, 3}
                                                : std::array<int, 4>{1, 2, 2, 1};
    std::array<int, 4> lo{}, hi{};
    for (int i = 0; i < 4; ++i) {
      lo[i] = std::max(0, lp <= 2 ? t + lp - deg[i] : t + lp - 3 - deg[i]);
      hi[i] = lp <= 2 ? t + 2 - deg[i] : t + 3 - deg[i];
    }
    std::set<std::array<int, 4>> seen;
    std::array<int, 4> c{};
    for (c[0] = lo[0]; c[0] <= hi[0]; ++c[0]) {
      for (c[1] = lo[1]; c[1] <= hi[1]; ++c[1]) {
        for (c[2] = lo[2]; c[2] <= hi[2]; ++c[2]) {
          for (c[3] = lo[3]; c[3] <= hi[3]; ++c[3]) {
            if (c[0] + c[1] + c[2] + c[3] == n - 7) seen.insert(normalize_counts(shape, c));
          }
        }
      }
    }
    for (const auto& counts : seen) rows.push_back({shape, counts, t, lp});
  }
  return rows;
}

Graph build_row(const CandidateRow& row) {
  return row.shape == Shape::t1 ? t1_graph(row.counts) : t2_graph(row.counts);
}

}  // namespace asigma
