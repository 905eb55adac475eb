#include "asigma/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "asigma/canonical.hpp"
#include "asigma/enumeration.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/partitions.hpp"
#include "asigma/search.hpp"
#include "asigma/spectral.hpp"

namespace asigma {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
    case CheckStatus::info:
      return "info";
  }
  return "?";
}

nlohmann::json to_json(const CheckOutcome& o) {
  nlohmann::json j;
  j["check"] = o.id;
  j["status"] = to_string(o.status);
  j["params"] = o.params;
  j["instances"] = o.instances;
  j["margin"] = o.margin ? nlohmann::json(*o.margin) : nlohmann::json(nullptr);
  j["witness"] = o.witness;
  if (!o.reproduce.empty()) j["reproduce"] = o.reproduce;
  if (!o.detail.empty()) j["detail"] = o.detail;
  j["seconds"] = std::round(o.seconds * 1000.0) / 1000.0;
  return j;
}

// ---------------------------------------------------------------------------
// Generators

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_tree: bad order");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  EdgeList edges;
  for (int x : prufer) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 1) (u < 0 ? u : v) = i;
  }
  edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

Graph add_random_edges(const Graph& g, int extra, std::mt19937_64& rng,
                       const std::function<bool(int, int)>& allowed) {
  std::vector<Edge> free;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v) && allowed(u, v)) free.emplace_back(u, v);
    }
  }
  std::shuffle(free.begin(), free.end(), rng);
  EdgeList edges = g.edges();
  for (int i = 0; i < extra && i < static_cast<int>(free.size()); ++i) edges.push_back(free[i]);
  return Graph(g.order(), edges);
}

}  // namespace

Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
  return add_random_edges(random_tree(n, rng), extra_edges, rng, [](int, int) { return true; });
}

Graph random_bipartite_connected(int n, int extra_edges, std::mt19937_64& rng) {
  Graph t = random_tree(n, rng);
  std::vector<int> colour = bipartition(t);
  return add_random_edges(t, extra_edges, rng,
                          [&](int u, int v) { return colour[u] != colour[v]; });
}

Graph random_mirror_graph(int half, std::mt19937_64& rng) {
  if (half < 1 || 2 * half > kMaxVertices) throw std::invalid_argument("random_mirror_graph: bad size");
  std::uniform_int_distribution<int> extra(0, half);
  Graph b = random_connected_graph(half, extra(rng), rng);
  EdgeList edges;
  for (auto [u, v] : b.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + half, v + half);
  }
  std::set<Edge> cross;
  std::uniform_int_distribution<int> pick(0, half - 1);
  std::uniform_int_distribution<int> count(1, half);
  for (int k = count(rng); k > 0; --k) {
    int i = pick(rng), j = pick(rng);
    cross.insert({i, j + half});
    cross.insert({j, i + half});
  }
  edges.insert(edges.end(), cross.begin(), cross.end());
  return Graph(2 * half, edges);
}

// ---------------------------------------------------------------------------
// Check plumbing

namespace {

constexpr double kStrict = 10 * kDefaultTol;  // smallest asserted strict gap
const std::vector<double> kGrid = {0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

class Run {
 public:
  Run(CheckOutcome& out, const CheckParams& p) : out_(out), p_(p) {
    std::uint64_t seed = get<std::uint64_t>("seed", 1);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(out.id)),
                      static_cast<std::uint32_t>(fnv1a(out.id) >> 32)};
    rng.seed(seq);
  }

  template <class T>
  T get(const char* key, T fallback) const {
    if (!p_.contains(key)) return fallback;
    try {
      return p_.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument(std::string("parameter '") + key + "' has the wrong type");
    }
  }

  std::vector<double> sigmas(const std::vector<double>& fallback) const {
    if (p_.contains("sigma")) return {check_sigma(get<double>("sigma", 0.0))};
    std::vector<double> s = get<std::vector<double>>("sigmas", fallback);
    for (double x : s) check_sigma(x);
    return s;
  }

  double random_sigma(const std::vector<double>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  void count(long k = 1) { out_.instances += k; }
  void margin(double m) { out_.margin = out_.margin ? std::min(*out_.margin, m) : m; }
  bool failed() const { return out_.status == CheckStatus::fail; }
  void fail(const std::string& witness, const std::string& repro = {}) {
    if (failed()) return;
    out_.status = CheckStatus::fail;
    out_.witness = witness;
    out_.reproduce = repro;
  }
  // Strict claim "gap > 0". Gaps within the resolvable floor are neither
  // asserted nor failed; they are counted and reported.
  void strict(double gap, const std::string& witness, const std::string& repro = {}) {
    margin(gap);
    if (gap < -kStrict) {
      fail(witness, repro);
    } else if (gap <= kStrict) {
      ++unresolved;
    }
  }
  void info(const std::string& why) {
    if (!failed()) out_.status = CheckStatus::info;
    note(why);
  }
  void note(const std::string& s) {
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += s;
  }

  std::mt19937_64 rng;
  long unresolved = 0;

 private:
  CheckOutcome& out_;
  const CheckParams& p_;
};

std::string spectral_cmd(const Graph& g, double sigma) {
  return "asigma spectral " + shell_quote(to_graph6(g)) + " --sigma " + num(sigma);
}

std::string search_cmd(int n, int alpha, double sigma, GraphClass c) {
  return "asigma search --n " + std::to_string(n) + " --alpha " + std::to_string(alpha) +
         " --sigma " + num(sigma) + " --class " + (c == GraphClass::tree ? "tree" : "graph");
}

double lam(const Graph& g, double sigma) { return largest_eigenvalue(g, sigma); }

int ceil_half(int n) { return (n + 1) / 2; }

Graph param_graph(const Run& r, const char* key) {
  std::string spec = r.get<std::string>(key, "");
  if (spec.empty()) throw std::invalid_argument(std::string("missing graph parameter ") + key);
  if (spec.rfind("g6:", 0) == 0) return from_graph6(spec.substr(3));
  return build(parse_family(spec));
}

// ---------------------------------------------------------------------------
// Universally quantified inequalities on random instances

void check_subgraph_monotonicity(Run& r) {
  int instances = r.get("instances", 200);
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(r.get("n_min", 4), r.get("n_max", 12));
    Graph g = random_connected_graph(n, r.uniform(0, n), r.rng);
    double s = r.random_sigma(kGrid);
    Graph h = g;
    std::string what;
    if (r.uniform(0, 1) == 0) {
      EdgeList e = g.edges();
      Edge x = e[r.uniform(0, static_cast<int>(e.size()) - 1)];
      h = delete_edge(g, x.first, x.second);
      what = "deleting edge " + std::to_string(x.first) + "-" + std::to_string(x.second);
    } else {
      int v = r.uniform(0, n - 1);
      h = delete_vertex(g, v);
      what = "deleting vertex " + std::to_string(v);
    }
    double gap = lam(g, s) - lam(h, s);
    r.count();
    r.strict(gap, to_graph6(g) + " sigma=" + num(s) + ": " + what + " changes lambda by " + num(gap),
             spectral_cmd(g, s));
  }
}

void check_neighbor_shift(Run& r) {
  int instances = r.get("instances", 200);
  int done = 0;
  for (int attempt = 0; done < instances && attempt < 50 * instances; ++attempt) {
    int n = r.uniform(4, r.get("n_max", 12));
    Graph g = random_connected_graph(n, r.uniform(0, n), r.rng);
    double s = r.random_sigma(kGrid);
    SpectralResult sr = spectral_radius(g, s);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || sr.perron[u] < sr.perron[v]) continue;
        std::uint64_t cand = g.row(v) & ~g.row(u) & ~(std::uint64_t{1} << u);
        if (cand) pairs.emplace_back(u, v);
      }
    }
    if (pairs.empty()) continue;
    auto [u, v] = pairs[r.uniform(0, static_cast<int>(pairs.size()) - 1)];
    VertexSet cand = mask_to_set(g.row(v) & ~g.row(u) & ~(std::uint64_t{1} << u));
    VertexSet rset;
    while (rset.empty()) {
      rset.clear();
      for (int w : cand) {
        if (r.uniform(0, 1)) rset.push_back(w);
      }
    }
    Graph star = shift_neighbors(g, v, u, rset);
    double gap = lam(star, s) - sr.lambda;
    ++done;
    r.count();
    r.strict(gap, to_graph6(g) + " sigma=" + num(s) + " moving " + std::to_string(rset.size()) +
                 " neighbours of " + std::to_string(v) + " to " + std::to_string(u) + ": gap " + num(gap),
             spectral_cmd(g, s));
  }
  if (done < instances) r.note("only " + std::to_string(done) + " admissible instances found");
}

void check_pendant_path_shift(Run& r) {
  int instances = r.get("instances", 200);
  for (int k = 0; k < instances; ++k) {
    // A single-vertex base makes both graphs paths of the same length.
    int n = r.uniform(2, r.get("n_max", 8));
    Graph h = random_connected_graph(n, r.uniform(0, n), r.rng);
    int v = r.uniform(0, n - 1);
    int t = r.uniform(1, 5);
    int s = r.uniform(t, 6);
    double sig = r.random_sigma(kGrid);
    Graph gst = attach_pendant_paths(h, v, {s, t});
    std::vector<int> shifted = {s + 1};
    if (t - 1 > 0) shifted.push_back(t - 1);
    Graph g2 = attach_pendant_paths(h, v, shifted);
    double gap = lam(gst, sig) - lam(g2, sig);
    r.count();
    r.strict(gap, to_graph6(gst) + " (s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                 ") sigma=" + num(sig) + ": gap " + num(gap),
             spectral_cmd(gst, sig));
  }
}

void check_spider_minimality(Run& r) {
  int n = r.get("n", 9);
  if (n < 5 || n > kMaxConnectedOrder) throw std::invalid_argument("spider_minimality needs 5 <= n <= 9");
  std::vector<double> sigmas = r.sigmas({0, 0.25, 0.5, 0.75});
  auto src = all_connected_graphs(n);
  std::vector<Graph> graphs = collect(*src);
  std::string dn = canonical_code(d_graph(n));
  std::string pn = canonical_code(path_graph(n));
  std::string cn = canonical_code(cycle_graph(n));
  bool informational = n < 9;
  if (informational) r.info("n < 9 is outside the claimed range; outcome not asserted");
  for (double s : sigmas) {
    double ld = spectral_radius(d_graph(n), s).lambda;
    for (const Graph& g : graphs) {
      r.count();
      double lb = std::max(2.0 * g.size() / n, bound_star_lower(g.max_degree(), s));
      if (lb > ld + 1e-6) continue;
      std::string code = to_graph6(g);  // enumeration yields canonical forms
      if (code == pn || code == cn || code == dn) continue;
      double gap = spectral_radius(g, s).lambda - ld;
      std::string w = code + " sigma=" + num(s) + " has lambda below or equal to D_n by " + num(-gap);
      if (!informational) {
        r.strict(gap, w, spectral_cmd(g, s));
      } else if (gap <= kStrict) {
        r.note(w);
      }
    }
  }
}

void check_leaf_mis(Run& r) {
  int instances = r.get("instances", 200);
  for (int k = 0; k < instances; ++k) {
    Graph t = random_tree(r.uniform(3, r.get("n_max", 30)), r.rng);
    auto s = leaf_containing_mis(t);
    r.count();
    std::uint64_t m = s ? set_to_mask(*s) : 0;
    bool ok = s.has_value();
    for (int v : ok ? *s : VertexSet{}) ok = ok && !(t.row(v) & m);
    for (int l : leaves(t)) ok = ok && (m >> l & 1U);
    ok = ok && static_cast<int>(s->size()) == independence_number(t).alpha;
    if (!ok) r.fail(to_graph6(t) + ": no maximum independent set containing all leaves");
  }
  if (leaf_containing_mis(path_graph(2))) r.fail("P_2 reported a leaf-containing independent set");
  r.note("P_2 excluded: its two leaves are adjacent");
}

void check_alternating_mis_bound(Run& r) {
  int instances = r.get("instances", 200);
  int hypothesis = 0;
  for (int k = 0; k < instances; ++k) {
    Graph t;
    if (k % 2 == 0) {
      t = random_tree(r.uniform(3, 24), r.rng);
    } else {
      // Subdivision shapes with pendants on every skeleton leaf satisfy the
      // alternation hypothesis, so the bound is exercised non-vacuously.
      Graph skel = random_tree(r.uniform(2, 7), r.rng);
      std::vector<int> roots, ells;
      for (int v = 0; v < skel.order(); ++v) {
        roots.push_back(v);
        ells.push_back(r.uniform(skel.degree(v) == 1 ? 1 : 0, 3));
      }
      t = rooted_attach(subdivision_graph(skel), roots, ells);
    }
    r.count();
    auto in = leaf_containing_mis(t);
    if (!in) continue;
    std::uint64_t m = set_to_mask(*in);
    VertexSet lv = leaves(t);
    bool alternates = true;
    for (std::size_t i = 0; i < lv.size() && alternates; ++i) {
      for (std::size_t j = i + 1; j < lv.size() && alternates; ++j) {
        std::vector<int> p = tree_path(t, lv[i], lv[j]);
        for (std::size_t q = 0; q + 1 < p.size(); ++q) {
          alternates = alternates && ((m >> p[q] & 1U) != (m >> p[q + 1] & 1U));
        }
      }
    }
    if (!alternates) continue;
    ++hypothesis;
    int a = static_cast<int>(in->size());
    r.margin(2.0 * a - (t.order() + 1));
    if (2 * a < t.order() + 1) {
      r.fail(to_graph6(t) + ": alternating but alpha=" + std::to_string(a) + " < (n+1)/2");
    }
  }
  r.note(std::to_string(hypothesis) + " instances met the alternation hypothesis");
  if (hypothesis == 0) r.fail("no instance met the alternation hypothesis");
}

void check_internal_subdivision(Run& r) {
  std::vector<std::pair<Graph, double>> cases;
  if (r.get<std::string>("graph", "").size()) {
    Graph g = param_graph(r, "graph");
    for (double s : r.sigmas({0.5})) cases.emplace_back(g, s);
  } else {
    for (double s : kGrid) cases.emplace_back(w_graph(13), s);
    int instances = r.get("instances", 200);
    for (int k = 0, attempt = 0; k < instances && attempt < 50 * instances; ++attempt) {
      int n = r.uniform(6, 16);
      Graph g = r.uniform(0, 2) ? random_tree(n, r.rng) : random_connected_graph(n, r.uniform(0, 3), r.rng);
      if (internal_edges(g).empty()) continue;
      cases.emplace_back(g, r.random_sigma(kGrid));
      ++k;
    }
  }
  for (auto& [g, s] : cases) {
    EdgeList ie = internal_edges(g);
    if (ie.empty()) throw std::invalid_argument("graph has no internal edge");
    Edge e = ie[r.uniform(0, static_cast<int>(ie.size()) - 1)];
    Graph g2 = subdivide_edge(g, e, 1);
    double gap = lam(g, s) - lam(g2, s);
    r.count();
    r.margin(gap);
    if (gap < -kStrict) {
      r.fail(to_graph6(g) + " sigma=" + num(s) + ": subdividing " + std::to_string(e.first) + "-" +
                 std::to_string(e.second) + " raised lambda by " + num(-gap),
             spectral_cmd(g, s));
    }
  }
}

void check_subdivision_alpha(Run& r) {
  int instances = r.get("instances", 200);
  std::vector<Graph> graphs = {cycle_graph(6)};
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(2, 12);
    graphs.push_back(random_connected_graph(n, r.uniform(0, 2 * n), r.rng));
  }
  for (const Graph& g : graphs) {
    EdgeList e = g.edges();
    Edge x = e[r.uniform(0, static_cast<int>(e.size()) - 1)];
    int a = independence_number(g).alpha;
    int a1 = independence_number(subdivide_edge(g, x, 1)).alpha;
    int a2 = independence_number(subdivide_edge(g, x, 2)).alpha;
    r.count();
    if ((a1 != a && a1 != a + 1) || a2 != a + 1) {
      r.fail(to_graph6(g) + " edge " + std::to_string(x.first) + "-" + std::to_string(x.second) +
             ": alpha " + std::to_string(a) + " -> " + std::to_string(a1) + ", " + std::to_string(a2));
    }
  }
}

void check_pendant_attach_identity(Run& r) {
  int instances = r.get("instances", 200);
  double tol = r.get("tol", 1e-8);
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(2, r.get("n_max", 12));
    Graph g = random_bipartite_connected(n, r.uniform(0, n), r.rng);
    std::vector<int> colour = bipartition(g);
    int side = r.uniform(0, 1);
    VertexSet part;
    for (int v = 0; v < n; ++v) {
      if (colour[v] == side) part.push_back(v);
    }
    int kk = r.uniform(1, 4);
    Graph h = rooted_attach(g, part, std::vector<int>(part.size(), kk));
    double predicted = pendant_attach_lambda0(g, part, kk);
    double direct = std::sqrt(std::pow(spectral_radius(g, 0.0).lambda, 2) + kk);
    double actual = spectral_radius(h, 0.0).lambda;
    double err = std::max(std::fabs(actual - predicted), std::fabs(actual - direct));
    r.count();
    r.margin(tol - err);
    if (err > tol) {
      r.fail(to_graph6(g) + " with k=" + std::to_string(kk) + " on " + std::to_string(part.size()) +
                 " vertices: error " + num(err),
             spectral_cmd(h, 0.0));
    }
  }
}

void check_convex_bound(Run& r) {
  int instances = r.get("instances", 200);
  int strict_cases = 0;
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(3, 12);
    Graph g = random_connected_graph(n, r.uniform(0, n), r.rng);
    double s = r.uniform_real(0.0, 0.5);
    double l = spectral_radius(g, s).lambda;
    double b = bound_convex(g, s);
    r.count();
    bool regular = g.max_degree() == g.min_degree();
    if (b - l < -1e-10) {
      r.fail(to_graph6(g) + " sigma=" + num(s) + ": lambda exceeds the bound by " + num(l - b),
             spectral_cmd(g, s));
    }
    if (!regular && s > 0.01 && s < 0.49) {
      ++strict_cases;
      r.strict(b - l, to_graph6(g) + " sigma=" + num(s) + ": equality for an irregular graph", spectral_cmd(g, s));
    }
  }
  r.note(std::to_string(strict_cases) + " strict (irregular, interior sigma) cases");
}

void check_path_radius(Run& r) {
  int lo = r.get("n_min", 2), hi = r.get("n_max", 50);
  double tol = r.get("tol", 1e-9);
  for (int n = lo; n <= hi; ++n) {
    double err = std::fabs(spectral_radius(path_graph(n), 0.0).lambda - 2 * std::cos(M_PI / (n + 1)));
    r.count();
    r.margin(tol - err);
    if (err > tol) r.fail("P_" + std::to_string(n) + ": error " + num(err), spectral_cmd(path_graph(n), 0));
  }
}

void check_star_bound(Run& r) {
  int instances = r.get("instances", 200);
  for (double s : kGrid) {
    for (int d = 1; d <= 8; ++d) {
      double err = std::fabs(spectral_radius(star_graph(d), s).lambda - bound_star_lower(d, s));
      r.count();
      if (err > 1e-9) r.fail("K_{1," + std::to_string(d) + "} sigma=" + num(s) + ": equality off by " + num(err));
    }
  }
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(3, 12);
    Graph g = random_connected_graph(n, r.uniform(0, n), r.rng);
    double s = r.random_sigma(kGrid);
    double gap = spectral_radius(g, s).lambda - bound_star_lower(g.max_degree(), s);
    r.count();
    bool star = g.max_degree() == n - 1 && g.size() == n - 1;
    if (star) continue;
    r.strict(gap, to_graph6(g) + " sigma=" + num(s) + ": gap " + num(gap), spectral_cmd(g, s));
  }
}

void check_degree_bound(Run& r) {
  int instances = r.get("instances", 200);
  std::vector<std::pair<Graph, double>> cases;
  for (double s : kGrid) cases.emplace_back(star_graph(3), s);
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(2, 12);
    cases.emplace_back(random_connected_graph(n, r.uniform(0, n), r.rng), r.random_sigma(kGrid));
  }
  for (auto& [g, s] : cases) {
    double gap = spectral_radius(g, s).lambda - bound_degree_lower(g.max_degree(), s);
    r.count();
    r.margin(gap);
    if (gap < -1e-10) {
      r.fail(to_graph6(g) + " sigma=" + num(s) + ": lambda is below the bound by " + num(-gap),
             spectral_cmd(g, s));
    }
  }
}

void check_edge_density_bound(Run& r) {
  int instances = r.get("instances", 200);
  std::vector<Graph> graphs = {cycle_graph(7), complete_graph(5), prism_graph(4), f_graph(3, 3)};
  for (int k = 0; k < instances; ++k) {
    int n = r.uniform(2, 12);
    graphs.push_back(random_connected_graph(n, r.uniform(0, 2 * n), r.rng));
  }
  for (const Graph& g : graphs) {
    double s = r.random_sigma(kGrid);
    auto [lo, hi] = bound_edge_density(g, s);
    double l = spectral_radius(g, s).lambda;
    r.count();
    bool regular = g.max_degree() == g.min_degree();
    if (l < lo - 1e-10 || l > hi + 1e-10) {
      r.fail(to_graph6(g) + " sigma=" + num(s) + ": lambda " + num(l) + " outside [" + num(lo) + ", " +
                 num(hi) + "]",
             spectral_cmd(g, s));
    } else if (regular && l - lo > 1e-9) {
      r.fail(to_graph6(g) + " regular but lower bound not attained", spectral_cmd(g, s));
    } else if (!regular) {
      r.strict(l - lo, to_graph6(g) + " irregular but lower bound attained", spectral_cmd(g, s));
    }
  }
}

// Characterisation: a tree is a subdivision tree iff it is
// bipartite with one side all of degree two and the other side of size t.
bool subdivision_characterised(const Graph& g, int& t) {
  std::vector<int> colour = bipartition(g);
  for (int side : {0, 1}) {
    bool ok = true;
    int other = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (colour[v] == side) {
        ok = ok && g.degree(v) == 2;
      } else {
        ++other;
      }
    }
    if (ok) {
      t = other;
      return true;
    }
  }
  return false;
}

void check_subdivision_characterization(Run& r) {
  int instances = r.get("instances", 200);
  for (int k = 0; k < instances; ++k) {
    Graph skel = random_tree(r.uniform(2, 9), r.rng);
    Graph s = subdivision_graph(skel);
    int t = 0;
    r.count();
    if (!subdivision_characterised(s, t) || t != skel.order()) {
      r.fail(to_graph6(s) + ": subdivision tree fails the bipartite degree-two test");
      continue;
    }
    // Converse on arbitrary trees: when the test passes, rebuild T and compare.
    Graph g = random_tree(r.uniform(3, 15), r.rng);
    if (subdivision_characterised(g, t)) {
      std::vector<int> colour = bipartition(g);
      int deg2_side = -1;
      for (int v = 0; v < g.order() && deg2_side < 0; ++v) {
        if (g.degree(v) != 2) deg2_side = 1 - colour[v];
      }
      if (deg2_side < 0) deg2_side = colour[0];
      VertexSet keep;
      for (int v = 0; v < g.order(); ++v) {
        if (colour[v] != deg2_side) keep.push_back(v);
      }
      std::map<int, int> idx;
      for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
      EdgeList e;
      bool ok = true;
      for (int v = 0; v < g.order(); ++v) {
        if (colour[v] != deg2_side) continue;
        VertexSet nb = g.neighbors(v);
        if (nb.size() != 2) {
          ok = false;
          break;
        }
        e.emplace_back(idx[nb[0]], idx[nb[1]]);
      }
      if (ok && is_tree(Graph(static_cast<int>(keep.size()), e)) &&
          !is_isomorphic(subdivision_graph(Graph(static_cast<int>(keep.size()), e)), g)) {
        r.fail(to_graph6(g) + ": passes the test but is not a subdivision tree");
      }
    }
    // Shape decomposition round trip with pendants on every skeleton leaf.
    std::vector<int> roots, ells;
    for (int v = 0; v < skel.order(); ++v) {
      roots.push_back(v);
      ells.push_back(r.uniform(skel.degree(v) == 1 ? 1 : 0, 4));
    }
    Graph shaped = rooted_attach(s, roots, ells);
    ShapeDecomposition d = shape_decompose(shaped);
    if (!d.witness || !is_isomorphic(rebuild_shape(*d.witness), shaped) ||
        d.witness->skeleton.order() != skel.order()) {
      r.fail(to_graph6(shaped) + ": shape decomposition does not round-trip");
    }
  }
}

void check_pendant_rebalancing(Run& r) {
  int instances = r.get("instances", 200);
  for (int k = 0; k < instances; ++k) {
    int half = r.uniform(1, 5);
    Graph g = random_mirror_graph(half, r.rng);
    int u = r.uniform(0, half - 1), v = u + half;
    if (!is_isomorphic(delete_vertex(g, u), delete_vertex(g, v))) {
      r.fail(to_graph6(g) + ": mirror construction broke G-u = G-v");
      continue;
    }
    int t = r.uniform(1, 5);
    int s = r.uniform(t, 6);
    double sig = r.random_sigma(kGrid);
    Graph a = rooted_attach(g, {u, v}, {s, t});
    Graph b = rooted_attach(g, {u, v}, {s + 1, t - 1});
    double gap = lam(b, sig) - lam(a, sig);
    r.count();
    r.strict(gap, to_graph6(g) + " u=" + std::to_string(u) + " v=" + std::to_string(v) + " (s,t)=(" +
                 std::to_string(s) + "," + std::to_string(t) + ") sigma=" + num(sig) + ": gap " + num(gap),
             spectral_cmd(a, sig));
  }
}

// Non-empty block indices of the formal quotients, in partition order.
std::vector<int> t1_live_blocks(int a, int d) {
  std::vector<int> idx;
  if (a > 0) idx.push_back(0);
  idx.insert(idx.end(), {1, 2, 3});
  if (d > 0) idx.push_back(4);
  return idx;
}

std::vector<int> t2_live_blocks(const std::array<int, 4>& c) {
  std::vector<int> idx;
  for (int i = 0; i < 4; ++i) {
    if (c[i] > 0) idx.push_back(3 * i);
    idx.push_back(3 * i + 1);
    if (i < 3) idx.push_back(3 * i + 2);
  }
  return idx;
}

void check_equitable_quotient(Run& r) {
  std::vector<double> sigmas = r.sigmas({0.5, 0.6, 0.7, 0.8, 0.9});
  int tlo = r.get("t_min", 3), thi = r.get("t_max", 8);
  double tol = r.get("tol", 1e-8);
  auto one = [&](const Graph& g, const Partition& p, double s, const QuotientMatrix* formal,
                 const std::vector<int>& live, const std::string& label) {
    r.count();
    if (!is_equitable(g, s, p)) {
      r.fail(label + " sigma=" + num(s) + ": partition is not equitable");
      return;
    }
    QuotientMatrix q = quotient_matrix(g, s, p);
    if (formal) {
      for (std::size_t i = 0; i < live.size(); ++i) {
        for (std::size_t j = 0; j < live.size(); ++j) {
          if (std::fabs(q(i, j) - (*formal)(live[i], live[j])) > 1e-12) {
            r.fail(label + " sigma=" + num(s) + ": closed-form quotient differs at (" + std::to_string(i) +
                   "," + std::to_string(j) + ")");
            return;
          }
        }
      }
    }
    double err = std::fabs(quotient_lambda(q) - spectral_radius(g, s).lambda);
    r.margin(tol - err);
    if (err > tol) r.fail(label + " sigma=" + num(s) + ": quotient root off by " + num(err), spectral_cmd(g, s));
  };
  for (double s : sigmas) {
    for (int t = tlo; t <= thi; ++t) {
      for (FactorizationId id : all_factorization_ids()) {
        if (id == FactorizationId::t1_hub_shift_half) continue;
        FactorizationPair fp = factorization_pair(id, t);
        for (const auto& c : {fp.first, fp.second}) {
          std::string label = (fp.t1 ? "T1(" : "T2(") + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                              "," + std::to_string(c[2]) + "," + std::to_string(c[3]) + ")";
          if (fp.t1) {
            QuotientMatrix f = t1_hub_quotient(s, c[0], c[3]);
            one(t1_graph(c), t1_hub_partition(c[0], c[3]), s, &f, t1_live_blocks(c[0], c[3]), label);
          } else {
            QuotientMatrix f = t2_block_quotient(s, c);
            one(t2_graph(c), t2_block_partition(c), s, &f, t2_live_blocks(c), label);
          }
        }
      }
    }
    one(g2_graph(), {{0, 4}, {3, 5}, {1, 2}}, s, nullptr, {}, "G2");
    one(f_graph(3, 3), {{2, 3}, {0, 1, 4, 5}}, s, nullptr, {}, "F33");
  }
}

void check_perron_comparison(Run& r) {
  std::vector<double> sigmas = r.sigmas({0.5, 0.6, 0.7, 0.75, 0.8, 0.9});
  std::vector<std::array<int, 4>> tuples;
  if (r.get<std::vector<int>>("counts", {}).size() == 4) {
    auto v = r.get<std::vector<int>>("counts", {});
    tuples.push_back({v[0], v[1], v[2], v[3]});
  } else {
    tuples.push_back({2, 1, 1, 2});
    int lmax = r.get("l_max", 5);
    std::array<int, 4> c{};
    for (c[0] = 0; c[0] <= lmax; ++c[0])
      for (c[1] = 0; c[1] <= lmax; ++c[1])
        for (c[2] = 0; c[2] <= lmax; ++c[2])
          for (c[3] = 0; c[3] <= lmax; ++c[3]) tuples.push_back(c);
  }
  int applicable = 0;
  for (const auto& c : tuples) {
    std::array<int, 4> d = {c[0] + 1, c[1] + 2, c[2] + 2, c[3] + 1};
    if (*std::max_element(d.begin(), d.end()) - *std::min_element(d.begin(), d.end()) > 2) continue;
    Graph g = t2_graph(c);
    int delta = g.max_degree();
    for (double s : sigmas) {
      if (s < 0.5) continue;
      r.count();
      bool left = c[0] >= 1 && delta > c[0] + 1;
      bool right = c[3] >= 1 && delta > c[3] + 1;
      if (!left && !right) continue;
      SpectralResult sr = spectral_radius(g, s);
      const auto& x = sr.perron;
      auto test = [&](int a, int b, const char* which) {
        ++applicable;
        r.margin(x[b] - x[a]);
        if (x[a] > x[b] + 1e-10) {
          r.fail("T2(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
                     "," + std::to_string(c[3]) + ") sigma=" + num(s) + ": " + which + " weight order reversed",
                 spectral_cmd(g, s));
        }
      };
      if (left) test(0, 1, "u1/u2");
      if (right) test(3, 2, "u4/u3");
    }
  }
  r.note(std::to_string(applicable) + " comparisons met the hypotheses");
}

void check_t2_balance_comparison(Run& r) {
  std::vector<double> sigmas = r.sigmas({0.5, 0.6, 0.7, 0.8, 0.9});
  for (int t = r.get("t_min", 1); t <= r.get("t_max", 6); ++t) {
    for (double s : sigmas) {
      Graph a = t2_graph({t, t, t, t});
      Graph b = t2_graph({t + 1, t - 1, t - 1, t + 1});
      double gap = lam(a, s) - lam(b, s);
      r.count();
      r.strict(gap, "t=" + std::to_string(t) + " sigma=" + num(s) + ": gap " + num(gap), spectral_cmd(a, s));
    }
  }
}

void check_complement_edge_bound(Run& r) {
  for (int n = r.get("n_min", 3); n <= r.get("n_max", 8); ++n) {
    auto src = filter_alpha(all_connected_graphs(n), 2);
    int cap = n * n / 4 - 1;
    while (auto g = src->next()) {
      int ec = complement(*g).size();
      r.count();
      r.margin(cap - ec);
      if (ec > cap) r.fail(to_graph6(*g) + ": complement has " + std::to_string(ec) + " edges");
    }
  }
}

void check_equivalent_vertex_weights(Run& r) {
  int instances = r.get("instances", 200);
  for (double s : kGrid) {
    for (const Graph& g : {cycle_graph(7), prism_graph(3), prism_graph(5), complete_bipartite(3, 3)}) {
      SpectralResult sr = spectral_radius(g, s);
      double spread = *std::max_element(sr.perron.begin(), sr.perron.end()) -
                      *std::min_element(sr.perron.begin(), sr.perron.end());
      r.count();
      if (spread > 1e-9) r.fail(to_graph6(g) + " vertex-transitive but weights spread " + num(spread));
    }
  }
  for (int k = 0; k < instances; ++k) {
    int half = r.uniform(1, 8);
    Graph g = random_mirror_graph(half, r.rng);
    double s = r.random_sigma(kGrid);
    SpectralResult sr = spectral_radius(g, s);
    r.count();
    for (int i = 0; i < half; ++i) {
      double d = std::fabs(sr.perron[i] - sr.perron[i + half]);
      if (d > 1e-9) {
        r.fail(to_graph6(g) + " sigma=" + num(s) + ": equivalent vertices " + std::to_string(i) + ", " +
                   std::to_string(i + half) + " differ by " + num(d),
               spectral_cmd(g, s));
        break;
      }
    }
  }
}

void check_extreme_alpha_minimizers(Run& r) {
  std::vector<double> sigmas = r.sigmas(kGrid);
  for (int n = r.get("n_min", 4); n <= r.get("n_max", 8); ++n) {
    auto src = all_connected_graphs(n);
    std::vector<Graph> graphs = collect(*src);
    for (auto [alpha, expect] : {std::pair{ceil_half(n), path_graph(n)}, std::pair{n - 1, star_graph(n - 1)}}) {
      auto vs = vector_stream(graphs);
      auto recs = find_minimizers_in(*vs, {n, alpha, GraphClass::connected}, sigmas);
      std::string code = canonical_code(expect);
      for (const auto& rec : recs) {
        r.count();
        if (rec.minimizers != std::vector<std::string>{code}) {
          r.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " sigma=" + num(rec.sigma) +
                     ": minimizers " + nlohmann::json(rec.minimizers).dump(),
                 search_cmd(n, alpha, rec.sigma, GraphClass::connected));
        }
      }
    }
  }
}

void check_factorization(Run& r, FactorizationId id) {
  int samples = r.get("samples", 100);
  double tol = r.get("tol", 1e-7);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    double s = id == FactorizationId::t1_hub_shift_half ? 0.5 : r.uniform_real(0.5, 1.0);
    int t = r.uniform(r.get("t_min", 3), r.get("t_max", 8));
    double x = r.uniform_real(0.0, t + 6.0);
    FactorizationEvaluation ev = evaluate_factorization(id, s, t, x);
    double rel = std::fabs(ev.f1 - ev.f2 - ev.rhs) / ev.scale;
    worst = std::max(worst, rel);
    r.count();
    if (rel > tol) {
      r.fail("sigma=" + num(s) + " t=" + std::to_string(t) + " x=" + num(x) + ": f1-f2=" + num(ev.f1 - ev.f2) +
             " vs " + num(ev.rhs));
    }
  }
  r.margin(tol - worst);
  r.note("worst relative error " + num(worst));
}

// ---------------------------------------------------------------------------
// Minimiser claims via exhaustive search

void check_tree_minimizers(Run& r) {
  std::vector<double> sigmas = r.sigmas({0, 0.25, 0.5, 0.75});
  double tie = r.get("tie_tol", 1e-9);
  SearchOptions opts;
  opts.tie_tol = tie;
  for (int n = r.get("n_min", 5); n <= r.get("n_max", 9); ++n) {
    auto src = all_connected_graphs(n);
    std::vector<Graph> graphs = collect(*src);
    for (int alpha = ceil_half(n); alpha <= n - 1; ++alpha) {
      auto vs = vector_stream(graphs);
      auto recs = find_minimizers_in(*vs, {n, alpha, GraphClass::connected}, sigmas, opts);
      for (const auto& rec : recs) {
        for (const auto& code : rec.minimizers) {
          r.count();
          if (!is_tree(from_graph6(code))) {
            r.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " sigma=" + num(rec.sigma) +
                       ": minimizer " + code + " is not a tree",
                   search_cmd(n, alpha, rec.sigma, GraphClass::connected));
          }
        }
      }
    }
  }
}

void check_spider_minimizers(Run& r) {
  std::vector<double> sigmas = r.sigmas(kGrid);
  int lo = r.get("n_min", 9), hi = r.get("n_max", 14);
  if (lo < 9) r.info("n < 9 is outside the claimed range; those orders are not asserted");
  for (int n = lo; n <= hi; ++n) {
    int alpha = ceil_half(n) + 1;
    // At n = 14, sigma = 0.9 the runner-up sits 2e-9 above D_14, inside the
    // default relative window, so uniqueness is judged at 10x eigen tolerance.
    SearchOptions opts;
    opts.tie_tol = r.get("tie_tol", kStrict);
    auto recs = find_minimizers_multi({n, alpha, GraphClass::tree}, sigmas, opts);
    std::string expect = canonical_code(n % 2 == 0 ? d_graph(n) : w_graph(n));
    for (const auto& rec : recs) {
      r.count();
      if (rec.minimizers != std::vector<std::string>{expect}) {
        std::string w = "n=" + std::to_string(n) + " sigma=" + num(rec.sigma) + ": minimizers " +
                        nlohmann::json(rec.minimizers).dump() + ", expected " + expect;
        if (n < 9) {
          r.note(w);
        } else {
          r.fail(w, search_cmd(n, alpha, rec.sigma, GraphClass::tree));
        }
      }
    }
  }
}

// Orders n <= n_max at which the shape claim applies for c = n - alpha,
// with the sigmas that reach it.
std::map<int, std::vector<double>> shape_regime(int c, int n_max, const std::vector<double>& sigmas) {
  std::map<int, std::vector<double>> out;
  for (double s : sigmas) {
    for (int n = std::max(shape_threshold(c, s), c + 1); n <= n_max; ++n) out[n].push_back(s);
  }
  return out;
}

void check_subdivision_shape(Run& r) {
  int c = r.get("c", 4);
  int n_max = std::min(r.get("n_max", 19), kMaxTreeOrder);
  SearchOptions opts;
  opts.tie_tol = r.get("tie_tol", 1e-9);
  auto regime = shape_regime(c, n_max, r.sigmas(kGrid));
  if (regime.empty()) r.note("no (n, sigma) pair reaches the threshold");
  for (const auto& [n, sigmas] : regime) {
    int alpha = n - c;
    for (const auto& rec : find_minimizers_multi({n, alpha, GraphClass::tree}, sigmas, opts)) {
      for (const auto& code : rec.minimizers) {
        r.count();
        Graph g = from_graph6(code);
        ShapeDecomposition d = shape_decompose(g);
        std::string where = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " sigma=" +
                            num(rec.sigma) + " minimizer " + code;
        if (!d.witness) {
          r.fail(where + ": " + d.rejection, search_cmd(n, alpha, rec.sigma, GraphClass::tree));
          continue;
        }
        int total = std::accumulate(d.witness->counts.begin(), d.witness->counts.end(), 0);
        if (d.witness->skeleton.order() != c || total != 2 * alpha - n + 1 ||
            !is_isomorphic(rebuild_shape(*d.witness), g)) {
          r.fail(where + ": skeleton order " + std::to_string(d.witness->skeleton.order()) + ", " +
                     std::to_string(total) + " pendants",
                 search_cmd(n, alpha, rec.sigma, GraphClass::tree));
        }
      }
    }
  }
}

void check_attachment_ranges(Run& r) {
  int n_max = std::min(r.get("n_max", 19), kMaxTreeOrder);
  SearchOptions opts;
  opts.tie_tol = r.get("tie_tol", 1e-9);
  auto regime = shape_regime(4, n_max, r.sigmas(kGrid));
  for (const auto& [n, sigmas] : regime) {
    for (const auto& rec : find_minimizers_multi({n, n - 4, GraphClass::tree}, sigmas, opts)) {
      for (const auto& code : rec.minimizers) {
        r.count();
        AuditReport rep = attachment_range_check(from_graph6(code), rec.sigma);
        for (const auto& p : rep.predicates) {
          if (!p.pass) {
            r.fail("n=" + std::to_string(n) + " sigma=" + num(rec.sigma) + " minimizer " + code + ": " + p.witness,
                   search_cmd(n, n - 4, rec.sigma, GraphClass::tree));
          }
        }
      }
    }
  }
}

void check_structural_props(Run& r) {
  std::vector<double> sigmas = r.sigmas(kGrid);
  SearchOptions opts;
  // At sigma near 1 distinct trees come within a few 1e-12 of each other, so
  // the audit uses a tie tolerance close to double precision.
  opts.tie_tol = r.get("tie_tol", 1e-13);
  for (int n = r.get("n_min", 10); n <= r.get("n_max", 16); ++n) {
    for (int alpha = ceil_half(n) + 2; alpha <= n - 2; ++alpha) {
      for (const auto& rec : find_minimizers_multi({n, alpha, GraphClass::tree}, sigmas, opts)) {
        for (const auto& code : rec.minimizers) {
          r.count();
          AuditReport rep = structural_audit(from_graph6(code), alpha);
          for (const auto& p : rep.predicates) {
            if (!p.pass) {
              r.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " sigma=" + num(rec.sigma) +
                         " minimizer " + code + ": " + p.name + ": " + p.witness,
                     search_cmd(n, alpha, rec.sigma, GraphClass::tree));
            }
          }
        }
      }
    }
  }
}

void check_table_candidates(Run& r) {
  std::vector<double> sigmas = r.sigmas({0.5, 0.6, 0.75, 0.9});
  SearchOptions opts;
  opts.tie_tol = r.get("tie_tol", 1e-9);
  int lo = std::max(12, r.get("n_min", 12));
  int hi = std::min(r.get("n_max", 21), kMaxTreeOrder);
  for (int n = lo; n <= hi; ++n) {
    std::vector<CandidateRow> rows = candidate_rows(n, true);
    for (const auto& rec : find_minimizers_multi({n, n - 4, GraphClass::tree}, sigmas, opts)) {
      for (const auto& code : rec.minimizers) {
        r.count();
        Graph g = from_graph6(code);
        ShapeDecomposition d = shape_decompose(g);
        if (!d.witness) {
          r.fail("n=" + std::to_string(n) + " sigma=" + num(rec.sigma) + " minimizer " + code + ": " + d.rejection,
                 search_cmd(n, n - 4, rec.sigma, GraphClass::tree));
          continue;
        }
        auto row = identify_candidate(g);
        if (!row || std::find(rows.begin(), rows.end(), *row) == rows.end()) {
          r.fail("n=" + std::to_string(n) + " sigma=" + num(rec.sigma) + " minimizer " + code + " (" +
                     (row ? to_string(*row) : std::string("no T1/T2 shape")) + ") is not a listed candidate",
                 search_cmd(n, n - 4, rec.sigma, GraphClass::tree));
        }
      }
    }
  }
}

void check_w11_minimizer(Run& r) {
  std::string expect = canonical_code(w_graph(11));
  for (const auto& rec : find_minimizers_multi({11, 7, GraphClass::tree}, r.sigmas(kGrid))) {
    r.count();
    if (rec.minimizers != std::vector<std::string>{expect}) {
      r.fail("sigma=" + num(rec.sigma) + ": minimizers " + nlohmann::json(rec.minimizers).dump(),
             search_cmd(11, 7, rec.sigma, GraphClass::tree));
    }
  }
}

void check_table_regeneration(Run& r) {
  for (int n = 12; n <= kMaxVertices; ++n) {
    std::vector<CandidateRow> stored = stored_unrefined_rows(n), regen = candidate_rows(n, false);
    std::vector<CandidateRow> refined = candidate_rows(n, true);
    std::sort(stored.begin(), stored.end());
    r.count();
    if (stored != regen) r.fail("n=" + std::to_string(n) + ": stored rows differ from the attachment ranges");
    for (const auto& row : refined) {
      if (!std::binary_search(regen.begin(), regen.end(), row)) {
        r.fail("n=" + std::to_string(n) + ": refined row " + to_string(row) + " outside the unrefined list");
      }
    }
  }
}

void check_tie_robustness(Run& r) {
  double tie = r.get("tie_tol", 1e-9);
  std::vector<double> sigmas = r.sigmas(kGrid);
  struct Case {
    int n, alpha;
    GraphClass cls;
  };
  for (Case c : {Case{6, 2, GraphClass::connected}, Case{8, 5, GraphClass::connected},
                 Case{10, 6, GraphClass::tree}, Case{13, 9, GraphClass::tree},
                 Case{16, 12, GraphClass::tree}, Case{18, 14, GraphClass::tree}}) {
    SearchOptions a, b;
    a.tie_tol = tie;
    b.tie_tol = tie / 2;
    auto ra = find_minimizers_multi({c.n, c.alpha, c.cls}, sigmas, a);
    auto rb = find_minimizers_multi({c.n, c.alpha, c.cls}, sigmas, b);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      r.count();
      if (ra[i].minimizers != rb[i].minimizers) {
        r.fail("n=" + std::to_string(c.n) + " alpha=" + std::to_string(c.alpha) + " sigma=" + num(ra[i].sigma) +
                   ": " + std::to_string(ra[i].minimizers.size()) + " vs " +
                   std::to_string(rb[i].minimizers.size()) + " minimizers after halving",
               search_cmd(c.n, c.alpha, ra[i].sigma, c.cls));
      }
    }
  }
}

void check_f33_unique(Run& r) {
  std::vector<double> sigmas = r.sigmas({0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
  std::string expect = canonical_code(f_graph(3, 3));
  for (const auto& rec : find_minimizers_multi({6, 2, GraphClass::connected}, sigmas)) {
    r.count();
    double s = rec.sigma;
    double closed = 1.5 * s + std::sqrt(9 * s * s - 16 * s + 8) / 2 + 1;
    double err = std::fabs(spectral_radius(f_graph(3, 3), s).lambda - closed);
    r.margin(1e-9 - err);
    if (rec.minimizers != std::vector<std::string>{expect}) {
      r.fail("sigma=" + num(s) + ": minimizers " + nlohmann::json(rec.minimizers).dump(),
             search_cmd(6, 2, s, GraphClass::connected));
    } else if (err > 1e-9) {
      r.fail("sigma=" + num(s) + ": F_{3,3} closed form off by " + num(err), spectral_cmd(f_graph(3, 3), s));
    }
  }
}

void check_complement_bipartite(Run& r) {
  if (!is_isomorphic(complement(g1_graph()), g2_graph())) r.fail("complement of G1 is not G2");
  for (const auto& rec : find_minimizers_multi({6, 2, GraphClass::connected}, r.sigmas(kGrid))) {
    for (const auto& code : rec.minimizers) {
      r.count();
      if (!is_bipartite(complement(from_graph6(code)))) {
        r.fail("sigma=" + num(rec.sigma) + ": complement of minimizer " + code + " is not bipartite");
      }
    }
  }
}

struct Registration {
  std::string id;
  std::string description;
  std::vector<std::string> suites;
  std::function<void(Run&)> fn;
};

const std::vector<Registration>& registry() {
  static const std::vector<Registration> reg = [] {
    std::vector<Registration> v = {
        {"subgraph_monotonicity", "proper subgraphs have smaller spectral radius", {"lemmas"},
         check_subgraph_monotonicity},
        {"neighbor_shift", "moving neighbours towards a heavier vertex raises the radius", {"lemmas"},
         check_neighbor_shift},
        {"pendant_path_shift", "balancing two pendant paths raises the radius", {"lemmas"},
         check_pendant_path_shift},
        {"spider_minimality", "D_n minimises the radius among connected graphs other than P_n, C_n",
         {"lemmas"}, check_spider_minimality},
        {"leaf_mis", "trees have a maximum independent set containing every leaf", {"lemmas"}, check_leaf_mis},
        {"alternating_mis_bound", "alternating leaf paths force alpha >= (n+1)/2", {"lemmas"},
         check_alternating_mis_bound},
        {"internal_subdivision", "subdividing an internal edge does not raise the radius", {"lemmas"},
         check_internal_subdivision},
        {"subdivision_alpha", "independence number after subdividing an edge once or twice", {"lemmas"},
         check_subdivision_alpha},
        {"pendant_attach_identity", "adjacency radius after attaching k pendants to a colour class",
         {"lemmas"}, check_pendant_attach_identity},
        {"convex_bound", "radius below the convex combination of sigma=0 and sigma=1/2", {"lemmas"},
         check_convex_bound},
        {"path_radius", "adjacency radius of P_n is 2cos(pi/(n+1))", {"lemmas"}, check_path_radius},
        {"star_bound", "star lower bound in terms of the maximum degree", {"lemmas"}, check_star_bound},
        {"degree_bound", "piecewise linear lower bound in the maximum degree", {"lemmas"}, check_degree_bound},
        {"edge_density_bound", "average degree and edge-wise upper bound", {"lemmas"}, check_edge_density_bound},
        {"subdivision_characterization", "bipartite degree-two test for subdivision trees", {"lemmas"},
         check_subdivision_characterization},
        {"pendant_rebalancing", "moving a pendant edge to the heavier side raises the radius", {"lemmas"},
         check_pendant_rebalancing},
        {"equitable_quotient", "equitable quotients share the spectral radius", {"lemmas"},
         check_equitable_quotient},
        {"perron_comparison", "Perron weights along S(P4) shapes", {"lemmas"}, check_perron_comparison},
        {"t2_balance_comparison", "balanced S(P4) attachment has the larger radius", {"lemmas"},
         check_t2_balance_comparison},
        {"complement_edge_bound", "alpha = 2 graphs have at most floor(n^2/4)-1 complement edges", {"lemmas"},
         check_complement_edge_bound},
        {"equivalent_vertex_weights", "equivalent vertices carry equal Perron weight", {"lemmas"},
         check_equivalent_vertex_weights},
        {"extreme_alpha_minimizers", "P_n and K_{1,n-1} at the extreme independence numbers",
         {"lemmas", "thm1"}, check_extreme_alpha_minimizers},
        {"tree_minimizers", "connected minimizers with alpha >= ceil(n/2) are trees", {"thm1"},
         check_tree_minimizers},
        {"spider_minimizers", "minimizers at alpha = ceil(n/2)+1 are D_n or W_n", {"thm2"},
         check_spider_minimizers},
        {"structural_props", "structure of tree minimizers between the end branch points", {"thm3"},
         check_structural_props},
        {"subdivision_shape", "minimizers above the threshold are subdivision shapes", {"thm3"},
         check_subdivision_shape},
        {"attachment_ranges", "pendant counts of shape minimizers lie in the sigma-regime ranges", {"thm3"},
         check_attachment_ranges},
        {"table_regeneration", "stored candidate tables agree with the attachment ranges", {"tables"},
         check_table_regeneration},
        {"table_candidates", "minimizers at alpha = n-4 appear among the refined candidates", {"tables"},
         check_table_candidates},
        {"w11_minimizer", "W_11 is the minimizer for n = 11, alpha = 7", {"tables"}, check_w11_minimizer},
        {"tie_robustness", "minimizer sets survive halving the tie tolerance", {"tables"}, check_tie_robustness},
        {"f33_unique", "F_{3,3} is the unique minimizer with n = 6, alpha = 2", {"tables"}, check_f33_unique},
        {"complement_bipartite", "minimizers with n = 6, alpha = 2 have bipartite complements", {"tables"},
         check_complement_bipartite},
    };
    for (FactorizationId id : all_factorization_ids()) {
      v.push_back({"factorization_" + to_string(id), "characteristic polynomial difference identity",
                   {"lemmas"}, [id](Run& r) { check_factorization(r, id); }});
    }
    return v;
  }();
  return reg;
}

const Registration& find_registration(const std::string& id) {
  for (const auto& reg : registry()) {
    if (reg.id == id) return reg;
  }
  throw std::invalid_argument("unknown check '" + id + "'");
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& reg : registry()) v.push_back(reg.id);
    return v;
  }();
  return ids;
}

std::string check_description(const std::string& id) { return find_registration(id).description; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemmas", "thm1", "thm2", "thm3", "tables", "all"};
  return names;
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<std::string> out;
  for (const auto& reg : registry()) {
    if (suite == "all" || std::find(reg.suites.begin(), reg.suites.end(), suite) != reg.suites.end()) {
      out.push_back(reg.id);
    }
  }
  return out;
}

CheckOutcome run_check(const std::string& id, const CheckParams& params) {
  const Registration& reg = find_registration(id);
  if (!params.is_object()) throw std::invalid_argument("check parameters must be a JSON object");
  CheckOutcome out;
  out.id = id;
  out.params = params;
  auto start = std::chrono::steady_clock::now();
  Run run(out, params);
  reg.fn(run);
  if (run.unresolved) {
    run.note(std::to_string(run.unresolved) + " strict comparisons within +-" + num(kStrict) +
             " of equality (not asserted)");
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CheckOutcome> run_suite(const std::string& suite, double budget_seconds, std::uint64_t seed,
                                    unsigned threads) {
  std::vector<std::string> ids = suite_checks(suite);
  std::sort(ids.begin(), ids.end());
  std::vector<CheckOutcome> out(ids.size());
  unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, ids.size()));
  auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      CheckParams params = {{"seed", seed}};
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed >= budget_seconds) {
        out[i].id = ids[i];
        out[i].params = params;
        out[i].status = CheckStatus::skipped;
        out[i].detail = "budget of " + num(budget_seconds) + " s exhausted before start";
        continue;
      }
      try {
        out[i] = run_check(ids[i], params);
      } catch (const std::exception& e) {
        out[i].id = ids[i];
        out[i].params = params;
        out[i].status = CheckStatus::fail;
        out[i].witness = std::string("check raised: ") + e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace asigma
