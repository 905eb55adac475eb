#include "asigma/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "asigma/canonical.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/spectral.hpp"

namespace asigma {

std::string to_string(GraphClass c) { return c == GraphClass::tree ? "tree" : "connected"; }

GraphClass parse_graph_class(const std::string& s) {
  if (s == "tree") return GraphClass::tree;
  if (s == "connected" || s == "graph") return GraphClass::connected;
  throw std::invalid_argument("unknown graph class '" + s + "'");
}

namespace {

struct Candidate {
  double lambda;
  Graph g;
};

// Running minimum for one sigma. Keeps every graph that could still end up
// within tie tolerance of the final minimum.
struct Tracker {
  double sigma = 0;
  double tie = 1e-9;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Candidate> kept;

  double threshold() const { return best + tie * std::max(1.0, best); }

  void offer(const Graph& g, int delta, double density) {
    double thr = threshold();
    // The star bound is exact for K_{1,delta} and so valid for every sigma;
    // the piecewise degree bound is not used here (it overshoots for sigma > 1/2).
    double lb = std::max(density, bound_star_lower(std::max(delta, 1), sigma));
    if (g.order() == 1) lb = 0.0;
    if (std::isfinite(thr) && lb > thr + 1e-12 * std::max(1.0, thr)) return;
    double lam;
    if (std::isfinite(thr)) {
      auto r = spectral_radius_unless_above(g, sigma, thr);
      if (!r) return;
      lam = *r;
    } else {
      lam = spectral_radius(g, sigma).lambda;
    }
    if (lam > thr) return;
    kept.push_back({lam, g});
    if (lam < best) {
      best = lam;
      if (kept.size() > 64) prune();
    }
  }

  void prune() {
    double thr = threshold();
    std::erase_if(kept, [thr](const Candidate& c) { return c.lambda > thr; });
  }
};

bool admissible(const Graph& g, const SearchSpace& space) {
  if (g.order() != space.n) {
    throw std::invalid_argument("graph of order " + std::to_string(g.order()) +
                                " in a search over n=" + std::to_string(space.n));
  }
  if (space.cls == GraphClass::tree) {
    if (!is_tree(g)) return false;
    return tree_independence(g).alpha == *space.alpha;
  }
  if (!is_connected(g)) return false;
  return independence_number(g).alpha == *space.alpha;
}

void scan(GraphStream& src, std::mutex& src_mu, const SearchSpace& space,
          std::vector<Tracker>& trackers) {
  constexpr int kBatch = 256;
  std::vector<Graph> batch;
  for (;;) {
    batch.clear();
    {
      std::lock_guard<std::mutex> lock(src_mu);
      while (static_cast<int>(batch.size()) < kBatch) {
        auto g = src.next();
        if (!g) break;
        batch.push_back(std::move(*g));
      }
    }
    if (batch.empty()) return;
    for (const Graph& g : batch) {
      if (!admissible(g, space)) continue;
      int delta = g.max_degree();
      double density = 2.0 * g.size() / g.order();
      for (Tracker& t : trackers) t.offer(g, delta, density);
    }
  }
}

SearchRecord finish(const SearchSpace& space, double sigma, double tie,
                    std::vector<Candidate> cands) {
  // Re-evaluate on canonical forms so the reported value depends only on the
  // isomorphism class, not on enumeration order or labelling.
  std::map<std::string, double> by_code;
  for (const Candidate& c : cands) {
    CanonicalLabeling cl = canonical_labeling(c.g);
    std::string code = to_graph6(cl.form);
    if (by_code.count(code)) continue;
    by_code[code] = spectral_radius(cl.form, sigma, kDefaultTol).lambda;
  }
  if (by_code.empty()) {
    throw std::domain_error("no " + to_string(space.cls) + " graphs with n=" +
                            std::to_string(space.n) + " and alpha=" + std::to_string(*space.alpha));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [code, lam] : by_code) best = std::min(best, lam);
  SearchRecord rec;
  rec.n = space.n;
  rec.alpha = *space.alpha;
  rec.sigma = sigma;
  rec.cls = space.cls;
  rec.min_lambda = best;
  rec.tie_tol = tie;
  double thr = best + tie * std::max(1.0, best);
  for (const auto& [code, lam] : by_code) {
    if (lam <= thr) rec.minimizers.push_back(code);
  }
  return rec;
}

}  // namespace

std::vector<SearchRecord> find_minimizers_in(GraphStream& src, const SearchSpace& space,
                                             const std::vector<double>& sigmas,
                                             const SearchOptions& opts) {
  if (!space.alpha) throw std::invalid_argument("search needs alpha");
  if (space.n < 1 || space.n > kMaxVertices) throw std::invalid_argument("n out of range");
  if (*space.alpha < 1 || *space.alpha > space.n) throw std::invalid_argument("alpha must lie in [1, n]");
  if (sigmas.empty()) throw std::invalid_argument("no sigma values given");
  if (!(opts.tie_tol >= 0)) throw std::invalid_argument("tie tolerance must be non-negative");
  for (double s : sigmas) check_sigma(s);

  unsigned workers = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, workers);

  std::vector<Tracker> proto;
  for (double s : sigmas) {
    Tracker t;
    t.sigma = s;
    t.tie = opts.tie_tol;
    proto.push_back(t);
  }
  std::vector<std::vector<Tracker>> local(workers, proto);
  std::mutex src_mu;
  if (workers == 1) {
    scan(src, src_mu, space, local[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          scan(src, src_mu, space, local[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<SearchRecord> out;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    std::vector<Candidate> merged;
    double best = std::numeric_limits<double>::infinity();
    for (auto& l : local) best = std::min(best, l[i].best);
    double thr = best + opts.tie_tol * std::max(1.0, best);
    // Slack for the 1e-12 eigenvalue error; finish() applies the exact cut.
    thr += 1e-10 * std::max(1.0, best);
    for (auto& l : local) {
      for (Candidate& c : l[i].kept) {
        if (c.lambda <= thr) merged.push_back(std::move(c));
      }
    }
    out.push_back(finish(space, sigmas[i], opts.tie_tol, std::move(merged)));
  }
  return out;
}

std::vector<SearchRecord> find_minimizers_multi(const SearchSpace& space,
                                                const std::vector<double>& sigmas,
                                                const SearchOptions& opts) {
  if (!space.alpha) throw std::invalid_argument("search needs alpha");
  std::unique_ptr<GraphStream> src = space.cls == GraphClass::tree
                                         ? all_trees(space.n)
                                         : all_connected_graphs(space.n);
  return find_minimizers_in(*src, space, sigmas, opts);
}

SearchRecord find_minimizers(const SearchSpace& space, double sigma, double tie_tol) {
  SearchOptions opts;
  opts.tie_tol = tie_tol;
  return find_minimizers_multi(space, {sigma}, opts).front();
}

std::string to_json(const SearchRecord& r) {
  using nlohmann::json;
  char lam[64];
  std::snprintf(lam, sizeof lam, "%#.17g", r.min_lambda);
  std::ostringstream os;
  os << "{\"n\":" << r.n << ",\"alpha\":" << r.alpha << ",\"sigma\":" << json(r.sigma).dump()
     << ",\"class\":" << json(to_string(r.cls)).dump() << ",\"min_lambda\":" << lam
     << ",\"tie_tol\":" << json(r.tie_tol).dump() << ",\"minimizers\":" << json(r.minimizers).dump()
     << "}";
  return os.str();
}

SearchRecord search_record_from_json(const std::string& text) {
  using nlohmann::json;
  json j = json::parse(text);
  SearchRecord r;
  r.n = j.at("n").get<int>();
  r.alpha = j.at("alpha").get<int>();
  r.sigma = j.at("sigma").get<double>();
  r.cls = parse_graph_class(j.at("class").get<std::string>());
  r.min_lambda = j.at("min_lambda").get<double>();
  r.tie_tol = j.at("tie_tol").get<double>();
  r.minimizers = j.at("minimizers").get<std::vector<std::string>>();
  return r;
}

namespace {

// Strips exactly the vertices in leaf_mask and tries to read the remainder as
// a subdivided skeleton.
ShapeDecomposition decompose_stripping(const Graph& g, std::uint64_t leaf_mask) {
  ShapeDecomposition out;
  const int n = g.order();
  VertexSet leaf = mask_to_set(leaf_mask);
  VertexSet rest;
  for (int v = 0; v < n; ++v) {
    if (!(leaf_mask >> v & 1U)) rest.push_back(v);
  }
  if (rest.empty()) {
    out.rejection = "nothing survives leaf stripping";
    return out;
  }
  std::vector<int> side(n, -1);
  Graph h = induced_subgraph(g, rest);
  std::vector<int> colour = bipartition(h);
  int c0 = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
  int c1 = static_cast<int>(rest.size()) - c0;
  int skeleton_colour = c0 >= c1 ? 0 : 1;
  VertexSet skel, subdiv;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    (colour[i] == skeleton_colour ? skel : subdiv).push_back(rest[i]);
  }
  if (skel.size() != subdiv.size() + 1) {
    out.rejection = "stripped tree has " + std::to_string(rest.size()) +
                    " vertices, not of the form 2k-1 with a k-vertex side";
    return out;
  }
  std::uint64_t rest_mask = set_to_mask(rest);
  for (int d : subdiv) {
    int deg = std::popcount(g.row(d) & rest_mask);
    if (deg != 2) {
      out.rejection = "vertex " + std::to_string(d) + " on the subdivision side has degree " +
                      std::to_string(deg) + " after leaf stripping";
      return out;
    }
  }
  std::uint64_t skel_mask = set_to_mask(skel);
  for (int l : leaf) {
    if (!(g.row(l) & skel_mask)) {
      out.rejection = "leaf " + std::to_string(l) + " hangs off a subdivision vertex";
      return out;
    }
  }
  std::map<int, int> index;
  for (std::size_t i = 0; i < skel.size(); ++i) index[skel[i]] = static_cast<int>(i);
  EdgeList edges;
  for (int d : subdiv) {
    VertexSet ends = mask_to_set(g.row(d) & rest_mask);
    edges.emplace_back(index[ends[0]], index[ends[1]]);
  }
  ShapeWitness w{Graph(static_cast<int>(skel.size()), edges), skel, {}};
  for (int s : skel) w.counts.push_back(std::popcount(g.row(s) & leaf_mask));
  out.witness = std::move(w);
  return out;
}

}  // namespace

ShapeDecomposition shape_decompose(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("shape_decompose needs a tree");
  if (g.order() == 1) return {ShapeWitness{Graph(1, {}), {0}, {0}}, {}};
  std::uint64_t leaf_mask = set_to_mask(leaves(g));
  ShapeDecomposition strict = decompose_stripping(g, leaf_mask);
  if (strict.witness) return strict;
  // A skeleton leaf with no pendants is itself a leaf of g, hanging off a
  // degree-2 subdivision vertex. Put such leaves back, fewest first.
  VertexSet promotable;
  for (int l : mask_to_set(leaf_mask)) {
    int d = g.neighbors(l).front();
    if (g.degree(d) == 2) promotable.push_back(l);
  }
  const int k = std::min<int>(static_cast<int>(promotable.size()), 12);
  int alpha = -1;
  for (int size = 1; size <= k; ++size) {
    for (std::uint32_t pick = 0; pick < (1U << k); ++pick) {
      if (std::popcount(pick) != size) continue;
      std::uint64_t m = leaf_mask;
      for (int i = 0; i < k; ++i) {
        if (pick >> i & 1U) m &= ~(std::uint64_t{1} << promotable[i]);
      }
      if (m == 0) continue;
      ShapeDecomposition d = decompose_stripping(g, m);
      if (!d.witness) continue;
      int total = 0;
      for (int c : d.witness->counts) total += c;
      if (alpha < 0) alpha = independence_number(g).alpha;
      if (total == 2 * alpha - g.order() + 1) return d;
    }
  }
  return strict;
}

Graph rebuild_shape(const ShapeWitness& w) {
  Graph s = subdivision_graph(w.skeleton);
  std::vector<int> roots(w.skeleton.order());
  for (int i = 0; i < w.skeleton.order(); ++i) roots[i] = i;
  return rooted_attach(s, roots, w.counts);
}

std::optional<CandidateRow> identify_candidate(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  ShapeDecomposition d = shape_decompose(g);
  if (!d.witness || d.witness->skeleton.order() != 4) return std::nullopt;
  const ShapeWitness& w = *d.witness;
  CandidateRow row;
  if (w.skeleton.max_degree() == 3) {
    int centre = 0;
    while (w.skeleton.degree(centre) != 3) ++centre;
    std::array<int, 4> c{};
    int k = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != centre) c[k++] = w.counts[v];
    }
    c[3] = w.counts[centre];
    row.shape = Shape::t1;
    row.counts = normalize_counts(Shape::t1, c);
  } else {
    int prev = -1, cur = 0;
    while (w.skeleton.degree(cur) != 1) ++cur;
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k) {
      c[k] = w.counts[cur];
      int next = -1;
      for (int x : w.skeleton.neighbors(cur)) {
        if (x != prev) next = x;
      }
      prev = cur;
      cur = next;
    }
    row.shape = Shape::t2;
    row.counts = normalize_counts(Shape::t2, c);
  }
  auto [t, lp] = t_lp(g.order(), g.order() - 4);
  row.t = t;
  row.lp = lp;
  return row;
}

bool AuditReport::all_pass() const {
  return std::all_of(predicates.begin(), predicates.end(),
                     [](const PredicateResult& p) { return p.pass; });
}

namespace {

std::string path_text(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

// Length of the pendant path leaving `root` through `first`, or 0 when the
// branch is not a bare path ending in a leaf.
int pendant_path_length(const Graph& t, int root, int first) {
  int prev = root, cur = first, len = 1;
  while (t.degree(cur) == 2) {
    VertexSet nb = t.neighbors(cur);
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++len;
  }
  return t.degree(cur) == 1 ? len : 0;
}

}  // namespace

AuditReport structural_audit(const Graph& t, int alpha) {
  if (!is_tree(t)) throw std::invalid_argument("structural_audit needs a tree");
  const int n = t.order();
  if (alpha < (n + 1) / 2 + 2 || alpha > n - 2) {
    throw std::invalid_argument("alpha=" + std::to_string(alpha) + " outside [ceil(n/2)+2, n-2]");
  }
  AuditReport rep;
  VertexSet ebp = end_branch_points(t);
  std::uint64_t leaf_mask = set_to_mask(leaves(t));

  PredicateResult p1{"two_end_branch_points", ebp.size() >= 2, ""};
  if (!p1.pass) p1.witness = "end branch points: " + std::to_string(ebp.size());
  rep.predicates.push_back(p1);

  PredicateResult p2{"end_branch_point_leaves", true, ""};
  for (int u : ebp) {
    int lv = std::popcount(t.row(u) & leaf_mask);
    if (lv != t.degree(u) - 1) {
      p2.pass = false;
      p2.witness = "vertex " + std::to_string(u) + " has " + std::to_string(lv) +
                   " leaf neighbours, degree " + std::to_string(t.degree(u));
      break;
    }
  }
  rep.predicates.push_back(p2);

  std::vector<std::vector<int>> paths;
  for (std::size_t i = 0; i < ebp.size(); ++i) {
    for (std::size_t j = i + 1; j < ebp.size(); ++j) paths.push_back(tree_path(t, ebp[i], ebp[j]));
  }

  PredicateResult p3{"even_paths_alternate", true, ""};
  std::uint64_t odd_mask = leaf_mask;
  for (const auto& p : paths) {
    int k = static_cast<int>(p.size()) - 1;
    if (k % 2) {
      p3.pass = false;
      p3.witness = "odd path " + path_text(p);
      break;
    }
    for (int i = 1; i < k; i += 2) odd_mask |= std::uint64_t{1} << p[i];
  }
  if (p3.pass) {
    bool independent = true;
    for (int v : mask_to_set(odd_mask)) independent = independent && !(t.row(v) & odd_mask);
    std::uint64_t closed = odd_mask;
    for (int v : mask_to_set(odd_mask)) closed |= t.row(v);
    int extra = independent ? max_independent_within(t, t.all_mask() & ~closed).alpha : 0;
    int size = std::popcount(odd_mask);
    if (!independent || size + extra != alpha) {
      p3.pass = false;
      p3.witness = "leaves plus odd path vertices {" + path_text(mask_to_set(odd_mask)) +
                   "} do not extend to a maximum independent set";
    }
  }
  rep.predicates.push_back(p3);

  PredicateResult p4{"no_long_pendant_paths", true, ""};
  PredicateResult p5{"odd_branch_neighbourhood", true, ""};
  for (const auto& p : paths) {
    int k = static_cast<int>(p.size()) - 1;
    if (k % 2) continue;
    for (int i = 1; i < k && p4.pass; ++i) {
      int u = p[i];
      for (int y : t.neighbors(u)) {
        if (y == p[i - 1] || y == p[i + 1]) continue;
        int len = pendant_path_length(t, u, y);
        if (len >= 2 || (i % 2 == 1 && len == 1)) {
          p4.pass = false;
          p4.witness = "vertex " + std::to_string(u) + " on " + path_text(p) +
                       " carries a pendant path of length " + std::to_string(len);
          break;
        }
      }
    }
    for (int i = 1; i < k && p5.pass; i += 2) {
      int u = p[i];
      if (t.degree(u) < 3) continue;
      for (int y : t.neighbors(u)) {
        if (t.row(y) & leaf_mask & ~(std::uint64_t{1} << u)) {
          p5.pass = false;
          p5.witness = "neighbour " + std::to_string(y) + " of odd vertex " + std::to_string(u) +
                       " carries a leaf";
          break;
        }
      }
    }
  }
  rep.predicates.push_back(p4);
  rep.predicates.push_back(p5);

  int nl = std::popcount(leaf_mask);
  PredicateResult p6{"leaf_count", nl >= 2 * alpha - n + 1, ""};
  if (!p6.pass) {
    p6.witness = std::to_string(nl) + " leaves, need " + std::to_string(2 * alpha - n + 1);
  }
  rep.predicates.push_back(p6);
  return rep;
}

AuditReport attachment_range_check(const Graph& g, double sigma) {
  check_sigma(sigma);
  ShapeDecomposition d = shape_decompose(g);
  if (!d.witness) throw std::invalid_argument("graph has no subdivision shape: " + d.rejection);
  const ShapeWitness& w = *d.witness;
  const int n = g.order();
  const int c = w.skeleton.order();
  const int alpha = n - c;
  if (2 * alpha - n + 1 < 0) throw std::invalid_argument("shape has too few leaves");
  auto [t, lp] = t_lp(n, alpha);
  AuditReport rep;
  for (int u = 0; u < c; ++u) {
    int deg = w.skeleton.degree(u);
    int ell = w.counts[u];
    int lo = 0;
    std::optional<int> hi;
    if (sigma > 0 && sigma < 0.25) {
      hi = static_cast<int>(std::floor(1.6 * (t + 5))) - deg;
    } else if (sigma >= 0.25 && sigma < 0.5) {
      hi = static_cast<int>(std::floor((4 - 2 * std::sqrt(2.0)) * (t + 5))) - 1 - deg;
    } else if (sigma >= 0.5) {
      if (lp <= 2) {
        lo = t + lp - deg;
        hi = t + 2 - deg;
      } else {
        lo = t + lp - (c - 1) - deg;
        hi = t + 3 - deg;
      }
    }
    lo = std::max(lo, 0);
    PredicateResult p{"range_w" + std::to_string(u + 1), ell >= lo && (!hi || ell <= *hi), ""};
    if (!p.pass) {
      p.witness = "vertex " + std::to_string(w.skeleton_vertices[u]) + ": l=" +
                  std::to_string(ell) + " outside [" + std::to_string(lo) + ", " +
                  (hi ? std::to_string(*hi) : std::string("inf")) + "] (t=" + std::to_string(t) +
                  ", l'=" + std::to_string(lp) + ", d=" + std::to_string(deg) + ")";
    }
    rep.predicates.push_back(p);
  }
  return rep;
}

}  // namespace asigma
