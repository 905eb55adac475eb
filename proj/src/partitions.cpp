#include "asigma/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "asigma/spectral.hpp"

namespace asigma {

void validate_partition(const Graph& g, const Partition& p) {
  std::uint64_t seen = 0;
  for (const VertexSet& block : p) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    for (int v : block) {
      if (v < 0 || v >= g.order()) throw std::invalid_argument("partition vertex out of range");
      std::uint64_t b = std::uint64_t{1} << v;
      if (seen & b) throw std::invalid_argument("partition blocks overlap");
      seen |= b;
    }
  }
  if (seen != g.all_mask()) throw std::invalid_argument("partition does not cover all vertices");
}

namespace {

std::vector<std::uint64_t> block_masks(const Partition& p) {
  std::vector<std::uint64_t> m;
  for (const VertexSet& b : p) m.push_back(set_to_mask(b));
  return m;
}

}  // namespace

bool is_equitable(const Graph& g, double sigma, const Partition& p) {
  check_sigma(sigma);
  validate_partition(g, p);
  std::vector<std::uint64_t> masks = block_masks(p);
  for (const VertexSet& block : p) {
    int v0 = block.front();
    for (int v : block) {
      if (g.degree(v) != g.degree(v0)) return false;
      for (std::uint64_t m : masks) {
        if (std::popcount(g.row(v) & m) != std::popcount(g.row(v0) & m)) return false;
      }
    }
  }
  return true;
}

QuotientMatrix quotient_matrix(const Graph& g, double sigma, const Partition& p) {
  if (!is_equitable(g, sigma, p)) throw std::invalid_argument("partition is not equitable");
  int k = static_cast<int>(p.size());
  std::vector<std::uint64_t> masks = block_masks(p);
  QuotientMatrix q{k, std::vector<double>(static_cast<std::size_t>(k) * k, 0.0)};
  for (int i = 0; i < k; ++i) {
    int v = p[i].front();
    for (int j = 0; j < k; ++j) {
      double value = (1.0 - sigma) * std::popcount(g.row(v) & masks[j]);
      if (i == j) value += sigma * g.degree(v);
      q.at(i, j) = value;
    }
  }
  return q;
}

double quotient_lambda(const QuotientMatrix& q, double tol) {
  const int k = q.order;
  // M = Q + I is primitive, so normalised repeated squaring converges to the
  // rank-one Perron projector even when the spectrum is tightly clustered.
  std::vector<double> m(static_cast<std::size_t>(k) * k), sq(m.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i * k + j] = q(i, j) + (i == j ? 1.0 : 0.0);
  }
  for (int round = 0; round < 64; ++round) {
    double big = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double s = 0.0;
        for (int l = 0; l < k; ++l) s += m[i * k + l] * m[l * k + j];
        sq[i * k + j] = s;
        big = std::max(big, s);
      }
    }
    if (!(big > 0) || !std::isfinite(big)) throw std::runtime_error("quotient matrix is not irreducible");
    for (double& v : sq) v /= big;
    m.swap(sq);
  }
  std::vector<double> x(k, 0.0), y(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) x[i] += m[i * k + j];
    if (!(x[i] > 0)) throw std::runtime_error("quotient matrix is not irreducible");
  }
  double best_lo = 0.0, best_hi = INFINITY;
  for (int it = 0; it < 2000; ++it) {
    double lo = INFINITY, hi = -INFINITY, norm = 0.0;
    for (int i = 0; i < k; ++i) {
      double s = x[i];
      for (int j = 0; j < k; ++j) s += q(i, j) * x[j];
      y[i] = s;
      lo = std::min(lo, s / x[i]);
      hi = std::max(hi, s / x[i]);
      norm += s * s;
    }
    // Both ends are valid bounds for every positive x, so keep the tightest.
    best_lo = std::max(best_lo, lo);
    best_hi = std::min(best_hi, hi);
    if (best_hi - best_lo <= tol * std::max(1.0, best_hi)) break;
    norm = std::sqrt(norm);
    for (int i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  // Rounding in the ratios can keep the bracket a few ulps wider than tol.
  if (best_hi - best_lo > 1e-9 * std::max(1.0, best_hi)) {
    throw std::runtime_error("quotient Perron root did not converge");
  }
  return 0.5 * (best_lo + best_hi) - 1.0;
}

bool quotient_lambda_check(const Graph& g, double sigma, const Partition& p, double tol) {
  QuotientMatrix q = quotient_matrix(g, sigma, p);
  return std::fabs(quotient_lambda(q) - spectral_radius(g, sigma).lambda) <= tol;
}

std::vector<double> charpoly(const QuotientMatrix& m) {
  int n = m.order;
  if (n > 12) throw std::invalid_argument("charpoly supports order <= 12");
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  std::vector<double> mk(static_cast<std::size_t>(n) * n, 0.0), am(mk.size());
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
  for (int k = 1; k <= n; ++k) {
    std::vector<double> next(mk.size(), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += m(i, l) * mk[l * n + j];
        next[i * n + j] = s;
      }
      next[i * n + i] += c[k - 1];
    }
    mk = std::move(next);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) tr += m(i, l) * mk[l * n + i];
    }
    c[k] = -tr / k;
  }
  return c;
}

double charpoly_at(const QuotientMatrix& m, double x) {
  const int n = m.order;
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = (i == j ? x : 0.0) - m(i, j);
  }
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) p = r;
    }
    if (a[p * n + c] == 0.0) return 0.0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[p * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

double polyval(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (double c : coeffs) v = v * x + c;
  return v;
}

QuotientMatrix t1_hub_quotient(double sigma, int a, int d) {
  check_sigma(sigma);
  double s = sigma, o = 1.0 - sigma;
  QuotientMatrix q{5, std::vector<double>(25, 0.0)};
  q.at(0, 0) = s;
  q.at(0, 1) = o;
  q.at(1, 0) = a * o;
  q.at(1, 1) = (a + 1) * s;
  q.at(1, 2) = o;
  q.at(2, 1) = o;
  q.at(2, 2) = 2 * s;
  q.at(2, 3) = o;
  q.at(3, 2) = 3 * o;
  q.at(3, 3) = (d + 3) * s;
  q.at(3, 4) = d * o;
  q.at(4, 3) = o;
  q.at(4, 4) = s;
  return q;
}

Partition t1_hub_partition(int a, int d) {
  VertexSet pend, hub_pend;
  for (int i = 0; i < 3 * a; ++i) pend.push_back(7 + i);
  for (int i = 0; i < d; ++i) hub_pend.push_back(7 + 3 * a + i);
  Partition p;
  for (const VertexSet& b : {pend, VertexSet{0, 1, 2}, VertexSet{4, 5, 6}, VertexSet{3}, hub_pend}) {
    if (!b.empty()) p.push_back(b);
  }
  return p;
}

QuotientMatrix t2_block_quotient(double sigma, const std::array<int, 4>& c) {
  check_sigma(sigma);
  double s = sigma, o = 1.0 - sigma;
  QuotientMatrix q{11, std::vector<double>(121, 0.0)};
  // Block index of W_i is 3(i-1), of u_i is 3(i-1)+1, of w_i is 3(i-1)+2.
  for (int i = 0; i < 4; ++i) {
    int W = 3 * i, u = 3 * i + 1;
    int deg = c[i] + (i == 0 || i == 3 ? 1 : 2);
    q.at(W, W) = s;
    q.at(W, u) = o;
    q.at(u, W) = c[i] * o;
    q.at(u, u) = deg * s;
    if (i > 0) q.at(u, u - 2) = o;  // w_{i-1}
    if (i < 3) q.at(u, u + 1) = o;  // w_i
  }
  for (int i = 0; i < 3; ++i) {
    int w = 3 * i + 2;
    q.at(w, w - 1) = o;
    q.at(w, w) = 2 * s;
    q.at(w, w + 2) = o;
  }
  return q;
}

Partition t2_block_partition(const std::array<int, 4>& c) {
  Partition p;
  int next = 7;
  for (int i = 0; i < 4; ++i) {
    VertexSet pend;
    for (int k = 0; k < c[i]; ++k) pend.push_back(next++);
    if (!pend.empty()) p.push_back(pend);
    p.push_back({i});
    if (i < 3) p.push_back({4 + i});
  }
  return p;
}

const std::vector<FactorizationId>& all_factorization_ids() {
  static const std::vector<FactorizationId> ids = {
      FactorizationId::t1_hub_shift, FactorizationId::t1_hub_shift_half,
      FactorizationId::t2_inner_swap, FactorizationId::t2_inner_swap_wide,
      FactorizationId::t2_end_shift};
  return ids;
}

std::string to_string(FactorizationId id) {
  switch (id) {
    case FactorizationId::t1_hub_shift:
      return "t1_hub_shift";
    case FactorizationId::t1_hub_shift_half:
      return "t1_hub_shift_half";
    case FactorizationId::t2_inner_swap:
      return "t2_inner_swap";
    case FactorizationId::t2_inner_swap_wide:
      return "t2_inner_swap_wide";
    case FactorizationId::t2_end_shift:
      return "t2_end_shift";
  }
  return "?";
}

FactorizationId parse_factorization_id(std::string_view name) {
  for (FactorizationId id : all_factorization_ids()) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown factorization id '" + std::string(name) + "'");
}

FactorizationPair factorization_pair(FactorizationId id, int t) {
  switch (id) {
    case FactorizationId::t1_hub_shift:
    case FactorizationId::t1_hub_shift_half:
      return {true, {t + 1, t + 1, t + 1, t}, {t + 2, t + 2, t + 2, t - 3}};
    case FactorizationId::t2_inner_swap:
      return {false, {t, t - 1, t, t + 1}, {t, t, t - 1, t + 1}};
    case FactorizationId::t2_inner_swap_wide:
      return {false, {t + 1, t - 1, t + 1, t + 2}, {t + 1, t + 1, t - 1, t + 2}};
    case FactorizationId::t2_end_shift:
      return {false, {t + 1, t, t + 1, t + 1}, {t + 1, t, t, t + 2}};
  }
  throw std::invalid_argument("unknown factorization id");
}

FactorizationEvaluation evaluate_factorization(FactorizationId id, double sigma, int t, double x) {
  check_sigma(sigma);
  if (id == FactorizationId::t1_hub_shift_half && sigma != 0.5) {
    throw std::invalid_argument("t1_hub_shift_half is the sigma = 1/2 form");
  }
  FactorizationPair pair = factorization_pair(id, t);
  QuotientMatrix q1 = pair.t1 ? t1_hub_quotient(sigma, pair.first[0], pair.first[3])
                              : t2_block_quotient(sigma, pair.first);
  QuotientMatrix q2 = pair.t1 ? t1_hub_quotient(sigma, pair.second[0], pair.second[3])
                              : t2_block_quotient(sigma, pair.second);
  FactorizationEvaluation ev;
  ev.f1 = charpoly_at(q1, x);
  ev.f2 = charpoly_at(q2, x);
  ev.scale = std::max({1.0, std::fabs(ev.f1), std::fabs(ev.f2)});
  const double s = sigma;
  const double tt = t;
  switch (id) {
    case FactorizationId::t1_hub_shift: {
      double a = -s * x * x + (2 * s * s + 2 * s - 1) * x - 4 * s * s + 2 * s;
      double b = -x * x + (s * tt + 4 * s) * x + (tt + 3) * (1 - 2 * s);
      ev.rhs = -2.0 * a * b;
      break;
    }
    case FactorizationId::t1_hub_shift_half:
      ev.rhs = 0.5 * x * x * (x - 1) * (tt + 4 - 2 * x);
      break;
    case FactorizationId::t2_inner_swap:
    case FactorizationId::t2_inner_swap_wide: {
      double br = s * x * x - (s * s + 2 * s - 1) * x + 2 * s * s - s;
      ev.rhs = std::pow(s - 1, 4) * (2 * s - x) * br * br;
      if (id == FactorizationId::t2_inner_swap_wide) ev.rhs *= 2.0;
      break;
    }
    case FactorizationId::t2_end_shift: {
      double g = std::pow(x, 4) - (7 * s + 2 * s * tt) * std::pow(x, 3) +
                 (s * s * tt * tt + 9 * s * s * tt + 16 * s * s + 2 * s * tt + 4 * s - tt - 2) * x * x +
                 (-2 * s * s * s * tt * tt - 10 * s * s * s * tt - 14 * s * s * s -
                  2 * s * s * tt * tt - 12 * s * s * tt - 12 * s * s + s * tt * tt + 6 * s * tt +
                  6 * s) * x +
                 2 * std::pow(s, 4) * tt + 4 * std::pow(s, 4) + 4 * s * s * s * tt * tt +
                 12 * s * s * s * tt + 8 * s * s * s - 2 * s * s * tt * tt - 6 * s * s * tt -
                 4 * s * s;
      double lin = s * x - 2 * s + 1;
      ev.rhs = (s - 1) * (s - 1) * (2 * s - x) * lin * lin * g;
      break;
    }
  }
  return ev;
}

bool factorization_check(FactorizationId id, double sigma, int t, double x, double tol) {
  FactorizationEvaluation ev = evaluate_factorization(id, sigma, t, x);
  return std::fabs(ev.f1 - ev.f2 - ev.rhs) <= tol * ev.scale;
}

}  // namespace asigma
