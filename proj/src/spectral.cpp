#include "asigma/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace asigma {

double check_sigma(double sigma) {
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("sigma must lie in [0, 1), got " + std::to_string(sigma));
  }
  return sigma;
}

DenseSymMatrix a_sigma_matrix(const Graph& g, double sigma) {
  check_sigma(sigma);
  int n = g.order();
  DenseSymMatrix m{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int v = 0; v < n; ++v) {
    m.at(v, v) = sigma * g.degree(v);
    for (int w : g.neighbors(v)) m.at(v, w) = 1.0 - sigma;
  }
  return m;
}

EigenDecomposition jacobi_eigen(const DenseSymMatrix& m) {
  int n = m.order;
  std::vector<double> a = m.entries;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  double scale = 0.0;
  for (double x : a) scale += x * x;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    }
    if (off <= 1e-32 * scale || off == 0.0) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = A(p, q);
        if (apq == 0.0) continue;
        double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return A(x, x) < A(y, y); });
  EigenDecomposition out;
  for (int k : idx) {
    out.values.push_back(A(k, k));
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = V(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

namespace {

// A_sigma in compressed neighbour form.
struct Operator {
  int n;
  double off;
  std::vector<double> diag;
  std::vector<int> start, nbr;

  Operator(const Graph& g, double sigma) : n(g.order()), off(1.0 - sigma), diag(n), start(n + 1) {
    for (int v = 0; v < n; ++v) {
      diag[v] = sigma * g.degree(v);
      start[v] = static_cast<int>(nbr.size());
      for (std::uint64_t r = g.row(v); r; r &= r - 1) nbr.push_back(std::countr_zero(r));
    }
    start[n] = static_cast<int>(nbr.size());
  }

  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (int k = start[v]; k < start[v + 1]; ++k) s += x[nbr[k]];
      y[v] = diag[v] * x[v] + off * s;
    }
  }
};

double residual_of(const Operator& op, const std::vector<double>& x, double lambda) {
  std::vector<double> ax(op.n);
  op.apply(x, ax);
  double r = 0.0;
  for (int i = 0; i < op.n; ++i) r += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
  return std::sqrt(r);
}

enum class PowerStatus { converged, abandoned, capped };

// Power iteration on A + I from the uniform vector.
PowerStatus power_iterate(const Operator& op, double tol, long cap, double abandon_above,
                          SpectralResult& out) {
  int n = op.n;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n);
  for (long it = 1; it <= cap; ++it) {
    op.apply(x, ax);
    double rq = 0.0;
    for (int i = 0; i < n; ++i) rq += x[i] * ax[i];
    out.iterations = it;
    if (rq > abandon_above) return PowerStatus::abandoned;
    double r = 0.0, norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = ax[i] - rq * x[i];
      r += d * d;
      ax[i] += x[i];
      norm += ax[i] * ax[i];
    }
    r = std::sqrt(r);
    if (r <= tol) {
      out.lambda = rq;
      out.perron = x;
      out.residual = r;
      return PowerStatus::converged;
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  return PowerStatus::capped;
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double sigma, double tol, long max_iterations) {
  check_sigma(sigma);
  check_tol(tol);
  if (!is_connected(g)) throw std::invalid_argument("spectral_radius requires a connected graph");
  SpectralResult out;
  if (g.order() == 1) {
    out.perron = {1.0};
    return out;
  }
  Operator op(g, sigma);
  if (power_iterate(op, tol, max_iterations, INFINITY, out) == PowerStatus::converged) return out;

  EigenDecomposition eig = jacobi_eigen(a_sigma_matrix(g, sigma));
  std::vector<double> x = eig.vectors.back();
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum < 0) {
    for (double& xi : x) xi = -xi;
  }
  double norm = 0.0;
  for (double xi : x) norm += xi * xi;
  for (double& xi : x) xi /= std::sqrt(norm);
  double lambda = eig.values.back();
  double r = residual_of(op, x, lambda);
  // Rounding in a dense diagonalisation sets a floor proportional to the norm,
  // and the norm of A_sigma is at most the maximum degree.
  double floor = 64.0 * 2.2e-16 * g.max_degree() * g.order();
  if (r > std::max(tol, floor)) {
    throw std::runtime_error("eigensolver did not converge (residual " + std::to_string(r) + ")");
  }
  out.lambda = lambda;
  out.perron = std::move(x);
  out.residual = r;
  return out;
}

double largest_eigenvalue(const Graph& g, double sigma, double tol) {
  double best = 0.0;
  for (const VertexSet& c : components(g)) {
    if (c.size() == 1) continue;
    best = std::max(best, spectral_radius(induced_subgraph(g, c), sigma, tol).lambda);
  }
  return best;
}

std::optional<double> spectral_radius_unless_above(const Graph& g, double sigma,
                                                   double abandon_above, double tol) {
  check_sigma(sigma);
  check_tol(tol);
  if (g.order() == 1) return abandon_above < 0.0 ? std::nullopt : std::optional<double>(0.0);
  Operator op(g, sigma);
  SpectralResult out;
  switch (power_iterate(op, tol, 1000000, abandon_above, out)) {
    case PowerStatus::converged:
      return out.lambda;
    case PowerStatus::abandoned:
      return std::nullopt;
    case PowerStatus::capped:
      break;
  }
  double lambda = spectral_radius(g, sigma, tol).lambda;
  if (lambda > abandon_above) return std::nullopt;
  return lambda;
}

double pendant_attach_lambda0(const Graph& g, const VertexSet& part, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  std::vector<int> colour = bipartition(g);
  if (colour.empty()) throw std::invalid_argument("graph is not bipartite");
  if (part.empty()) throw std::invalid_argument("A is not a partite set");
  int c = colour[part.front()];
  VertexSet cls;
  for (int v = 0; v < g.order(); ++v) {
    if (colour[v] == c) cls.push_back(v);
  }
  VertexSet sorted = part;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != cls) throw std::invalid_argument("A is not a partite set");
  double l0 = spectral_radius(g, 0.0).lambda;
  return std::sqrt(l0 * l0 + k);
}

double bound_convex(const Graph& g, double sigma) {
  check_sigma(sigma);
  if (sigma > 0.5) throw std::invalid_argument("convex bound needs sigma <= 1/2");
  double half = sigma > 0.0 ? spectral_radius(g, 0.5).lambda : 0.0;
  double zero = sigma < 0.5 ? spectral_radius(g, 0.0).lambda : 0.0;
  return 2.0 * sigma * half + (1.0 - 2.0 * sigma) * zero;
}

double bound_star_lower(int max_degree, double sigma) {
  check_sigma(sigma);
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  double d = max_degree;
  return 0.5 * (std::sqrt(sigma * sigma * (d + 1) * (d + 1) + 4.0 * d * (1.0 - 2.0 * sigma)) +
                sigma * (d + 1));
}

double bound_degree_lower(int max_degree, double sigma) {
  check_sigma(sigma);
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  if (sigma <= 0.5) return sigma * (max_degree + 1);
  return sigma * max_degree + 1.0 - sigma;
}

std::pair<double, double> bound_edge_density(const Graph& g, double sigma) {
  check_sigma(sigma);
  if (g.size() == 0) throw std::invalid_argument("edge density bound needs at least one edge");
  double upper = 0.0;
  for (auto [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    upper = std::max({upper, sigma * du + (1 - sigma) * dv, sigma * dv + (1 - sigma) * du});
  }
  return {2.0 * g.size() / g.order(), upper};
}

double search_bound_rhs(int t, int lp, double sigma) {
  check_sigma(sigma);
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (sigma < 0.5) return sigma * (t + 5) + (1 - 2 * sigma) * std::sqrt(t + 5.0);
  if (lp <= 2) return sigma * (t + 2) + 2 * (1 - sigma);
  return sigma * (t + 3) + 2 * (1 - sigma);
}

int shape_threshold(int c, double sigma) {
  check_sigma(sigma);
  if (c < 4) throw std::invalid_argument("c must be >= 4");
  if (sigma == 0.0) {
    int num = 4 * c * c - 6 * c - 3;
    return (num + 2) / 3;
  }
  double value;
  if (sigma < 0.5) {
    double inner = (1 - 2 * sigma) * (c - 3) / (3 * sigma) + std::sqrt(c + 2.0);
    value = c * inner * inner - 3.0 * c - 1.0;
  } else {
    value = static_cast<double>(c) * c - c - 1;
  }
  value = std::max(value, 2.0 * c + 4.0);
  return static_cast<int>(std::ceil(value - 1e-9));
}

}  // namespace asigma
