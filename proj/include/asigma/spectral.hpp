#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "asigma/graph.hpp"

namespace asigma {

constexpr double kDefaultTol = 1e-12;

// Throws std::invalid_argument unless 0 <= sigma < 1.
double check_sigma(double sigma);

struct DenseSymMatrix {
  int order = 0;
  std::vector<double> entries;  // row-major, mirrored exactly
  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;
  double residual = 0.0;
  long iterations = 0;
};

struct EigenDecomposition {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

DenseSymMatrix a_sigma_matrix(const Graph& g, double sigma);

// Cyclic Jacobi rotations; intended for orders up to 64.
EigenDecomposition jacobi_eigen(const DenseSymMatrix& m);

// Largest eigenvalue of A_sigma(G) with its Perron vector. G must be connected.
SpectralResult spectral_radius(const Graph& g, double sigma, double tol = kDefaultTol,
                               long max_iterations = 1000000);

// Largest eigenvalue for any graph (maximum over components).
double largest_eigenvalue(const Graph& g, double sigma, double tol = kDefaultTol);

// Like spectral_radius, but gives up (nullopt) as soon as a Rayleigh quotient
// exceeds `abandon_above`. Rayleigh quotients never exceed the true value, so
// nullopt proves lambda > abandon_above.
std::optional<double> spectral_radius_unless_above(const Graph& g, double sigma,
                                                   double abandon_above,
                                                   double tol = kDefaultTol);

double pendant_attach_lambda0(const Graph& g, const VertexSet& part, int k);
double bound_convex(const Graph& g, double sigma);
double bound_star_lower(int max_degree, double sigma);
double bound_degree_lower(int max_degree, double sigma);
std::pair<double, double> bound_edge_density(const Graph& g, double sigma);
// Upper bound on lambda for a minimiser with given t and l'.
double search_bound_rhs(int t, int lp, double sigma);
// Smallest n for which the subdivision-shape theorem applies when alpha = n - c.
int shape_threshold(int c, double sigma);

}  // namespace asigma
