#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asigma/graph.hpp"

namespace asigma {

using Partition = std::vector<VertexSet>;

struct QuotientMatrix {
  int order = 0;
  std::vector<double> entries;  // row-major
  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

// Throws unless the blocks are non-empty, disjoint and cover V(G).
void validate_partition(const Graph& g, const Partition& p);
bool is_equitable(const Graph& g, double sigma, const Partition& p);
QuotientMatrix quotient_matrix(const Graph& g, double sigma, const Partition& p);
// Perron root of a non-negative irreducible matrix, bracketed by
// Collatz-Wielandt ratios until the bracket is narrower than tol.
double quotient_lambda(const QuotientMatrix& q, double tol = 1e-13);
bool quotient_lambda_check(const Graph& g, double sigma, const Partition& p, double tol);

// Coefficients of det(xI - M), highest degree first (leading 1).
std::vector<double> charpoly(const QuotientMatrix& m);
// det(xI - M) by pivoted elimination; far more accurate than expanding the
// coefficients when two nearby polynomials are subtracted.
double charpoly_at(const QuotientMatrix& m, double x);
double polyval(const std::vector<double>& coeffs, double x);

// Closed-form quotient of T1(a,a,a,d) on the blocks
// {pendants of w1..w3}, {w1,w2,w3}, {u1,u2,u3}, {w4}, {pendants of w4}.
// Counts may be zero; the block then stays as a formal row.
QuotientMatrix t1_hub_quotient(double sigma, int a, int d);
Partition t1_hub_partition(int a, int d);  // on t1_graph labels, empty blocks dropped

// Closed-form 11-block quotient of T2(counts) on the blocks
// W1, u1, w1, W2, u2, w2, W3, u3, w3, W4, u4 (W_i = pendants of u_i).
QuotientMatrix t2_block_quotient(double sigma, const std::array<int, 4>& counts);
Partition t2_block_partition(const std::array<int, 4>& counts);  // empty blocks dropped

enum class FactorizationId {
  t1_hub_shift,       // T1(t+1,t+1,t+1,t) vs T1(t+2,t+2,t+2,t-3)
  t1_hub_shift_half,  // the same pair at sigma = 1/2
  t2_inner_swap,      // T2(t,t-1,t,t+1) vs T2(t,t,t-1,t+1)
  t2_inner_swap_wide, // T2(t+1,t-1,t+1,t+2) vs T2(t+1,t+1,t-1,t+2)
  t2_end_shift        // T2(t+1,t,t+1,t+1) vs T2(t+1,t,t,t+2)
};

FactorizationId parse_factorization_id(std::string_view name);
std::string to_string(FactorizationId id);
const std::vector<FactorizationId>& all_factorization_ids();

struct FactorizationPair {
  bool t1 = false;  // shape of both families
  std::array<int, 4> first{}, second{};
};
FactorizationPair factorization_pair(FactorizationId id, int t);

struct FactorizationEvaluation {
  double f1 = 0, f2 = 0;  // characteristic polynomials of the two quotients at x
  double rhs = 0;         // the closed-form factorised difference
  double scale = 1;       // max(1, |f1|, |f2|), for relative comparison
};

FactorizationEvaluation evaluate_factorization(FactorizationId id, double sigma, int t, double x);
// |f1 - f2 - rhs| <= tol * scale
bool factorization_check(FactorizationId id, double sigma, int t, double x, double tol);

}  // namespace asigma
