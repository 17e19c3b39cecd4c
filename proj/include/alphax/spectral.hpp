#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "alphax/constructions.hpp"
#include "alphax/graph.hpp"

namespace alphax {

/// The mixing parameter of A_α(G) = αD(G) + (1-α)A(G); always within [0,1].
class Alpha {
 public:
  /// Throws DomainError outside [0,1].
  explicit Alpha(double value);

  double value() const { return value_; }
  /// 0 < α < 1, the range the extremal results are stated for.
  bool is_open() const { return value_ > 0.0 && value_ < 1.0; }

 private:
  double value_;
};

/// Throws DomainError unless 0 < α < 1.
void require_open(Alpha a, const char* operation);

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> data_;
};

struct JacobiOptions {
  /// Convergence when the off-diagonal Frobenius norm drops below
  /// tolerance · max(1, ‖A‖_F).
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

struct EigenDecomposition {
  std::vector<double> values;
  /// Column j (entries vectors[i*n + j]) is the unit eigenvector of values[j].
  std::vector<double> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations, fixed row-by-row sweep order.
EigenDecomposition jacobi_eigen(SymmetricMatrix a, const JacobiOptions& options = {});

struct SpectralResult {
  double alpha_index = 0.0;
  /// Unit 2-norm, nonnegative. For a disconnected graph it is supported on
  /// the first component attaining the α-index.
  std::vector<double> vector;
  double residual = 0.0;
  int sweeps = 0;
};

/// Diagonal α·d(v), off-diagonal (1-α) on edges.
SymmetricMatrix alpha_matrix(const Graph& g, Alpha a);

/// Largest eigenvalue of A_α(G) and its nonnegative unit eigenvector.
SpectralResult alpha_index(const Graph& g, Alpha a, const JacobiOptions& options = {});

/// Largest eigenvalue of the signless Laplacian D + A.
double signless_laplacian_index(const Graph& g);

/// ‖A_α x − ρx‖₂.
double eigen_residual(const Graph& g, Alpha a, double rho, std::span<const double> x);

/// (xᵀ A_α x)/(xᵀ x), accumulated edgewise. Throws DomainError for x = 0.
double rayleigh_quotient(const Graph& g, Alpha a, std::span<const double> x);

/**
 * Quotient of A_α over an equitable partition of a join construction:
 * classes are the clique part and the remaining part (which is regular),
 * or three classes for F_{n,k} with an unmatched vertex. Empty classes are
 * omitted.
 */
struct QuotientMatrix {
  std::vector<int> class_sizes;
  /// Row-major entries: B[i][j] = Σ_{w in class j} A_α[v][w] for any v in class i.
  std::vector<double> entries;

  int classes() const { return static_cast<int>(class_sizes.size()); }
  double operator()(int i, int j) const { return entries[i * classes() + j]; }
};

QuotientMatrix quotient_matrix(const ConstructionSpec& spec, Alpha a);
/// Largest eigenvalue of the quotient; equals ρ_α(construct(spec)).
double quotient_alpha_index(const ConstructionSpec& spec, Alpha a);

nlohmann::json to_json(const SpectralResult& r);

}  // namespace alphax
