#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphax/spectral.hpp"

namespace alphax {

/// Monic quadratic x² + bx + c.
struct QuadraticBound {
  double b = 0.0;
  double c = 0.0;

  double discriminant() const { return b * b - 4.0 * c; }
  double operator()(double x) const { return (x + b) * x + c; }
  /// (−b + √(b²−4c))/2, evaluated without cancellation. Throws DomainError
  /// when the roots are complex.
  double largest_root() const;
  double smallest_root() const;
};

/// Star forest ∪ S_{d_i}, degrees kept sorted non-increasing.
class StarForestSpec {
 public:
  /// Sorts the degrees; throws DomainError unless k >= 2 and every d_i >= 1.
  explicit StarForestSpec(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int k() const { return static_cast<int>(degrees_.size()); }
  int degree_sum() const;
  /// d_k, the smallest star.
  int smallest() const { return degrees_.back(); }
  /// e.g. "S2+S2".
  std::string label() const;

  bool operator==(const StarForestSpec&) const = default;

 private:
  std::vector<int> degrees_;
};

/// g(x) = x² − (αn+k−2)x + (k−1)(2α−1)n + (k−1)(k−kα−1); its largest root is
/// ρ_α(K_{k−1} ∇ K̄_{n−k+1}). Requires k >= 2, n >= k, α ∈ [0,1].
QuadraticBound lemma21_quadratic(int n, int k, Alpha a);

struct Lemma21Bounds {
  /// α(n−1) + (1−α)(k−2).
  double first = 0.0;
  /// αn + (2k−3−(2k−1)α)/(2α); absent when n is below its threshold.
  std::optional<double> second;
};

/// (2k−3)²/(2α²) − (8k²−18k+9)/(2α) + 2k(k−1).
double lemma21_second_threshold(int k, Alpha a);
Lemma21Bounds lemma21_lower_bounds(int n, int k, Alpha a);

/// second − first = ((2k−2)α − (2k−3))(α−1)/(2α), independent of n.
double compare_lemma21_bounds(int k, Alpha a);
/// (2k−3)/(2k−2): the α at which the two lower bounds coincide.
double lemma21_crossover(int k);

/// f_α(x) = x² − (αn+k+d−3)x + (α(n−k+1)+k−2)(α(k−1)+d−1) − (1−α)²(k−1)(n−k+1),
/// built without the upper-bound hypotheses (k >= 1, d >= 1, n >= k−1, 0<α<1).
QuadraticBound falpha_polynomial(int n, int k, int d, Alpha a);

/// f_α as the upper bound for ρ_α(K_{k−1} ∇ H) with Δ(H) <= d−1; enforces
/// d >= 2, k >= 1 and n >= max{k−1, 2k−2+(d−k+1)/α}.
QuadraticBound falpha_quadratic(int n, int k, int d, Alpha a);

/// ½(Σd_i+2k−3)n − ½(k−1)(Σd_i+k−1), for n >= Σd_i + k.
double lemma41_edge_bound(const StarForestSpec& spec, int n);

/// h + t(t−3)/2 for connected K_{1,t}-minor-free graphs of order h >= t+2, t >= 2.
double ding_edge_bound(int h, int t);

struct BicliqueQ {
  int s;
  int t;
};
struct StarForestQ {
  StarForestSpec spec;
};
using QBoundKind = std::variant<BicliqueQ, StarForestQ>;

/**
 * Closed-form upper bound on q(G) = 2ρ_{1/2}(G).
 *
 * Biclique (t >= s >= 2):
 *   (n+2s+2t−6+√((n+2s−2t−2)² + 8(s−1)(t−s+1)))/2.
 * Star forest with d_k >= 3: the same shape with (s,t) -> (k, d_k).
 * Star forest with d_k = 2: q(F_{n,k}).
 */
double corollary_q_bound(const QBoundKind& kind, int n);

/// 4(Σd_i+k−2)(Σd_i+3k−5)/α³, the order threshold of the general star-forest result.
double star_forest_threshold_cubic(const StarForestSpec& spec, Alpha a);
/// The same numerator over α², as used for connected graphs.
double star_forest_threshold_square(const StarForestSpec& spec, Alpha a);

}  // namespace alphax
