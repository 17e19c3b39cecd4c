#include "alphax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "alphax/errors.hpp"
#include "alphax/overloaded.hpp"

namespace alphax {
namespace {

[[noreturn]] void domain(const std::string& what) { throw DomainError(what); }

std::string str(int v) { return std::to_string(v); }

}  // namespace

double QuadraticBound::largest_root() const {
  const double disc = discriminant();
  if (disc < 0) domain("quadratic has no real roots");
  const double sq = std::sqrt(disc);
  // For b > 0 the '+' root suffers cancellation; recover it from the product c.
  if (b > 0) {
    const double other = (-b - sq) / 2.0;
    return c / other;
  }
  return (-b + sq) / 2.0;
}

double QuadraticBound::smallest_root() const {
  const double disc = discriminant();
  if (disc < 0) domain("quadratic has no real roots");
  const double sq = std::sqrt(disc);
  if (b > 0) return (-b - sq) / 2.0;
  const double top = (-b + sq) / 2.0;
  return top == 0.0 ? 0.0 : c / top;
}

StarForestSpec::StarForestSpec(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) domain("a star forest needs k >= 2 stars");
  if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 1; }))
    domain("star degrees must be >= 1");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

int StarForestSpec::degree_sum() const {
  int sum = 0;
  for (int d : degrees_) sum += d;
  return sum;
}

std::string StarForestSpec::label() const {
  std::string out;
  for (int d : degrees_) out += (out.empty() ? "S" : "+S") + std::to_string(d);
  return out;
}

QuadraticBound lemma21_quadratic(int n, int k, Alpha a) {
  if (k < 2) domain("lemma21_quadratic requires k >= 2, got " + str(k));
  // At n = k-1 the independent class is empty and the root overshoots ρ(K_{k-1}).
  if (n < k) domain("lemma21_quadratic requires n >= k");
  const double al = a.value();
  return {-(al * n + k - 2),
          (k - 1) * (2 * al - 1) * n + (k - 1) * (k - k * al - 1)};
}

double lemma21_second_threshold(int k, Alpha a) {
  require_open(a, "lemma21 second bound");
  const double al = a.value();
  const double kk = k;
  return (2 * kk - 3) * (2 * kk - 3) / (2 * al * al) -
         (8 * kk * kk - 18 * kk + 9) / (2 * al) + 2 * kk * (kk - 1);
}

Lemma21Bounds lemma21_lower_bounds(int n, int k, Alpha a) {
  require_open(a, "lemma21_lower_bounds");
  if (k < 2) domain("lemma21_lower_bounds requires k >= 2, got " + str(k));
  if (n < k) domain("lemma21_lower_bounds requires n >= k");
  const double al = a.value();
  Lemma21Bounds out;
  out.first = al * (n - 1) + (1 - al) * (k - 2);
  if (n >= lemma21_second_threshold(k, a))
    out.second = al * n + (2.0 * k - 3 - (2.0 * k - 1) * al) / (2 * al);
  return out;
}

double compare_lemma21_bounds(int k, Alpha a) {
  require_open(a, "compare_lemma21_bounds");
  if (k < 2) domain("compare_lemma21_bounds requires k >= 2");
  const double al = a.value();
  return ((2.0 * k - 2) * al - (2.0 * k - 3)) * (al - 1) / (2 * al);
}

double lemma21_crossover(int k) {
  if (k < 2) domain("lemma21_crossover requires k >= 2");
  return (2.0 * k - 3) / (2.0 * k - 2);
}

QuadraticBound falpha_polynomial(int n, int k, int d, Alpha a) {
  require_open(a, "f_alpha");
  if (k < 1 || d < 1) domain("f_alpha requires k >= 1 and d >= 1");
  if (n < k - 1) domain("f_alpha requires n >= k-1");
  const double al = a.value();
  const double h = n - k + 1;
  return {-(al * n + k + d - 3),
          (al * h + k - 2) * (al * (k - 1) + d - 1) - (1 - al) * (1 - al) * (k - 1) * h};
}

QuadraticBound falpha_quadratic(int n, int k, int d, Alpha a) {
  require_open(a, "falpha_quadratic");
  if (d < 2) domain("falpha_quadratic requires d >= 2, got " + str(d));
  if (k < 1) domain("falpha_quadratic requires k >= 1, got " + str(k));
  if (n < k - 1) domain("falpha_quadratic requires n >= k-1");
  const double need = 2.0 * k - 2 + (d - k + 1) / a.value();
  if (n < need)
    domain("falpha_quadratic requires n >= 2k-2+(d-k+1)/alpha = " + std::to_string(need) +
           ", got n=" + str(n));
  return falpha_polynomial(n, k, d, a);
}

double lemma41_edge_bound(const StarForestSpec& spec, int n) {
  const int sum = spec.degree_sum();
  const int k = spec.k();
  if (n < sum + k)
    domain("lemma41_edge_bound requires n >= sum(d_i)+k = " + str(sum + k) + ", got " + str(n));
  return 0.5 * (sum + 2 * k - 3) * n - 0.5 * (k - 1) * (sum + k - 1);
}

double ding_edge_bound(int h, int t) {
  if (t < 2) domain("ding_edge_bound requires t >= 2");
  if (h < t + 2) domain("ding_edge_bound requires h >= t+2, got h=" + str(h) + ", t=" + str(t));
  return h + t * (t - 3) / 2.0;
}

namespace {

double biclique_closed_form(int s, int t, int n) {
  const double root = std::sqrt(std::pow(n + 2.0 * s - 2.0 * t - 2, 2) +
                                8.0 * (s - 1) * (t - s + 1));
  return (n + 2.0 * s + 2.0 * t - 6 + root) / 2.0;
}

}  // namespace

double corollary_q_bound(const QBoundKind& kind, int n) {
  return std::visit(
      Overloaded{
          [n](const BicliqueQ& b) {
            if (!(b.t >= b.s && b.s >= 2)) domain("biclique q-bound requires t >= s >= 2");
            if (n < b.s - 1) domain("biclique q-bound requires n >= s-1");
            return biclique_closed_form(b.s, b.t, n);
          },
          [n](const StarForestQ& f) {
            const int k = f.spec.k();
            const int dk = f.spec.smallest();
            if (dk < 2) domain("star-forest q-bound requires d_k >= 2");
            if (n < k - 1) domain("star-forest q-bound requires n >= k-1");
            if (dk == 2) return 2.0 * quotient_alpha_index(CliqueJoinMatching{n, k}, Alpha(0.5));
            return biclique_closed_form(k, dk, n);
          },
      },
      kind);
}

double star_forest_threshold_cubic(const StarForestSpec& spec, Alpha a) {
  require_open(a, "star forest threshold");
  const double sum = spec.degree_sum();
  const double k = spec.k();
  return 4 * (sum + k - 2) * (sum + 3 * k - 5) / std::pow(a.value(), 3);
}

double star_forest_threshold_square(const StarForestSpec& spec, Alpha a) {
  require_open(a, "star forest threshold");
  const double sum = spec.degree_sum();
  const double k = spec.k();
  return 4 * (sum + k - 2) * (sum + 3 * k - 5) / std::pow(a.value(), 2);
}

}  // namespace alphax
