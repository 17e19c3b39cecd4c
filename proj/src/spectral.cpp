#include "alphax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphax/errors.hpp"
#include "alphax/overloaded.hpp"

namespace alphax {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw DomainError("alpha must lie in [0,1], got " + std::to_string(value));
}

void require_open(Alpha a, const char* operation) {
  if (!a.is_open())
    throw DomainError(std::string(operation) + " requires 0 < alpha < 1, got " +
                      std::to_string(a.value()));
}

EigenDecomposition jacobi_eigen(SymmetricMatrix a, const JacobiOptions& options) {
  const int n = a.size();
  EigenDecomposition out;
  out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  auto v = [&](int i, int j) -> double& { return out.vectors[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  double frobenius = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frobenius += a(i, j) * a(i, j);
  const double target = options.tolerance * std::max(1.0, std::sqrt(frobenius));

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= target) break;
    out.sweeps = sweep + 1;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
  }
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
  return out;
}

SymmetricMatrix alpha_matrix(const Graph& g, Alpha a) {
  const int n = g.order();
  const double alpha = a.value();
  SymmetricMatrix m(n);
  for (int v = 0; v < n; ++v) m(v, v) = alpha * g.degree(v);
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0 - alpha;
  return m;
}

double eigen_residual(const Graph& g, Alpha a, double rho, std::span<const double> x) {
  const double alpha = a.value();
  double sum = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    double y = alpha * g.degree(u) * x[u];
    for (int w : g.neighbors(u)) y += (1.0 - alpha) * x[w];
    y -= rho * x[u];
    sum += y * y;
  }
  return std::sqrt(sum);
}

SpectralResult alpha_index(const Graph& g, Alpha a, const JacobiOptions& options) {
  const int n = g.order();
  if (n < 1) throw DomainError("alpha_index requires at least one vertex");

  SpectralResult result;
  result.vector.assign(n, 0.0);
  bool have = false;
  std::vector<double> best_vector;
  std::vector<int> best_component;

  for (const auto& component : g.components()) {
    const int c = static_cast<int>(component.size());
    double rho = 0.0;
    std::vector<double> vec(c, 0.0);
    if (c == 1) {
      vec[0] = 1.0;
    } else {
      auto eig = jacobi_eigen(alpha_matrix(g.induced(component), a), options);
      result.sweeps += eig.sweeps;
      int top = 0;
      for (int i = 1; i < c; ++i)
        if (eig.values[i] > eig.values[top]) top = i;
      rho = eig.values[top];
      for (int i = 0; i < c; ++i) vec[i] = eig.vectors[static_cast<std::size_t>(i) * c + top];
    }
    const double margin = 1e-12 * std::max(1.0, std::abs(result.alpha_index));
    if (!have || rho > result.alpha_index + margin) {
      have = true;
      result.alpha_index = rho;
      best_vector = std::move(vec);
      best_component = component;
    }
  }

  // Sign convention: the entry of largest magnitude is positive.
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < best_vector.size(); ++i)
    if (std::abs(best_vector[i]) > std::abs(best_vector[pivot])) pivot = i;
  const double sign = best_vector[pivot] < 0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < best_vector.size(); ++i)
    result.vector[best_component[i]] = sign * best_vector[i];

  result.residual = eigen_residual(g, a, result.alpha_index, result.vector);
  return result;
}

double signless_laplacian_index(const Graph& g) {
  if (g.order() < 1) throw DomainError("signless_laplacian_index requires at least one vertex");
  SymmetricMatrix q(g.order());
  for (int v = 0; v < g.order(); ++v) q(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) q(u, v) = q(v, u) = 1.0;
  auto eig = jacobi_eigen(std::move(q));
  return *std::max_element(eig.values.begin(), eig.values.end());
}

double rayleigh_quotient(const Graph& g, Alpha a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order()) throw DomainError("vector length != graph order");
  double norm = 0.0;
  for (double xi : x) norm += xi * xi;
  if (norm == 0.0) throw DomainError("rayleigh_quotient of the zero vector");
  const double alpha = a.value();
  double form = 0.0;
  for (auto [u, v] : g.edges())
    form += alpha * x[u] * x[u] + 2.0 * (1.0 - alpha) * x[u] * x[v] + alpha * x[v] * x[v];
  return form / norm;
}

namespace {

// Clique part of size c joined to a part of size h that is r-regular inside.
QuotientMatrix two_class(int c, int h, int r, double alpha) {
  const double beta = 1.0 - alpha;
  QuotientMatrix q;
  q.class_sizes = {c, h};
  q.entries = {alpha * (c - 1 + h) + beta * (c - 1), beta * h,  //
               beta * c, alpha * (c + r) + beta * r};
  return q;
}

QuotientMatrix drop_empty(const QuotientMatrix& q) {
  std::vector<int> keep;
  for (int i = 0; i < q.classes(); ++i)
    if (q.class_sizes[i] > 0) keep.push_back(i);
  QuotientMatrix out;
  for (int i : keep) out.class_sizes.push_back(q.class_sizes[i]);
  for (int i : keep)
    for (int j : keep) out.entries.push_back(q(i, j));
  return out;
}

}  // namespace

QuotientMatrix quotient_matrix(const ConstructionSpec& spec, Alpha a) {
  check_feasible(spec);
  const double alpha = a.value();
  const double beta = 1.0 - alpha;
  QuotientMatrix q = std::visit(
      Overloaded{
          [&](const CompleteSplit& s) { return two_class(s.m, s.n - s.m, 0, alpha); },
          [&](const CliqueJoinCliques& s) { return two_class(s.s - 1, s.p * s.t, s.t - 1, alpha); },
          [&](const CliqueJoinRegular& s) { return two_class(s.k - 1, s.n - s.k + 1, s.d - 1, alpha); },
          [&](const CliqueJoinMatching& s) {
            const int c = s.k - 1;
            const int h = s.n - s.k + 1;
            if (h % 2 == 0) return two_class(c, h, 1, alpha);
            const int matched = h - 1;
            QuotientMatrix m;
            m.class_sizes = {c, matched, 1};
            m.entries = {alpha * (c - 1 + h) + beta * (c - 1), beta * matched, beta,  //
                         beta * c, alpha * (c + 1) + beta, 0.0,                      //
                         beta * c, 0.0, alpha * c};
            return m;
          },
      },
      spec);
  return drop_empty(q);
}

double quotient_alpha_index(const ConstructionSpec& spec, Alpha a) {
  const QuotientMatrix q = quotient_matrix(spec, a);
  const int k = q.classes();
  if (k == 0) throw DomainError("quotient of the empty graph");
  if (k == 1) return q(0, 0);
  if (k == 2) {
    const double half_trace = 0.5 * (q(0, 0) + q(1, 1));
    const double half_gap = 0.5 * (q(0, 0) - q(1, 1));
    return half_trace + std::sqrt(half_gap * half_gap + q(0, 1) * q(1, 0));
  }
  // Equitable quotients satisfy n_i B_ij = n_j B_ji, so scaling by
  // sqrt(n_i/n_j) yields a symmetric matrix with the same spectrum.
  SymmetricMatrix s(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      s(i, j) = s(j, i) =
          q(i, j) * std::sqrt(static_cast<double>(q.class_sizes[i]) / q.class_sizes[j]);
  auto eig = jacobi_eigen(std::move(s));
  return *std::max_element(eig.values.begin(), eig.values.end());
}

nlohmann::json to_json(const SpectralResult& r) {
  return {{"rho", r.alpha_index}, {"residual", r.residual}, {"vector", r.vector}};
}

}  // namespace alphax
