#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "alphax/enumerate.hpp"
#include "alphax/errors.hpp"
#include "alphax/spectral.hpp"
#include "test_support.hpp"

using namespace alphax;

namespace {

// Independent reference: LAPACK-style dense solver on the assembled matrix.
double eigen_oracle(const Graph& g, double alpha) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) m(v, v) = alpha * g.degree(v);
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0 - alpha;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double q_oracle(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    q(u, u) += 1;
    q(v, v) += 1;
    q(u, v) = q(v, u) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("alpha is validated on the closed interval") {
  CHECK_NOTHROW(Alpha(0.0));
  CHECK_NOTHROW(Alpha(1.0));
  CHECK_THROWS_AS(Alpha(-0.01), DomainError);
  CHECK_THROWS_AS(Alpha(1.5), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
  CHECK_FALSE(Alpha(0.0).is_open());
  CHECK(Alpha(0.3).is_open());
}

TEST_CASE("alpha matrix entries") {
  const auto zero = alpha_matrix(empty_graph(3), Alpha(0.4));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(zero(i, j) == 0.0);
  const auto p3 = alpha_matrix(path_graph(3), Alpha(0.5));
  CHECK(p3(0, 0) == 0.5);
  CHECK(p3(1, 1) == 1.0);
  CHECK(p3(2, 2) == 0.5);
  CHECK(p3(0, 1) == 0.5);
  CHECK(p3(2, 1) == 0.5);
  CHECK(p3(0, 2) == 0.0);
  const auto k3 = alpha_matrix(complete_graph(3), Alpha(0.0));
  CHECK(k3(0, 0) == 0.0);
  CHECK(k3(0, 1) == 1.0);
}

TEST_CASE("alpha index of small named graphs") {
  for (double a : {0.0, 0.3, 0.5, 1.0}) CHECK(alpha_index(complete_graph(6), Alpha(a)).alpha_index == doctest::Approx(5).epsilon(1e-12));
  CHECK(alpha_index(star_graph(3), Alpha(0.5)).alpha_index == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(alpha_index(star_graph(3), Alpha(0.0)).alpha_index == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(alpha_index(Graph(1), Alpha(0.5)).alpha_index == 0.0);
  CHECK_THROWS_AS(alpha_index(Graph(0), Alpha(0.5)), DomainError);
}

TEST_CASE("jacobi agrees with an independent dense solver") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 30;
    const Graph g = test::random_graph(n, 0.15 + 0.01 * trial, rng);
    for (double a : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      const auto r = alpha_index(g, Alpha(a));
      CHECK(std::abs(r.alpha_index - eigen_oracle(g, a)) <= 1e-9);
      CHECK(r.residual <= 1e-10);
    }
  }
}

TEST_CASE("perron vector is a positive unit vector on connected graphs") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 40) {
    const Graph g = test::random_graph(10, 0.35, rng);
    if (!g.is_connected()) continue;
    ++checked;
    const auto r = alpha_index(g, Alpha(0.4));
    double norm = 0;
    for (double x : r.vector) {
      CHECK(x > 0);
      norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigen_residual(g, Alpha(0.4), r.alpha_index, r.vector) <= 1e-10);
  }
}

TEST_CASE("disconnected graphs take the vector from the dominant component") {
  const Graph g = disjoint_union(path_graph(2), complete_graph(4));
  const auto r = alpha_index(g, Alpha(0.5));
  CHECK(r.alpha_index == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.vector[0] == 0.0);
  CHECK(r.vector[1] == 0.0);
  for (int v = 2; v < 6; ++v) CHECK(r.vector[v] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("row-sum bounds hold over all graphs of order at most 6") {
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, [&](const Graph& g) {
      for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double rho = alpha_index(g, Alpha(a)).alpha_index;
        CHECK(rho >= 2.0 * g.edge_count() / n - 1e-10);
        CHECK(rho <= g.max_degree() + 1e-10);
      }
    });
}

TEST_CASE("regular graphs have alpha index equal to their degree") {
  for (int n = 1; n <= 8; ++n)
    enumerate_graphs(n, [&](const Graph& g) {
      if (!g.is_regular()) return;
      for (double a : {0.0, 0.5, 0.8}) {
        const auto r = alpha_index(g, Alpha(a));
        CHECK(std::abs(r.alpha_index - g.max_degree()) <= 1e-10);
        if (g.is_connected())
          for (double x : r.vector) CHECK(x == doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-9));
      }
    });
}

TEST_CASE("deleting an edge of a connected graph strictly lowers the alpha index") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = test::random_graph(3 + trial % 6, 0.6, rng);
    if (!g.is_connected() || g.edge_count() == 0) continue;
    const auto edges = g.edges();
    const auto [u, v] = edges[trial % edges.size()];
    Graph h = g;
    h.remove_edge(u, v);
    for (double a : {0.1, 0.5, 0.9})
      CHECK(alpha_index(g, Alpha(a)).alpha_index > alpha_index(h, Alpha(a)).alpha_index + 1e-12);
  }
}

TEST_CASE("twice the half-alpha index is the signless Laplacian index") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = test::random_graph(2 + trial % 15, 0.4, rng);
    const double q = q_oracle(g);
    CHECK(std::abs(2.0 * alpha_index(g, Alpha(0.5)).alpha_index - q) <= 1e-9);
    CHECK(std::abs(signless_laplacian_index(g) - q) <= 1e-9);
  }
}

TEST_CASE("rayleigh quotient") {
  const std::vector<double> ones{1.0, 1.0};
  CHECK(rayleigh_quotient(complete_graph(2), Alpha(0.5), ones) == doctest::Approx(1.0));
  // x = e_a on P3: the form reduces to the diagonal entry α·d(a) = 1/2.
  const std::vector<double> corner{1.0, 0.0, 0.0};
  CHECK(rayleigh_quotient(path_graph(3), Alpha(0.5), corner) == doctest::Approx(0.5));
  const std::vector<double> zero{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(rayleigh_quotient(path_graph(3), Alpha(0.5), zero), DomainError);

  std::mt19937 rng(29);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = test::random_graph(8, 0.5, rng);
    const auto r = alpha_index(g, Alpha(0.3));
    CHECK(rayleigh_quotient(g, Alpha(0.3), r.vector) == doctest::Approx(r.alpha_index).epsilon(1e-9));
    std::vector<double> x(8);
    for (double& xi : x) xi = gauss(rng);
    CHECK(rayleigh_quotient(g, Alpha(0.3), x) <= r.alpha_index + 1e-9);
  }
}

TEST_CASE("quotient matrices agree with the dense eigensolver") {
  CHECK(quotient_alpha_index(CompleteSplit{3, 1}, Alpha(0.5)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(quotient_alpha_index(CompleteSplit{4, 1}, Alpha(0.5)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(quotient_alpha_index(CliqueJoinCliques{10, 2, 3, 3}, Alpha(0.5)) -
                 (7 + std::sqrt(13.0)) / 2) <= 1e-9);

  std::vector<ConstructionSpec> specs;
  for (int n = 2; n <= 24; n += 2) {
    for (int m = 0; m <= n; m += 3) specs.push_back(CompleteSplit{n, m});
    for (int k = 1; k <= 4; ++k) specs.push_back(CliqueJoinMatching{n + 1, k});
    for (int k = 1; k <= 3; ++k)
      for (int d = 1; d <= 5; ++d)
        if (is_feasible(CliqueJoinRegular{n, k, d})) specs.push_back(CliqueJoinRegular{n, k, d});
  }
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 4; ++t)
      for (int p = 1; p <= 4; ++p) specs.push_back(CliqueJoinCliques{s - 1 + p * t, s, t, p});
  for (const auto& spec : specs)
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Graph g = construct(spec);
      CHECK_MESSAGE(std::abs(quotient_alpha_index(spec, Alpha(a)) - eigen_oracle(g, a)) <= 1e-9,
                    describe(spec));
    }
}

TEST_CASE("quotient rows sum to the row sums of the full matrix") {
  const auto q = quotient_matrix(CliqueJoinMatching{9, 3}, Alpha(0.3));
  REQUIRE(q.classes() == 3);
  const Graph g = construct(CliqueJoinMatching{9, 3});
  // The last vertex is the unmatched one; its row sum is α·d + (1−α)·d = d.
  CHECK(q(2, 0) + q(2, 1) + q(2, 2) == doctest::Approx(g.degree(8)));
  CHECK(q(0, 0) + q(0, 1) + q(0, 2) == doctest::Approx(g.degree(0)));
}

TEST_CASE("eigensolver residual stays small at a few hundred vertices") {
  std::mt19937 rng(31);
  const Graph g = test::random_graph(200, 0.05, rng);
  const auto r = alpha_index(g, Alpha(0.6));
  CHECK(r.residual <= 1e-10);
  CHECK(std::abs(r.alpha_index - eigen_oracle(g, 0.6)) <= 1e-9);
}

TEST_CASE("spectral results serialize to JSON") {
  const auto j = to_json(alpha_index(complete_graph(3), Alpha(0.5)));
  CHECK(j.contains("rho"));
  CHECK(j.contains("residual"));
  CHECK(j["vector"].size() == 3);
}
