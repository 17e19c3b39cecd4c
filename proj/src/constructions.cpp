#include "alphax/constructions.hpp"

#include <vector>

#include "alphax/errors.hpp"
#include "alphax/overloaded.hpp"

namespace alphax {
namespace {

[[noreturn]] void infeasible(const std::string& what) { throw FeasibilityError(what); }

Graph regular_circulant(int order, int degree) {
  std::vector<int> offsets;
  for (int o = 1; o <= degree / 2; ++o) offsets.push_back(o);
  if (degree % 2 == 1) offsets.push_back(order / 2);
  return circulant_graph(order, offsets);
}

}  // namespace

CliqueJoinCliques clique_join_cliques(int n, int s, int t) {
  if (t <= 0) infeasible("CliqueJoinCliques requires t >= 1");
  return {n, s, t, (n - s + 1) / t};
}

void check_feasible(const ConstructionSpec& spec) {
  std::visit(
      Overloaded{
          [](const CompleteSplit& c) {
            if (c.m < 0 || c.m > c.n) infeasible("CompleteSplit requires 0 <= m <= n");
          },
          [](const CliqueJoinCliques& c) {
            if (c.s < 1 || c.t < 1 || c.p < 0)
              infeasible("CliqueJoinCliques requires s >= 1, t >= 1, p >= 0");
            if (c.n - c.s + 1 != c.p * c.t)
              infeasible("CliqueJoinCliques requires n - s + 1 = p*t (n=" + std::to_string(c.n) +
                         ", s=" + std::to_string(c.s) + ", t=" + std::to_string(c.t) +
                         ", p=" + std::to_string(c.p) + ")");
          },
          [](const CliqueJoinMatching& c) {
            if (c.k < 1 || c.n < c.k - 1)
              infeasible("CliqueJoinMatching requires k >= 1 and n >= k - 1");
          },
          [](const CliqueJoinRegular& c) {
            if (c.k < 1 || c.d < 1) infeasible("CliqueJoinRegular requires k >= 1 and d >= 1");
            int m = c.n - c.k + 1;
            if (!(c.d - 1 < m))
              infeasible("CliqueJoinRegular requires 0 <= d-1 < n-k+1 (d-1=" +
                         std::to_string(c.d - 1) + ", n-k+1=" + std::to_string(m) + ")");
            if (((c.d - 1) * m) % 2 != 0)
              infeasible("CliqueJoinRegular requires (d-1)(n-k+1) even");
          },
      },
      spec);
}

bool is_feasible(const ConstructionSpec& spec) {
  try {
    check_feasible(spec);
    return true;
  } catch (const FeasibilityError&) {
    return false;
  }
}

Graph construct(const ConstructionSpec& spec) {
  check_feasible(spec);
  return std::visit(
      Overloaded{
          [](const CompleteSplit& c) { return join(complete_graph(c.m), empty_graph(c.n - c.m)); },
          [](const CliqueJoinCliques& c) {
            return join(complete_graph(c.s - 1), copies(complete_graph(c.t), c.p));
          },
          [](const CliqueJoinMatching& c) {
            int m = c.n - c.k + 1;
            Graph h = disjoint_union(copies(complete_graph(2), m / 2), empty_graph(m % 2));
            return join(complete_graph(c.k - 1), h);
          },
          [](const CliqueJoinRegular& c) {
            int m = c.n - c.k + 1;
            return join(complete_graph(c.k - 1), regular_circulant(m, c.d - 1));
          },
      },
      spec);
}

int order_of(const ConstructionSpec& spec) {
  return std::visit([](const auto& c) { return c.n; }, spec);
}

std::string describe(const ConstructionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const CompleteSplit& c) {
            return "K_" + std::to_string(c.m) + " join co-K_" + std::to_string(c.n - c.m);
          },
          [](const CliqueJoinCliques& c) {
            return "K_" + std::to_string(c.s - 1) + " join " + std::to_string(c.p) + "K_" +
                   std::to_string(c.t);
          },
          [](const CliqueJoinMatching& c) {
            int m = c.n - c.k + 1;
            return "F_{" + std::to_string(c.n) + "," + std::to_string(c.k) + "} = K_" +
                   std::to_string(c.k - 1) + " join (" + std::to_string(m / 2) + "K_2 + " +
                   std::to_string(m % 2) + "K_1)";
          },
          [](const CliqueJoinRegular& c) {
            return "K_" + std::to_string(c.k - 1) + " join C(" + std::to_string(c.n - c.k + 1) +
                   ", " + std::to_string(c.d - 1) + "-regular)";
          },
      },
      spec);
}

}  // namespace alphax
