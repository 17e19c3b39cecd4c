#include <doctest.h>

#include <set>

#include "alphax/canonical.hpp"
#include "alphax/enumerate.hpp"
#include "alphax/errors.hpp"
#include "test_support.hpp"

using namespace alphax;

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = test::random_graph(n, 0.2 + 0.05 * (trial % 13), rng);
    const Graph h = g.relabeled(test::random_permutation(n, rng));
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(are_isomorphic(g, h));
  }
  CHECK(canonical_graph6(petersen_graph()) ==
        canonical_graph6(petersen_graph().relabeled(std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
}

TEST_CASE("non-isomorphic graphs with equal degree sequences are distinguished") {
  CHECK_FALSE(are_isomorphic(cycle_graph(6), copies(complete_graph(3), 2)));
  const std::vector<int> mobius{1, 3};
  const std::vector<int> prism{2, 3};
  CHECK(are_isomorphic(circulant_graph(6, mobius), complete_bipartite(3, 3)));
  CHECK_FALSE(are_isomorphic(circulant_graph(6, prism), complete_bipartite(3, 3)));
}

TEST_CASE("generators are automorphisms and orbits are exact") {
  const Graph p = petersen_graph();
  const auto lab = canonical_labeling(p);
  CHECK_FALSE(lab.generators.empty());
  for (const auto& gamma : lab.generators) CHECK(p.relabeled(gamma) == p);
  const auto orbits = vertex_orbits(p);
  for (int v : orbits) CHECK(v == 0);
  CHECK(vertex_orbits(path_graph(4)) == std::vector<int>{0, 1, 1, 0});
  CHECK(vertex_orbits(star_graph(3)) == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("enumeration counts match the known census") {
  const std::vector<std::uint64_t> census{1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  for (int n = 1; n <= 9; ++n) CHECK(count_graphs(n) == census[n - 1]);
}

TEST_CASE("enumeration agrees with the networkx atlas up to isomorphism") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> ours;
    enumerate_graphs(n, [&](const Graph& g) { ours.insert(canonical_graph6(g)); });
    std::set<std::string> theirs;
    for (const Graph& g : test::atlas(n)) theirs.insert(canonical_graph6(g));
    CHECK(ours.size() == count_graphs(n));
    CHECK(ours == theirs);
  }
}

TEST_CASE("shards partition the enumeration") {
  for (int shards : {2, 3, 5}) {
    std::multiset<std::string> seen;
    for (int s = 0; s < shards; ++s)
      enumerate_graphs(7, [&](const Graph& g) { seen.insert(canonical_graph6(g)); },
                       EnumerationOptions{kDefaultEnumerationCap, s, shards});
    CHECK(seen.size() == 1044);
    CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == 1044);
  }
  CHECK(count_graphs(1, EnumerationOptions{kDefaultEnumerationCap, 1, 2}) == 0);
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_graphs(6) == enumerate_graphs(6));
}

TEST_CASE("enumeration refuses orders above the cap") {
  CHECK_THROWS_AS(count_graphs(11), CapError);
  CHECK_THROWS_AS(count_graphs(5, EnumerationOptions{15, 0, 1}), CapError);
  CHECK_THROWS_AS(count_graphs(5, EnumerationOptions{4, 0, 1}), CapError);
  CHECK_THROWS_AS(count_graphs(0), DomainError);
  CHECK_THROWS_AS(count_graphs(4, EnumerationOptions{10, 2, 2}), DomainError);
}
