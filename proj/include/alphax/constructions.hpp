#pragma once

#include <string>
#include <variant>

#include "alphax/graph.hpp"

namespace alphax {

/// K_m ∇ K̄_{n-m}.
struct CompleteSplit {
  int n;
  int m;
};

/// K_{s-1} ∇ pK_t with n - s + 1 = p·t.
struct CliqueJoinCliques {
  int n;
  int s;
  int t;
  int p;
};

/// F_{n,k} = K_{k-1} ∇ (pK_2 ∪ qK_1), p = ⌊(n-k+1)/2⌋, q = (n-k+1) mod 2.
struct CliqueJoinMatching {
  int n;
  int k;
};

/// K_{k-1} ∇ H with H a (d-1)-regular circulant on n-k+1 vertices.
struct CliqueJoinRegular {
  int n;
  int k;
  int d;
};

using ConstructionSpec =
    std::variant<CompleteSplit, CliqueJoinCliques, CliqueJoinMatching, CliqueJoinRegular>;

/// CliqueJoinCliques with p derived from n, s, t.
CliqueJoinCliques clique_join_cliques(int n, int s, int t);

/// Throws FeasibilityError naming the first violated invariant.
void check_feasible(const ConstructionSpec& spec);
bool is_feasible(const ConstructionSpec& spec);

/// Builds the named graph. Clique vertices come first (0..c-1), followed by
/// the second part in its natural order.
Graph construct(const ConstructionSpec& spec);

int order_of(const ConstructionSpec& spec);
std::string describe(const ConstructionSpec& spec);

}  // namespace alphax
