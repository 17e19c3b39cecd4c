#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alphax/bounds.hpp"
#include "alphax/graph.hpp"

namespace alphax {

struct CliquePattern {
  int r;
};
struct BicliquePattern {
  int s;
  int t;
};
struct GeneralPattern {
  Graph graph;
};
using MinorPattern = std::variant<CliquePattern, BicliquePattern, GeneralPattern>;

/// K_r, K_{s,t} (side of size s first), or the general graph itself.
Graph pattern_graph(const MinorPattern& p);
std::string describe(const MinorPattern& p);

/// branch_sets[i] is the connected set of host vertices contracted onto
/// pattern vertex i.
struct MinorCertificate {
  std::vector<std::vector<int>> branch_sets;
};

/// Centres c_i with leaf sets leaves[i] ⊆ N(c_i), |leaves[i]| = d_i, in the
/// forest's non-increasing degree order; all vertices distinct.
struct StarForestCertificate {
  std::vector<int> centers;
  std::vector<std::vector<int>> leaves;
};

inline constexpr int kDefaultMinorHostCap = 12;

struct MinorSearchOptions {
  int host_cap = kDefaultMinorHostCap;
};

/**
 * Exhaustive branch-set search for a minor model of `pattern` in `g`.
 *
 * Returns a validated certificate, or nullopt when no model exists.
 * Throws CapError when the host order exceeds options.host_cap (hosts
 * smaller than the pattern are answered without searching).
 */
std::optional<MinorCertificate> has_minor(const Graph& g, const MinorPattern& pattern,
                                          const MinorSearchOptions& options = {});

/// Negation of has_minor, with fast paths for K_1, K_2, K_3 (acyclicity) and
/// patterns larger than the host.
bool is_minor_free(const Graph& g, const MinorPattern& pattern,
                   const MinorSearchOptions& options = {});

bool validate_minor_certificate(const Graph& g, const Graph& pattern, const MinorCertificate& cert);

/// Exact search for ∪S_{d_i} as a (not necessarily induced) subgraph.
std::optional<StarForestCertificate> contains_star_forest(const Graph& g, const StarForestSpec& f);
bool is_f_free(const Graph& g, const StarForestSpec& f);

bool validate_star_forest_certificate(const Graph& g, const StarForestSpec& f,
                                      const StarForestCertificate& cert);

nlohmann::json to_json(const MinorCertificate& c);
nlohmann::json to_json(const StarForestCertificate& c);

}  // namespace alphax
