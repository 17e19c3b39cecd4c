#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

/// Certificate of a labeled graph: row i holds the adjacency of the vertex
/// at position i, bit j set when it is adjacent to the vertex at position j.
using Certificate = std::vector<std::uint64_t>;

struct CanonicalLabeling {
  /// order[pos] = vertex placed at canonical position pos.
  std::vector<int> order;
  Certificate certificate;
  /// Automorphisms discovered during the search, as vertex maps v -> gamma[v].
  /// Every entry is a genuine automorphism (colour-preserving when colours
  /// were supplied).
  std::vector<std::vector<int>> generators;
  std::size_t leaves = 0;
};

/// Maximum order accepted by the canonical-labeling routines.
inline constexpr int kCanonicalMaxOrder = 64;

/**
 * Canonical labeling by equitable partition refinement and
 * individualization, with automorphism pruning.
 *
 * `rows[v]` is the adjacency bitmask of v. `colors` (optional, one value per
 * vertex) fixes an ordered initial partition: cells sorted by colour value.
 * Two coloured graphs receive equal certificates exactly when there is a
 * colour-preserving isomorphism between them.
 */
CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows,
                                     std::span<const int> colors = {});
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// Orbit representative (smallest vertex of the orbit) for every vertex,
/// computed exactly by comparing individualized certificates.
std::vector<int> vertex_orbits(const Graph& g);

}  // namespace alphax
