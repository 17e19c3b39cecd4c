#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

inline constexpr int kDefaultEnumerationCap = 10;
/// No cap may be configured above this (subset orbits are tabulated per parent).
inline constexpr int kEnumerationHardLimit = 14;

struct EnumerationOptions {
  int cap = kDefaultEnumerationCap;
  /// Parents one level below the target order are dealt round-robin to
  /// shards; the union over all shards is the full, duplicate-free output.
  int shard = 0;
  int shard_count = 1;
};

/**
 * Streams exactly one graph per isomorphism class of order n.
 *
 * Orderly generation by canonical augmentation: a child is accepted only if
 * the added vertex lies in the automorphism orbit of the child's canonical
 * deletion vertex, and augmentations equivalent under the parent's
 * automorphisms are merged. The stream order is deterministic.
 *
 * Throws CapError when n exceeds options.cap.
 */
void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit,
                      const EnumerationOptions& options = {});

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options = {});

std::uint64_t count_graphs(int n, const EnumerationOptions& options = {});

}  // namespace alphax
