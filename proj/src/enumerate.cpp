#include "alphax/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "alphax/canonical.hpp"
#include "alphax/errors.hpp"

namespace alphax {
namespace {

using Mask = std::uint64_t;

struct Node {
  int n = 0;
  std::array<Mask, kEnumerationHardLimit> rows{};

  std::span<const Mask> span() const { return {rows.data(), static_cast<std::size_t>(n)}; }

  Graph to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (Mask m = rows[u] >> (u + 1); m; m &= m - 1) g.add_edge(u, u + 1 + std::countr_zero(m));
    return g;
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

class Generator {
 public:
  Generator(int target, const EnumerationOptions& options,
            const std::function<void(const Graph&)>& visit)
      : target_(target), options_(options), visit_(visit) {}

  void run() {
    Node root;
    root.n = 1;
    if (target_ == 1) {
      if (options_.shard == 0) visit_(root.to_graph());
      return;
    }
    extend(root, {});
  }

 private:
  void extend(const Node& parent, const std::vector<std::vector<int>>& generators) {
    const int m = parent.n;
    if (m == target_ - 1) {
      std::uint64_t index = parent_index_++;
      if (index % static_cast<std::uint64_t>(options_.shard_count) !=
          static_cast<std::uint64_t>(options_.shard))
        return;
    }

    // Neighbourhoods of the new vertex, merged into orbits of the known
    // parent automorphisms; the smallest mask represents each orbit.
    const int subsets = 1 << m;
    std::vector<int> orbit(subsets);
    std::iota(orbit.begin(), orbit.end(), 0);
    for (const auto& gamma : generators)
      for (int s = 0; s < subsets; ++s) {
        int image = 0;
        for (int v = 0; v < m; ++v)
          if (s >> v & 1) image |= 1 << gamma[v];
        unite(orbit, s, image);
      }

    std::set<Certificate> seen;
    for (int s = 0; s < subsets; ++s) {
      if (find_root(orbit, s) != s) continue;
      Node child = parent;
      child.n = m + 1;
      child.rows[m] = static_cast<Mask>(s);
      for (int v = 0; v < m; ++v)
        if (s >> v & 1) child.rows[v] |= Mask{1} << m;

      CanonicalLabeling labeling;
      if (!accept(child, labeling)) continue;
      if (!seen.insert(labeling.certificate).second) continue;
      if (child.n == target_)
        visit_(child.to_graph());
      else
        extend(child, labeling.generators);
    }
  }

  // The canonical deletion vertex is chosen among vertices maximising
  // (degree, sum of neighbour degrees), then by canonical position.
  bool accept(const Node& child, CanonicalLabeling& labeling) const {
    const int n = child.n;
    const int added = n - 1;
    std::array<int, kEnumerationHardLimit> degree{};
    for (int v = 0; v < n; ++v) degree[v] = std::popcount(child.rows[v]);
    std::vector<int> key(n);
    for (int v = 0; v < n; ++v) {
      int sum = 0;
      for (Mask m = child.rows[v]; m; m &= m - 1) sum += degree[std::countr_zero(m)];
      key[v] = degree[v] * (n * n + 1) + sum;
    }
    const int top = *std::max_element(key.begin(), key.end());
    if (key[added] != top) return false;

    labeling = canonical_labeling(child.span(), key);
    const int top_count = static_cast<int>(std::count(key.begin(), key.end(), top));
    const int chosen = labeling.order[n - top_count];
    if (chosen == added) return true;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : labeling.generators)
      for (int v = 0; v < n; ++v) unite(parent, v, gamma[v]);
    if (find_root(parent, chosen) == find_root(parent, added)) return true;

    std::vector<int> marked = key;
    marked[added] = top + 1;
    auto with_added = canonical_labeling(child.span(), marked).certificate;
    marked[added] = top;
    marked[chosen] = top + 1;
    return with_added == canonical_labeling(child.span(), marked).certificate;
  }

  int target_;
  EnumerationOptions options_;
  const std::function<void(const Graph&)>& visit_;
  std::uint64_t parent_index_ = 0;
};

}  // namespace

void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit,
                      const EnumerationOptions& options) {
  if (options.cap > kEnumerationHardLimit)
    throw CapError("enumeration cap " + std::to_string(options.cap) + " exceeds hard limit " +
                   std::to_string(kEnumerationHardLimit));
  if (n > options.cap)
    throw CapError("enumeration order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(options.cap));
  if (n < 1) throw DomainError("enumeration order must be at least 1");
  if (options.shard_count < 1 || options.shard < 0 || options.shard >= options.shard_count)
    throw DomainError("invalid shard " + std::to_string(options.shard) + " of " +
                      std::to_string(options.shard_count));
  Generator(n, options, visit).run();
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, options);
  return out;
}

std::uint64_t count_graphs(int n, const EnumerationOptions& options) {
  std::uint64_t count = 0;
  enumerate_graphs(n, [&](const Graph&) { ++count; }, options);
  return count;
}

}  // namespace alphax
