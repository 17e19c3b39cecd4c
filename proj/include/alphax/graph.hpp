#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace alphax {

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored densely as one bit row per vertex (64 vertices per
 * word). Both (u,v) and (v,u) bits are kept so that row operations such as
 * neighbourhood intersection are single word operations for n <= 64.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degrees() const;
  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  bool is_regular() const;

  std::vector<int> neighbors(int v) const;
  /// Edges as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Adjacency row of v as a single word; requires order() <= 64.
  std::uint64_t row_mask(int v) const { return bits_[row_offset(v)]; }

  bool is_connected() const;
  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;
  bool is_forest() const;

  /// Relabel: vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  /// Subgraph induced by `vertices`, renumbered in the given order.
  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Named graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
/// Circulant graph on n vertices: i ~ i±o (mod n) for each offset o.
Graph circulant_graph(int n, std::span<const int> offsets);

Graph disjoint_union(const Graph& g, const Graph& h);
/// g ∇ h: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
/// p disjoint copies of g.
Graph copies(const Graph& g, int p);

/// Adjacency-list export: {"n": int, "edges": [[u,v],...]} with u < v sorted.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace alphax
