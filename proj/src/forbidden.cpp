#include "alphax/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "alphax/errors.hpp"
#include "alphax/overloaded.hpp"

namespace alphax {
namespace {

using Mask = std::uint32_t;
constexpr int kMaskBits = 32;

Mask bit(int v) { return Mask{1} << v; }

Mask neighbourhood(const std::vector<Mask>& adj, Mask set) {
  Mask out = 0;
  for (Mask s = set; s; s &= s - 1) out |= adj[std::countr_zero(s)];
  return out;
}

// Vertices of `allowed` reachable from `start` inside `allowed`.
Mask grow(const std::vector<Mask>& adj, Mask start, Mask allowed) {
  Mask reach = start;
  for (;;) {
    const Mask next = reach | (neighbourhood(adj, reach) & allowed);
    if (next == reach) return reach;
    reach = next;
  }
}

bool twins(const Graph& p, int u, int v) {
  for (int w = 0; w < p.order(); ++w) {
    if (w == u || w == v) continue;
    if (p.adjacent(u, w) != p.adjacent(v, w)) return false;
  }
  return true;
}

// Branch-set search. Pattern vertices are grouped into contiguous runs of
// mutual twins; within a run a branch may only open after its predecessor.
class MinorSearch {
 public:
  MinorSearch(std::vector<Mask> adj, const Graph& pattern, std::vector<bool> opens_group,
              bool allow_unused)
      : adj_(std::move(adj)),
        m_(pattern.order()),
        pattern_edges_(pattern.edges()),
        opens_group_(std::move(opens_group)),
        allow_unused_(allow_unused),
        branches_(m_, 0),
        reach_(m_, 0) {}

  bool run(Mask domain) {
    order_ = bfs_order(domain);
    pending_ = domain;
    return visit(0);
  }

  const std::vector<Mask>& branches() const { return branches_; }

 private:
  std::vector<int> bfs_order(Mask domain) const {
    std::vector<int> order;
    Mask left = domain;
    while (left) {
      int start = std::countr_zero(left);
      for (Mask s = left; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        if (std::popcount(adj_[v] & domain) > std::popcount(adj_[start] & domain)) start = v;
      }
      std::vector<int> queue{start};
      left &= ~bit(start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Mask next = adj_[queue[head]] & left;
        for (Mask s = next; s; s &= s - 1) queue.push_back(std::countr_zero(s));
        left &= ~next;
      }
      order.insert(order.end(), queue.begin(), queue.end());
    }
    return order;
  }

  // Necessary conditions for extending the partial model with `pending_`.
  bool feasible(Mask pending) {
    int empty = 0;
    for (int i = 0; i < m_; ++i) {
      if (!branches_[i]) {
        ++empty;
        reach_[i] = 0;
        continue;
      }
      const Mask start = branches_[i] & (~branches_[i] + 1);
      reach_[i] = grow(adj_, start, branches_[i] | pending);
      if (branches_[i] & ~reach_[i]) return false;
    }
    if (empty > std::popcount(pending)) return false;
    for (auto [i, j] : pattern_edges_) {
      if (!branches_[i] || !branches_[j]) continue;
      if (!(neighbourhood(adj_, reach_[i]) & reach_[j])) return false;
    }
    return true;
  }

  bool complete() {
    for (Mask b : branches_)
      if (!b) return false;
    return feasible(0);
  }

  bool visit(std::size_t index) {
    if (complete()) return true;
    if (index == order_.size()) return false;
    const int v = order_[index];
    pending_ &= ~bit(v);
    for (int label = 0; label < m_; ++label) {
      if (!opens_group_[label] && !branches_[label - 1]) continue;
      branches_[label] |= bit(v);
      if (feasible(pending_) && visit(index + 1)) return true;
      branches_[label] &= ~bit(v);
    }
    if (allow_unused_ && feasible(pending_) && visit(index + 1)) return true;
    pending_ |= bit(v);
    return false;
  }

  std::vector<Mask> adj_;
  int m_;
  std::vector<std::pair<int, int>> pattern_edges_;
  std::vector<bool> opens_group_;
  bool allow_unused_;
  std::vector<Mask> branches_;
  std::vector<Mask> reach_;
  std::vector<int> order_;
  Mask pending_ = 0;
};

}  // namespace

Graph pattern_graph(const MinorPattern& p) {
  return std::visit(Overloaded{
                        [](const CliquePattern& c) {
                          if (c.r < 1) throw DomainError("clique pattern requires r >= 1");
                          return complete_graph(c.r);
                        },
                        [](const BicliquePattern& b) {
                          if (b.s < 1 || b.t < 1)
                            throw DomainError("biclique pattern requires s, t >= 1");
                          return complete_bipartite(b.s, b.t);
                        },
                        [](const GeneralPattern& g) { return g.graph; },
                    },
                    p);
}

std::string describe(const MinorPattern& p) {
  return std::visit(Overloaded{
                        [](const CliquePattern& c) { return "K_" + std::to_string(c.r); },
                        [](const BicliquePattern& b) {
                          return "K_{" + std::to_string(b.s) + "," + std::to_string(b.t) + "}";
                        },
                        [](const GeneralPattern& g) {
                          return "graph(n=" + std::to_string(g.graph.order()) +
                                 ", m=" + std::to_string(g.graph.edge_count()) + ")";
                        },
                    },
                    p);
}

std::optional<MinorCertificate> has_minor(const Graph& g, const MinorPattern& pattern,
                                          const MinorSearchOptions& options) {
  const Graph p = pattern_graph(pattern);
  const int m = p.order();
  const int n = g.order();
  if (m == 0) return MinorCertificate{};
  if (n < m || g.edge_count() < p.edge_count()) return std::nullopt;
  if (n > options.host_cap || n > kMaskBits)
    throw CapError("minor search host order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(std::min(options.host_cap, kMaskBits)));

  // Regroup pattern vertices so that twin classes are contiguous.
  std::vector<int> rep(m, -1);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < m; ++v) {
    bool placed = false;
    for (auto& cls : classes) {
      if (std::all_of(cls.begin(), cls.end(), [&](int u) { return twins(p, u, v); })) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  std::vector<int> perm(m);
  std::vector<bool> opens(m, false);
  int next = 0;
  for (const auto& cls : classes) {
    opens[next] = true;
    for (int v : cls) perm[v] = next++;
  }
  const Graph grouped = p.relabeled(perm);

  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }

  auto certify = [&](const std::vector<Mask>& branches) {
    MinorCertificate cert;
    cert.branch_sets.resize(m);
    for (int v = 0; v < m; ++v)
      for (Mask s = branches[perm[v]]; s; s &= s - 1)
        cert.branch_sets[v].push_back(std::countr_zero(s));
    if (!validate_minor_certificate(g, p, cert))
      throw std::logic_error("minor search produced an invalid model");
    return cert;
  };

  if (p.is_connected()) {
    // Any unused vertex next to a branch set can be absorbed into it, so a
    // model inside a component may as well cover the whole component.
    for (const auto& comp : g.components()) {
      if (static_cast<int>(comp.size()) < m) continue;
      Mask domain = 0;
      for (int v : comp) domain |= bit(v);
      MinorSearch search(adj, grouped, opens, false);
      if (search.run(domain)) return certify(search.branches());
    }
    return std::nullopt;
  }
  MinorSearch search(adj, grouped, opens, true);
  const Mask all = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
  if (search.run(all)) return certify(search.branches());
  return std::nullopt;
}

bool is_minor_free(const Graph& g, const MinorPattern& pattern, const MinorSearchOptions& options) {
  if (const auto* c = std::get_if<CliquePattern>(&pattern)) {
    if (c->r == 1) return g.order() == 0;
    if (c->r == 2) return g.edge_count() == 0;
    if (c->r == 3) return g.is_forest();
  }
  const Graph p = pattern_graph(pattern);
  if (p.order() > g.order() || p.edge_count() > g.edge_count()) return true;
  return !has_minor(g, pattern, options).has_value();
}

bool validate_minor_certificate(const Graph& g, const Graph& pattern, const MinorCertificate& cert) {
  const int n = g.order();
  if (static_cast<int>(cert.branch_sets.size()) != pattern.order()) return false;
  std::vector<int> owner(n, -1);
  for (int i = 0; i < pattern.order(); ++i) {
    const auto& set = cert.branch_sets[i];
    if (set.empty()) return false;
    for (int v : set) {
      if (v < 0 || v >= n || owner[v] != -1) return false;
      owner[v] = i;
    }
    // Connectivity of the induced branch set.
    std::vector<int> stack{set.front()};
    std::vector<bool> seen(n, false);
    seen[set.front()] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++count;
      for (int w : g.neighbors(u))
        if (!seen[w] && owner[w] == i) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (count != set.size()) return false;
  }
  for (auto [i, j] : pattern.edges()) {
    bool touch = false;
    for (int u : cert.branch_sets[i])
      for (int v : cert.branch_sets[j]) touch = touch || g.adjacent(u, v);
    if (!touch) return false;
  }
  return true;
}

std::optional<StarForestCertificate> contains_star_forest(const Graph& g, const StarForestSpec& f) {
  const int n = g.order();
  const auto& deg = f.degrees();
  const int k = f.k();
  if (n < f.degree_sum() + k) return std::nullopt;

  std::vector<int> centers(k, -1);
  std::vector<bool> is_center(n, false);
  std::vector<int> owner(n, -1);
  std::vector<int> slot_star;
  for (int i = 0; i < k; ++i) slot_star.insert(slot_star.end(), deg[i], i);
  std::vector<bool> seen(n);

  // Kuhn augmenting paths from leaf slots to non-centre vertices.
  std::function<bool(int)> augment = [&](int slot) {
    const int c = centers[slot_star[slot]];
    for (int u : g.neighbors(c)) {
      if (is_center[u] || seen[u]) continue;
      seen[u] = true;
      if (owner[u] < 0 || augment(owner[u])) {
        owner[u] = slot;
        return true;
      }
    }
    return false;
  };
  auto leaves_fit = [&]() {
    std::fill(owner.begin(), owner.end(), -1);
    for (int s = 0; s < static_cast<int>(slot_star.size()); ++s) {
      std::fill(seen.begin(), seen.end(), false);
      if (!augment(s)) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int i) {
    if (i == k) return leaves_fit();
    std::vector<std::pair<int, int>> candidates;  // (-residual degree, vertex)
    const int lower = (i > 0 && deg[i] == deg[i - 1]) ? centers[i - 1] + 1 : 0;
    for (int v = lower; v < n; ++v) {
      if (is_center[v]) continue;
      int residual = 0;
      for (int u : g.neighbors(v)) residual += is_center[u] ? 0 : 1;
      if (residual >= deg[i]) candidates.emplace_back(-residual, v);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [neg, v] : candidates) {
      centers[i] = v;
      is_center[v] = true;
      if (place(i + 1)) return true;
      is_center[v] = false;
    }
    centers[i] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;

  StarForestCertificate cert;
  cert.centers = centers;
  cert.leaves.resize(k);
  for (int u = 0; u < n; ++u)
    if (owner[u] >= 0) cert.leaves[slot_star[owner[u]]].push_back(u);
  if (!validate_star_forest_certificate(g, f, cert))
    throw std::logic_error("star forest search produced an invalid certificate");
  return cert;
}

bool is_f_free(const Graph& g, const StarForestSpec& f) { return !contains_star_forest(g, f); }

bool validate_star_forest_certificate(const Graph& g, const StarForestSpec& f,
                                      const StarForestCertificate& cert) {
  const int n = g.order();
  const int k = f.k();
  if (static_cast<int>(cert.centers.size()) != k || static_cast<int>(cert.leaves.size()) != k)
    return false;
  std::vector<bool> used(n, false);
  auto take = [&](int v) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = true;
    return true;
  };
  for (int i = 0; i < k; ++i) {
    if (!take(cert.centers[i])) return false;
    if (static_cast<int>(cert.leaves[i].size()) != f.degrees()[i]) return false;
    for (int leaf : cert.leaves[i]) {
      if (!take(leaf)) return false;
      if (!g.adjacent(cert.centers[i], leaf)) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const MinorCertificate& c) { return {{"branch_sets", c.branch_sets}}; }

nlohmann::json to_json(const StarForestCertificate& c) {
  return {{"centers", c.centers}, {"leaves", c.leaves}};
}

}  // namespace alphax
