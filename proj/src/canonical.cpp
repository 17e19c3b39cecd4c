#include "alphax/canonical.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <numeric>

#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"

namespace alphax {
namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

Mask bit(int v) { return Mask{1} << v; }

int lowest(Mask m) { return std::countr_zero(m); }

std::vector<Mask> rows_of(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw DomainError("canonical labeling supports order <= 64");
  std::vector<Mask> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row_mask(v);
  return rows;
}

class Labeler {
 public:
  explicit Labeler(std::span<const Mask> rows) : rows_(rows), n_(static_cast<int>(rows.size())) {}

  CanonicalLabeling run(std::span<const int> colors) {
    Cells cells = initial_cells(colors);
    refine(cells, cells);
    if (n_ > 0) visit(cells, 0);
    CanonicalLabeling out;
    out.order = best_order_;
    out.certificate = best_cert_;
    out.generators = std::move(generators_);
    out.leaves = leaves_;
    return out;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  Cells initial_cells(std::span<const int> colors) const {
    if (colors.empty()) {
      Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
      return n_ == 0 ? Cells{} : Cells{all};
    }
    if (static_cast<int>(colors.size()) != n_) throw DomainError("colour vector has wrong length");
    std::map<int, Mask> by_color;
    for (int v = 0; v < n_; ++v) by_color[colors[v]] |= bit(v);
    Cells cells;
    for (auto& [c, m] : by_color) cells.push_back(m);
    return cells;
  }

  // Splits cells until the partition is equitable. Pieces of a split cell are
  // ordered by their neighbour count into the splitter, so the result depends
  // only on the structure, never on the vertex numbering.
  void refine(Cells& cells, Cells queue) const {
    std::size_t head = 0;
    int counts[kCanonicalMaxOrder];
    while (head < queue.size()) {
      Mask splitter = queue[head++];
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        Mask cell = cells[ci];
        if (std::has_single_bit(cell)) continue;
        int lo = INT_MAX, hi = -1;
        for (Mask m = cell; m; m &= m - 1) {
          int v = lowest(m);
          counts[v] = std::popcount(rows_[v] & splitter);
          lo = std::min(lo, counts[v]);
          hi = std::max(hi, counts[v]);
        }
        if (lo == hi) continue;
        Cells pieces;
        for (int c = lo; c <= hi; ++c) {
          Mask piece = 0;
          for (Mask m = cell; m; m &= m - 1)
            if (counts[lowest(m)] == c) piece |= bit(lowest(m));
          if (piece) pieces.push_back(piece);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
        for (Mask p : pieces) queue.push_back(p);
        ci += pieces.size() - 1;
      }
    }
  }

  Certificate certificate_of(const std::vector<int>& order) const {
    int pos[kCanonicalMaxOrder];
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    Certificate cert(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (Mask m = rows_[order[i]]; m; m &= m - 1) cert[i] |= bit(pos[lowest(m)]);
    return cert;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    while (d < static_cast<int>(a.size()) && d < static_cast<int>(b.size()) && a[d] == b[d]) ++d;
    return d;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(std::move(gamma));
  }

  int leaf(const Cells& cells) {
    ++leaves_;
    std::vector<int> order;
    order.reserve(n_);
    for (Mask c : cells) order.push_back(lowest(c));
    Certificate cert = certificate_of(order);
    if (!have_first_) {
      have_first_ = true;
      first_order_ = best_order_ = order;
      first_cert_ = best_cert_ = cert;
      first_prefix_ = best_prefix_ = prefix_;
      return kNoJump;
    }
    if (cert == first_cert_) {
      add_generator(first_order_, order);
      return common_prefix(prefix_, first_prefix_);
    }
    if (cert == best_cert_) {
      add_generator(best_order_, order);
      return common_prefix(prefix_, best_prefix_);
    }
    if (cert > best_cert_) {
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      best_prefix_ = prefix_;
    }
    return kNoJump;
  }

  // Orbit representative of v under the generators that fix the current
  // prefix pointwise.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int visit(const Cells& cells, int depth) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!std::has_single_bit(cells[i])) {
        target = i;
        break;
      }
    if (target == cells.size()) return leaf(cells);

    std::vector<int> tried;
    for (Mask m = cells[target]; m; m &= m - 1) {
      int v = lowest(m);
      if (!tried.empty() && !generators_.empty()) {
        auto orbit = stabilizer_orbits();
        bool equivalent = std::any_of(tried.begin(), tried.end(),
                                      [&](int t) { return orbit[t] == orbit[v]; });
        if (equivalent) continue;
      }
      tried.push_back(v);

      Cells child = cells;
      child[target] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      refine(child, Cells{bit(v)});

      prefix_.push_back(v);
      int jump = visit(child, depth + 1);
      prefix_.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  std::span<const Mask> rows_;
  int n_;
  std::vector<int> prefix_;
  bool have_first_ = false;
  std::vector<int> first_order_, best_order_, first_prefix_, best_prefix_;
  Certificate first_cert_, best_cert_;
  std::vector<std::vector<int>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows,
                                     std::span<const int> colors) {
  if (rows.size() > static_cast<std::size_t>(kCanonicalMaxOrder))
    throw DomainError("canonical labeling supports order <= 64");
  return Labeler(rows).run(colors);
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  auto rows = rows_of(g);
  return canonical_labeling(std::span<const Mask>(rows), colors);
}

Graph canonical_form(const Graph& g) {
  auto lab = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[lab.order[pos]] = pos;
  return g.relabeled(perm);
}

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_labeling(g).certificate == canonical_labeling(h).certificate;
}

std::vector<int> vertex_orbits(const Graph& g) {
  const int n = g.order();
  auto rows = rows_of(g);
  std::vector<Certificate> keys(n);
  std::vector<int> colors(n, 0);
  for (int v = 0; v < n; ++v) {
    colors[v] = 1;
    keys[v] = canonical_labeling(std::span<const Mask>(rows), colors).certificate;
    colors[v] = 0;
  }
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) {
    rep[v] = v;
    for (int u = 0; u < v; ++u)
      if (keys[u] == keys[v]) {
        rep[v] = rep[u];
        break;
      }
  }
  return rep;
}

}  // namespace alphax
