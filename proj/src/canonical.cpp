#include "spti/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace spti {

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 0xf];
  }
  return out;
}

namespace {

// Colour refinement: start from degrees, then split colours by the sorted
// multiset of neighbour colours until stable. Colour ids are ranks of the
// signatures, so the result is invariant under relabeling.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class PermutationSearch {
 public:
  explicit PermutationSearch(const Graph& g) : g_(g), n_(g.order()) {
    auto colour = refined_colours(g);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && colour[order[j]] == colour[order[i]]) ++j;
      cells_.emplace_back(order.begin() + i, order.begin() + j);
      i = j;
    }
    position_of_.assign(n_, -1);
  }

  std::uint32_t run() {
    place(0, 0);
    return best_;
  }

 private:
  // Bit for pair (i, j), i < j, in row-major upper-triangular order; the
  // first pair is the most significant bit.
  int bit_index(int i, int j) const {
    int before = i * n_ - i * (i + 1) / 2;
    int total = n_ * (n_ - 1) / 2;
    return total - 1 - (before + (j - i - 1));
  }

  void place(std::size_t cell, std::size_t filled) {
    if (cell == cells_.size()) {
      std::uint32_t bits = 0;
      for (const auto& e : g_.edges()) {
        int a = position_of_[e.u];
        int b = position_of_[e.v];
        if (a > b) std::swap(a, b);
        bits |= std::uint32_t{1} << bit_index(a, b);
      }
      best_ = std::min(best_, bits);
      return;
    }
    auto members = cells_[cell];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t k = 0; k < members.size(); ++k) {
        position_of_[members[k]] = static_cast<int>(filled + k);
      }
      place(cell + 1, filled + members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> position_of_;
  std::uint32_t best_ = UINT32_MAX;
};

}  // namespace

CanonicalKey permutation_key(const Graph& g) {
  if (g.order() > kMaxPermutationOrder) {
    throw GraphError("permutation canonical form supports at most " +
                     std::to_string(kMaxPermutationOrder) + " vertices");
  }
  std::uint32_t bits = g.order() < 2 ? 0 : PermutationSearch(g).run();
  CanonicalKey key;
  key.bytes += 'G';
  key.bytes += static_cast<char>(g.order());
  for (int shift = 24; shift >= 0; shift -= 8) key.bytes += static_cast<char>((bits >> shift) & 0xff);
  return key;
}

namespace {

void collect_levels(const Graph& t, int v, int parent, int depth, std::vector<int>& out) {
  std::vector<std::vector<int>> children;
  for (int w : t.neighbors(v)) {
    if (w == parent) continue;
    std::vector<int> sub;
    collect_levels(t, w, v, depth + 1, sub);
    children.push_back(std::move(sub));
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  out.push_back(depth);
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
}

}  // namespace

std::vector<int> canonical_level_sequence(const Graph& tree, int root) {
  std::vector<int> out;
  out.reserve(tree.order());
  collect_levels(tree, root, -1, 0, out);
  return out;
}

std::vector<int> tree_centroids(const Graph& tree) {
  if (!tree.is_tree()) throw GraphError("centroid: graph is not a tree");
  const int n = tree.order();
  if (n == 0) return {};
  // Iterative DFS for subtree sizes rooted at 0.
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[parent[*it]] += size[*it];
  }
  std::vector<int> centroids;
  for (int v = 0; v < n; ++v) {
    int largest = n - size[v];
    for (int w : tree.neighbors(v)) {
      if (parent[w] == v) largest = std::max(largest, size[w]);
    }
    if (2 * largest <= n) centroids.push_back(v);
  }
  return centroids;
}

CanonicalKey tree_key(const Graph& g) {
  auto centroids = tree_centroids(g);
  std::vector<int> best;
  for (int c : centroids) {
    auto seq = canonical_level_sequence(g, c);
    if (best.empty() || seq < best) best = std::move(seq);
  }
  CanonicalKey key;
  key.bytes += 'T';
  key.bytes += static_cast<char>(g.order());
  for (int level : best) key.bytes += static_cast<char>(level);
  return key;
}

CanonicalKey canonical_key(const Graph& g) {
  if (g.order() > 0 && g.is_tree()) return tree_key(g);
  if (g.order() > kMaxPermutationOrder) {
    throw GraphError("canonical key: non-tree graphs are limited to " +
                     std::to_string(kMaxPermutationOrder) + " vertices");
  }
  return permutation_key(g);
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<int> last_at_depth;
  for (int i = 0; i < n; ++i) {
    int d = levels[i];
    if (i == 0 ? d != 0 : (d < 1 || d > static_cast<int>(last_at_depth.size()))) {
      throw GraphError("invalid level sequence");
    }
    if (d > 0) edges.push_back({last_at_depth[d - 1], i});
    last_at_depth.resize(d);
    last_at_depth.push_back(i);
  }
  return Graph(n, std::move(edges));
}

}  // namespace spti
