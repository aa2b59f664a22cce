#include "spti/planarity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spti {

namespace {

struct Core {
  std::vector<std::vector<int>> adj;  // compacted simple graph, min degree >= 3
  int edges = 0;
  int components = 0;
};

Core reduce(const Graph& g) {
  const int n = g.order();
  std::vector<std::set<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (int w : nb) adj[w].erase(v);
      adj[v].clear();
      alive[v] = 0;
      // Smoothing a degree-2 vertex; a parallel edge collapses into the existing one.
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      changed = true;
    }
  }
  std::vector<int> index(n, -1);
  int kept = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) index[v] = kept++;
  Core core;
  core.adj.resize(kept);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int w : adj[v]) core.adj[index[v]].push_back(index[w]);
    core.edges += static_cast<int>(adj[v].size());
  }
  core.edges /= 2;

  std::vector<int> comp(kept, -1);
  for (int s = 0; s < kept; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = core.components;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : core.adj[v]) {
        if (comp[w] < 0) {
          comp[w] = core.components;
          stack.push_back(w);
        }
      }
    }
    ++core.components;
  }
  return core;
}

class RotationSearch {
 public:
  explicit RotationSearch(Core core) : core_(std::move(core)) {
    const int n = static_cast<int>(core_.adj.size());
    dart_offset_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) dart_offset_[v + 1] = dart_offset_[v] + static_cast<int>(core_.adj[v].size());
  }

  bool has_planar_embedding() {
    const int n = static_cast<int>(core_.adj.size());
    const int target_faces = 2 * core_.components - n + core_.edges;
    rotation_ = core_.adj;
    return search(0, target_faces);
  }

 private:
  bool search(int v, int target_faces) {
    if (v == static_cast<int>(rotation_.size())) return count_faces() == target_faces;
    auto& rot = rotation_[v];
    // Cyclic orders: keep the first neighbour fixed and permute the rest.
    std::sort(rot.begin() + 1, rot.end());
    do {
      if (search(v + 1, target_faces)) return true;
    } while (std::next_permutation(rot.begin() + 1, rot.end()));
    return false;
  }

  int position_in(int v, int w) const {
    const auto& rot = rotation_[v];
    return static_cast<int>(std::find(rot.begin(), rot.end(), w) - rot.begin());
  }

  int count_faces() {
    const int darts = dart_offset_.back();
    std::vector<char> used(darts, 0);
    int faces = 0;
    for (int u = 0; u < static_cast<int>(rotation_.size()); ++u) {
      for (int k = 0; k < static_cast<int>(rotation_[u].size()); ++k) {
        if (used[dart_offset_[u] + k]) continue;
        ++faces;
        int a = u;
        int idx = k;
        while (!used[dart_offset_[a] + idx]) {
          used[dart_offset_[a] + idx] = 1;
          int b = rotation_[a][idx];
          const auto& rot_b = rotation_[b];
          int back = position_in(b, a);
          idx = (back + 1) % static_cast<int>(rot_b.size());
          a = b;
        }
      }
    }
    return faces;
  }

  Core core_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> dart_offset_;
};

}  // namespace

bool is_planar(const Graph& g) {
  Core core = reduce(g);
  const int n = static_cast<int>(core.adj.size());
  if (n <= 4) return true;
  if (core.edges > 3 * n - 6) return false;
  return RotationSearch(std::move(core)).has_planar_embedding();
}

}  // namespace spti
