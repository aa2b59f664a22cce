#include "spti/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spti/indices.hpp"
#include "spti/planarity.hpp"

namespace spti {

namespace {

using LevelSeq = std::vector<int>;

constexpr int kMaxDegree = 4;

// Rooted trees, indexed by size, whose every vertex (root included) has at
// most kMaxDegree - 1 children: the shapes that can hang below a parent.
class BranchCatalogue {
 public:
  explicit BranchCatalogue(int max_size) : by_size_(max_size + 1) {
    if (max_size >= 1) by_size_[1].push_back({0});
    for (int s = 2; s <= max_size; ++s) {
      std::vector<std::pair<int, int>> picked;
      for_each_multiset(s - 1, kMaxDegree - 1, s - 1, INT32_MAX, picked,
                        [&](const std::vector<std::pair<int, int>>& kids) { by_size_[s].push_back(join(kids)); });
    }
  }

  const std::vector<LevelSeq>& of_size(int s) const { return by_size_[s]; }

  LevelSeq join(const std::vector<std::pair<int, int>>& kids) const {
    LevelSeq seq{0};
    for (auto [size, idx] : kids) {
      for (int level : by_size_[size][idx]) seq.push_back(level + 1);
    }
    return seq;
  }

  // Visits every multiset of catalogue entries with total size `remaining`,
  // at most `slots` members, each of size <= max_size; members are produced in
  // non-increasing (size, index) order so each multiset appears once.
  template <typename Visit>
  void for_each_multiset(int remaining, int slots, int max_size, int max_index,
                         std::vector<std::pair<int, int>>& picked, Visit&& visit) const {
    if (remaining == 0) {
      visit(picked);
      return;
    }
    if (slots == 0) return;
    for (int size = std::min(max_size, remaining); size >= 1; --size) {
      const auto& bucket = by_size_[size];
      int top = size == max_size ? std::min<int>(max_index, static_cast<int>(bucket.size()) - 1)
                                 : static_cast<int>(bucket.size()) - 1;
      for (int idx = top; idx >= 0; --idx) {
        picked.emplace_back(size, idx);
        for_each_multiset(remaining - size, slots - 1, size, idx, picked, visit);
        picked.pop_back();
      }
    }
  }

 private:
  std::vector<std::vector<LevelSeq>> by_size_;
};

void sort_by_key(EnumerationResult& r) {
  std::vector<std::size_t> order(r.graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return r.keys[a] < r.keys[b]; });
  EnumerationResult sorted;
  for (auto i : order) {
    sorted.graphs.push_back(std::move(r.graphs[i]));
    sorted.keys.push_back(std::move(r.keys[i]));
  }
  r = std::move(sorted);
}

}  // namespace

EnumerationResult enumerate_alkane_trees(int n) {
  if (n < 1 || n > 12) throw std::out_of_range("enumerate_alkane_trees: n must lie in [1, 12]");
  BranchCatalogue cat(n);
  EnumerationResult out;
  auto emit = [&](const LevelSeq& seq) {
    Graph g = tree_from_level_sequence(seq);
    out.keys.push_back(tree_key(g));
    out.graphs.push_back(std::move(g));
  };

  // Unicentroidal: every branch strictly smaller than n/2.
  std::vector<std::pair<int, int>> picked;
  cat.for_each_multiset(n - 1, kMaxDegree, (n - 1) / 2, INT32_MAX, picked,
                        [&](const std::vector<std::pair<int, int>>& kids) { emit(cat.join(kids)); });

  // Bicentroidal: two halves of size n/2 joined root to root.
  if (n % 2 == 0) {
    const auto& halves = cat.of_size(n / 2);
    for (std::size_t a = 0; a < halves.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        LevelSeq seq = halves[a];
        for (int level : halves[b]) seq.push_back(level + 1);
        emit(seq);
      }
    }
  }
  sort_by_key(out);
  return out;
}

namespace {

struct PairTable {
  explicit PairTable(int n) : n(n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        pairs.push_back({i, j});
      }
    }
  }

  int n;
  std::vector<Edge> pairs;
};

// Cheap filters on a labeled mask: at least n edges, degrees non-increasing
// in vertex index and bounded by 4, connected.
bool admissible(const PairTable& t, std::uint32_t mask) {
  if (std::popcount(mask) < t.n) return false;
  std::uint32_t nbr[8] = {};
  for (std::size_t b = 0; b < t.pairs.size(); ++b) {
    if (!(mask >> b & 1)) continue;
    nbr[t.pairs[b].u] |= std::uint32_t{1} << t.pairs[b].v;
    nbr[t.pairs[b].v] |= std::uint32_t{1} << t.pairs[b].u;
  }
  int prev = kMaxDegree;
  for (int v = 0; v < t.n; ++v) {
    int d = std::popcount(nbr[v]);
    if (d > prev || d == 0) return false;
    prev = d;
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < t.n; ++v)
      if (frontier >> v & 1) next |= nbr[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << t.n) - 1;
}

Graph graph_of(const PairTable& t, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < t.pairs.size(); ++b)
    if (mask >> b & 1) edges.push_back(t.pairs[b]);
  return Graph(t.n, std::move(edges));
}

// Canonically labeled representative: decoding the key's bit string gives the
// same graph no matter which labeled copy was found first.
Graph graph_from_key(const CanonicalKey& key) {
  const int n = static_cast<unsigned char>(key.bytes[1]);
  std::uint32_t bits = 0;
  for (int k = 0; k < 4; ++k) bits = (bits << 8) | static_cast<unsigned char>(key.bytes[2 + k]);
  const int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int index = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++index) {
      if (bits >> (total - 1 - index) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

EnumerationResult finish_cyclic(const std::set<CanonicalKey>& found) {
  struct Row {
    double ee;
    CanonicalKey key;
    Graph g;
  };
  std::vector<Row> rows;
  for (const auto& key : found) {
    Graph g = graph_from_key(key);
    if (!is_planar(g)) continue;
    rows.push_back({index_EE(decompose(g)), key, std::move(g)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (std::abs(a.ee - b.ee) > 1e-9 * std::max(1.0, std::abs(a.ee))) return a.ee < b.ee;
    return a.key < b.key;
  });
  EnumerationResult out;
  for (auto& r : rows) {
    out.graphs.push_back(std::move(r.g));
    out.keys.push_back(std::move(r.key));
  }
  return out;
}

void check_cyclic_order(int n) {
  if (n < 3 || n > 7) throw std::out_of_range("enumerate_cyclic_chemical_graphs: n must lie in [3, 7]");
}

}  // namespace

EnumerationResult enumerate_cyclic_chemical_graphs_serial(int n) {
  check_cyclic_order(n);
  PairTable table(n);
  const std::uint64_t limit = std::uint64_t{1} << table.pairs.size();
  std::set<CanonicalKey> found;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto m = static_cast<std::uint32_t>(mask);
    if (admissible(table, m)) found.insert(permutation_key(graph_of(table, m)));
  }
  return finish_cyclic(found);
}

EnumerationResult enumerate_cyclic_chemical_graphs(int n) {
  check_cyclic_order(n);
  PairTable table(n);
  const auto limit = static_cast<long long>(std::uint64_t{1} << table.pairs.size());
  std::set<CanonicalKey> found;
#pragma omp parallel
  {
    std::set<CanonicalKey> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (long long mask = 0; mask < limit; ++mask) {
      auto m = static_cast<std::uint32_t>(mask);
      if (admissible(table, m)) local.insert(permutation_key(graph_of(table, m)));
    }
#pragma omp critical(spti_enumeration_merge)
    found.merge(local);
  }
  return finish_cyclic(found);
}

}  // namespace spti
