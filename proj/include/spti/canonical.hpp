#ifndef SPTI_CANONICAL_HPP
#define SPTI_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "spti/graph.hpp"

namespace spti {

/// Label-independent encoding of a graph: two graphs have equal keys exactly
/// when they are isomorphic.
///
/// Trees are encoded as 'T', n, then the canonical level sequence rooted at a
/// centroid. Other graphs (n <= 8) are encoded as 'G', n, then the minimal
/// upper-triangular adjacency bit string, packed big-endian.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr int kMaxPermutationOrder = 8;

/// Tree path for trees, permutation path for everything else.
/// Throws GraphError for a non-tree with more than kMaxPermutationOrder vertices.
CanonicalKey canonical_key(const Graph& g);

/// Minimal bit string over all vertex orderings that respect the (isomorphism
/// invariant) colour-refined partition. Works for any graph with n <= 8.
CanonicalKey permutation_key(const Graph& g);

/// Centroid-rooted minimal level sequence. Requires a tree.
CanonicalKey tree_key(const Graph& g);

/// Level sequence (preorder depths, root depth 0) of the tree rooted at `root`,
/// with children ordered so the sequence is lexicographically largest.
std::vector<int> canonical_level_sequence(const Graph& tree, int root);

/// One or two centroids of a tree, ascending.
std::vector<int> tree_centroids(const Graph& tree);

/// Tree built from a level sequence (vertex i is the i-th entry).
Graph tree_from_level_sequence(const std::vector<int>& levels);

}  // namespace spti

#endif  // SPTI_CANONICAL_HPP
