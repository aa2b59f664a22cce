#ifndef SPTI_ENUMERATION_HPP
#define SPTI_ENUMERATION_HPP

#include <stdexcept>
#include <vector>

#include "spti/canonical.hpp"
#include "spti/graph.hpp"

namespace spti {

struct EnumerationResult {
  std::vector<Graph> graphs;
  std::vector<CanonicalKey> keys;

  std::size_t count() const noexcept { return graphs.size(); }
};

/// Every free tree on n vertices with maximum degree <= 4, once each, sorted
/// by canonical key. 1 <= n <= 12.
///
/// Trees are built rooted at their centroid: a unicentroidal tree is a root
/// with at most four branches of size < n/2; a bicentroidal tree (n even) is an
/// unordered pair of rooted trees of size n/2 joined at their roots. Within a
/// multiset of branches the branches are taken in non-increasing catalogue
/// order, so no tree is produced twice.
EnumerationResult enumerate_alkane_trees(int n);

/// Connected planar graphs on n vertices with maximum degree <= 4 and at least
/// one cycle, once each, sorted by ascending EE then canonical key. 3 <= n <= 7.
///
/// The labeled search runs over adjacency masks whose vertex degrees are
/// non-increasing in vertex index (every isomorphism class has such a
/// labeling); masks are split across OpenMP threads and merged through the
/// canonical key.
EnumerationResult enumerate_cyclic_chemical_graphs(int n);

/// Single-threaded reference for enumerate_cyclic_chemical_graphs.
EnumerationResult enumerate_cyclic_chemical_graphs_serial(int n);

}  // namespace spti

#endif  // SPTI_ENUMERATION_HPP
