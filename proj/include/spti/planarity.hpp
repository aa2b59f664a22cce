#ifndef SPTI_PLANARITY_HPP
#define SPTI_PLANARITY_HPP

#include "spti/graph.hpp"

namespace spti {

/// Exact planarity test for small graphs.
///
/// Vertices of degree <= 2 are reduced away first (planarity is unchanged by
/// pruning leaves and smoothing degree-2 vertices), then every rotation system
/// of the remaining core is tried until one traces enough faces to satisfy
/// Euler's formula V - E + F = 2 per component. Intended for n <= 8.
bool is_planar(const Graph& g);

}  // namespace spti

#endif  // SPTI_PLANARITY_HPP
