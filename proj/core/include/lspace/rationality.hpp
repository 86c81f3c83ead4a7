#pragma once

#include "lspace/graph.hpp"

#include <map>

namespace lspace {

/// Vertex-coefficient vector of a cycle supported on a graph.
using Cycle = std::map<int, Int>;

/// Laufer's fundamental cycle Z_min of a connected negative definite graph:
/// start from the all-ones cycle and add E_v while some (Z, E_v) > 0 (lowest
/// id first). The result is independent of the choice order.
Cycle fundamental_cycle(const PlumbingGraph& g);

/// chi(Z) = -(Z^2 + Z.K)/2 with (K, E_v) = -weight(v) - 2 for genus-0 vertices.
Int euler_characteristic(const PlumbingGraph& g, const Cycle& z);

/// Artin's criterion: every component has chi(Z_min) = 1.
/// Requires each component to be negative definite.
bool is_rational(const PlumbingGraph& g);

/// Valency/weight pre-filters from Laufer's criterion. With w(v) = -weight and
/// gamma(v) the valency: rational graphs satisfy w >= gamma - 1 everywhere,
/// and w >= gamma everywhere is sufficient ("minimal rational").
enum class ValencyBounds { FailsNecessary, MinimalRational, Indeterminate };

ValencyBounds valency_bounds(const PlumbingGraph& g);

std::string to_string(ValencyBounds v);

} // namespace lspace
