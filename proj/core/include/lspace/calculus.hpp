#pragma once

#include "lspace/graph.hpp"

#include <cstdint>
#include <variant>

namespace lspace {

/// Where a blow-up happens: on a vertex or on an existing edge.
struct AtVertex {
    int id;
};
struct AtEdge {
    int a, b;
};
using MoveSite = std::variant<AtVertex, AtEdge>;

/// Blow-up move. AtVertex(v): weight(v) -= 1, new (-1) leaf attached to v.
/// AtEdge(u,v): both weights -= 1, edge replaced by u - n - v with n = -1.
PlumbingGraph blow_up(const PlumbingGraph& g, const MoveSite& site);

/// Same move on a decorated graph; arrowheads stay where they are.
DecoratedGraph blow_up(const DecoratedGraph& g, const MoveSite& site);

/// Blow-down of a (-1)-vertex of valency <= 2: the vertex is removed, each
/// neighbor weight += 1, and valency-2 neighbors become adjacent.
PlumbingGraph blow_down(const PlumbingGraph& g, int v);
DecoratedGraph blow_down(const DecoratedGraph& g, int v);

/// Fixed point of the rewrite system
///   R2  weight-0 leaf and its supporting neighbor are deleted together,
///   R1  a leaf of weight >= 1 triggers blow-up of its incident edge,
///   R3  a (-1)-vertex of valency <= 2 whose neighbors all have weight <= -1
///       is blown down,
///   R4  a weight-0 vertex of valency 2 with neighbors of weight <= 0 is
///       absorbed (neighbors merged, weights added),
/// applied in the priority order R2 > R1 > R3 > R4 with lowest-vertex-id
/// tie-breaking. |det| (and hence h1_order) is invariant under every step.
///
/// The guards keep the system terminating and inside the class: an
/// unrestricted R3 next to a positive leaf undoes R1's progress, and an
/// unrestricted R4 can fold a positive leaf into an interior vertex. With
/// them, the pair (sum of positive leaf weights, vertex count) drops
/// lexicographically at every step, and no rewrite ever creates a positive
/// vertex of valency >= 2.
///
/// Throws domain_error when a positive-weight vertex of valency >= 2 shows up
/// (outside the supported class).
PlumbingGraph normalize(const PlumbingGraph& g);

/// True iff repeated blow-downs of (-1)-vertices of valency <= 2 reach the
/// empty graph. Such graphs represent S^3.
bool is_smooth_graph(const PlumbingGraph& g);

/// Deterministic pseudo-random smooth graph: `steps` blow-ups starting from a
/// single (-1)-vertex, then `arrows` arrowheads on random vertices. The
/// underlying graph always satisfies is_smooth_graph and |det| = 1.
DecoratedGraph random_smooth_decorated(std::uint64_t seed, int steps, int arrows);

} // namespace lspace
