#pragma once

#include <string>

namespace lspace {

/// Classification outcome for a surgery or a plumbed 3-manifold.
/// BoundaryCase is only produced by the torus classifier when some surgery
/// coefficient equals pq +- 1; Unknown only by the graph oracle outside its
/// decidable classes.
enum class Verdict { LSpace, NotLSpace, NotQHS, BoundaryCase, Unknown };

std::string to_string(Verdict v);

} // namespace lspace
