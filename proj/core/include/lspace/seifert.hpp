#pragma once

#include "lspace/fraction.hpp"
#include "lspace/graph.hpp"
#include "lspace/verdict.hpp"

#include <optional>
#include <vector>

namespace lspace {

/// Result of locating the star structure of a connected graph.
struct StarShape {
    enum class Kind { Star, Chain, None };
    Kind kind = Kind::None;
    int center = -1; // for chains: the lowest-id vertex, an arbitrary designation
};

/// The unique valency >= 3 vertex when exactly one exists; a designated vertex
/// flagged as chain when there is none; Kind::None with two or more branch
/// vertices. Expects g connected.
StarShape star_center(const PlumbingGraph& g);

/// Normalized Seifert invariants of a star-shaped (or chain) graph.
///
/// Each leg read from the center outward with weights (-a_1, ..., -a_s)
/// contributes the negative continued fraction a_1 - 1/(a_2 - 1/(...)); the
/// fiber invariant is its reciprocal mod 1, integer parts absorbed into the
/// central weight. If the orbifold Euler number comes out positive the
/// orientation is reversed (central -> -central - #fibers, alpha -> 1 - alpha).
/// The central weight is then presented as -1 with one alpha = 1 fiber
/// appended per unit below -1; e_orb records the true (pre-padding) value,
/// which is always negative here.
struct SeifertData {
    long long central = -1;        // always -1 in the stored presentation
    std::vector<Fraction> fibers;  // sorted descending, in [0,1], padding 1s first
    Fraction e_orb;                // orbifold Euler number, < 0
    bool flipped = false;          // true if orientation was reversed
};

/// Extracts SeifertData, or nullopt when e_orb = 0 (not a rational homology
/// sphere). Throws for non-star graphs and for legs that need normalize first.
std::optional<SeifertData> seifert_data(const PlumbingGraph& g);

/// The unique reduced fraction of minimal denominator strictly between lo and
/// hi, by Stern-Brocot descent; nullopt iff lo >= hi.
std::optional<Fraction> min_denominator_fraction(const Fraction& lo, const Fraction& hi);

/// Obstruction witness for the Seifert L-space test.
///
/// For data with central weight -1 (no padding) this is the coprime pair
/// (l, m) with m*alpha_1 < l < m*(1 - alpha_2) and m*alpha_i < 1 for i >= 3,
/// found through the minimal-denominator fraction of (alpha_1, 1 - alpha_2):
/// any other admissible fraction has a denominator >= m, and the side
/// conditions only get harder as m grows.
///
/// Padded data (true central weight c <= -2, say b = -c) falls outside that
/// inequality's hypothesis; there the obstruction is a level m >= 1 with
///     m*b - sum_i ceil(m*alpha_i) <= -2
/// over the unpadded fibers (the central ray of Laufer's algorithm jumps by
/// two), reported as (floor(m*alpha_1) + 1, m). Data with fewer than three
/// unpadded fibers describes a lens space and is never obstructed.
struct LsWitness {
    Int l;
    Int m;
};

std::optional<LsWitness> ls_obstruction(const SeifertData& sd);

/// L-space test for star-shaped graphs and chains: NotQHS when e_orb = 0,
/// LSpace iff no obstruction witness exists. Chains are lens spaces and give
/// LSpace whenever they are rational homology spheres.
Verdict is_lspace_star(const PlumbingGraph& g);

} // namespace lspace
