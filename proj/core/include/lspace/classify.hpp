#pragma once

#include "lspace/graph.hpp"
#include "lspace/seifert.hpp"
#include "lspace/surgery.hpp"
#include "lspace/verdict.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace lspace {

/// Determinant of the surgery linking matrix: diagonal d_i, off-diagonal pq.
/// Zero exactly when the surgery space is not a rational homology sphere.
Int linking_det(const SurgerySpec& spec);

/// The torus-link surgery classifier. With k_i = d_i - pq:
///   any |k_i| = 1                 -> BoundaryCase (excluded from the theorem)
///   two or more k_i = 0           -> NotQHS
///   exactly one k_i = 0           -> LSpace (connected sum of lens spaces)
///   all k_i >= 2                  -> LSpace
///   all k_i <= -2                 -> LSpace iff max k_i >= -(p+q),
///                                    NotQHS first if the linking det vanishes
///   mixed signs                   -> NotLSpace (NotQHS if the det vanishes)
Verdict classify_torus(const SurgerySpec& spec);

/// General graph oracle: normalize, split into connected summands, then per
/// component use rationality (negative definite case) or the Seifert L-space
/// test (star-shaped case). NotQHS dominates, then Unknown; otherwise LSpace
/// iff every component is one. Honest Unknown outside the decidable classes.
Verdict is_lspace_oracle(const PlumbingGraph& g);

/// Consistency report between the classifier and the graph oracle.
struct CrossReport {
    SurgerySpec spec;
    Verdict torus = Verdict::Unknown;
    Verdict oracle = Verdict::Unknown;
    bool agree = false;
    Int linking_determinant;
    HomologyOrder h1 = HomologyOrder::infinite();
    std::vector<Fraction> seifert_fibers;      // raw surgery-star fibers, if star-shaped
    std::optional<bool> farey_neighbors;       // cusp fibers a/p, b/q with |aq - bp| = 1
};

CrossReport cross_validate(const SurgerySpec& spec);

/// r = 2 verdict grid over d_1, d_2 in [lo, hi].
struct AtlasGrid {
    long long p = 0, q = 0;
    long long lo = 0, hi = 0;
    bool boundary_resolved = false;
    std::vector<Verdict> cells;      // row-major, d_1 rows, d_2 columns
    std::vector<HomologyOrder> h1;

    long long side() const { return hi - lo + 1; }
    const Verdict& at(long long d1, long long d2) const;
};

AtlasGrid atlas(long long p, long long q, long long lo, long long hi,
                bool resolve_boundary = false);

/// CSV: header d1,d2,verdict,h1; verdicts LSPACE|NOT_LSPACE|NOT_QHS|BOUNDARY,
/// h1 "inf" for the infinite value.
void write_csv(const AtlasGrid& grid, std::ostream& os);

/// Plain PGM (P2), one gray level per verdict, d_2 left-to-right and d_1
/// top-to-bottom; levels documented in the header comment.
void write_pgm(const AtlasGrid& grid, std::ostream& os);

} // namespace lspace
