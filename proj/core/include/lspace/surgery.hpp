#pragma once

#include "lspace/graph.hpp"

#include <map>
#include <vector>

namespace lspace {

/// Decorated resolution graph with the branch multiplicities at the
/// arrow-supporting vertices.
struct ResolutionData {
    DecoratedGraph decorated;
    std::map<int, Int> multiplicity; // arrow vertex i -> m_i
};

/// Torus-link surgery parameters: (d_1, ..., d_r)-surgery on the (pr, qr)
/// torus link, gcd(p, q) = 1, p, q > 1.
struct SurgerySpec {
    long long p = 0;
    long long q = 0;
    std::vector<long long> d;

    int r() const { return static_cast<int>(d.size()); }
};

void validate(const SurgerySpec& spec);

/// Minimal embedded resolution of the (p,q) cusp, built by simulating the
/// blow-up sequence along the Euclidean algorithm on (p, q), with r
/// arrowheads on the unique (-1)-vertex. Postconditions checked: the
/// underlying graph is smooth and unimodular, and the arrow-vertex
/// multiplicity is pq.
ResolutionData torus_resolution(long long p, long long q, int r);

/// Exact solution m of I m = -e_v for the branch supported at vertex v (the
/// multiplicities of the pullback of the branch equation on each divisor).
/// Throws on a singular intersection matrix and on non-integral solutions.
std::map<int, Int> multiplicities(const PlumbingGraph& g, int vertex);

/// Computes branch multiplicities for every arrowed vertex of a decorated
/// graph (the generic entry point for surgeries on arbitrary decorated links).
ResolutionData make_resolution(const DecoratedGraph& dg);

/// Surgery plumbing graph: every arrowhead on E_i becomes a new leaf of
/// weight k_ij = d_ij - m_i. Coefficients match arrowheads in ascending
/// vertex-id order, one per arrowhead.
PlumbingGraph surgery_graph(const ResolutionData& res, const std::vector<long long>& d);

/// Linking matrix of the decorated link: diagonal d, off-diagonal pairwise
/// linking numbers read from the multiplicity solutions.
std::vector<std::vector<Int>> linking_matrix(const ResolutionData& res,
                                             const std::vector<long long>& d);

/// The E8 plumbing (all weights -2): minimal negative definite graph of the
/// Poincare sphere Sigma(2,3,5).
PlumbingGraph poincare_graph();

} // namespace lspace
