#include "lspace/surgery.hpp"

#include "lspace/calculus.hpp"
#include "lspace/errors.hpp"
#include "lspace/fraction.hpp"

#include <numeric>

namespace lspace {

void validate(const SurgerySpec& spec) {
    if (spec.p <= 1 || spec.q <= 1)
        throw domain_error("surgery spec: p and q must exceed 1");
    if (std::gcd(spec.p, spec.q) != 1)
        throw domain_error("surgery spec: p and q must be coprime");
    if (spec.d.empty())
        throw domain_error("surgery spec: at least one coefficient required");
}

ResolutionData torus_resolution(long long p, long long q, int r) {
    if (p <= 1 || q <= 1 || std::gcd(p, q) != 1)
        throw domain_error("torus_resolution: need coprime p, q > 1");
    if (r < 1)
        throw domain_error("torus_resolution: need r >= 1");

    // Blow up the infinitely near points of x^p + y^q along the subtractive
    // Euclidean algorithm. (u, v) are the divisor curves through the current
    // point (-1 when absent), (eu, ev) the germ exponents along them.
    PlumbingGraph g;
    int u = -1, v = -1;
    long long eu = p, ev = q;
    int arrow_vertex = -1;
    for (;;) {
        int w = g.fresh_id();
        g.add_vertex(w, -1);
        if (u >= 0) {
            g.set_weight(u, g.weight(u) - 1);
            g.add_edge(u, w);
        }
        if (v >= 0) {
            g.set_weight(v, g.weight(v) - 1);
            g.add_edge(v, w);
        }
        if (u >= 0 && v >= 0)
            g.remove_edge(u, v); // satellite point: the two curves separate
        if (eu == ev) { // both are 1: the strict transform is now transverse
            arrow_vertex = w;
            break;
        }
        if (eu > ev) {
            eu -= ev;
            u = w;
        } else {
            ev -= eu;
            v = w;
        }
    }

    ResolutionData res;
    res.decorated.graph = g;
    res.decorated.arrows[arrow_vertex] = r;
    Int m = multiplicities(g, arrow_vertex).at(arrow_vertex);
    res.multiplicity[arrow_vertex] = m;

    if (!is_smooth_graph(g) || h1_order(g) != HomologyOrder::finite(1) || m != Int(p) * q)
        throw std::logic_error("torus_resolution: postcondition failed");
    return res;
}

std::map<int, Int> multiplicities(const PlumbingGraph& g, int vertex) {
    if (!g.has_vertex(vertex))
        throw domain_error("multiplicities: unknown vertex");
    IntersectionMatrix m = intersection_matrix(g);
    std::size_t n = m.size();

    // exact Gaussian elimination over rationals on [I | -e_v]
    std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Fraction(m.a[i][j]);
        a[i][n] = Fraction(m.ids[i] == vertex ? -1 : 0);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero())
            ++piv;
        if (piv == n)
            throw domain_error("multiplicities: singular intersection matrix "
                               "(graph not negative definite)");
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero())
                continue;
            Fraction f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j)
                a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    std::map<int, Int> out;
    for (std::size_t i = 0; i < n; ++i) {
        Fraction mi = a[i][n] / a[i][i];
        if (!mi.is_integer())
            throw domain_error("multiplicities: non-integral solution "
                               "(graph not unimodular along this branch)");
        out[m.ids[i]] = mi.num();
    }
    return out;
}

ResolutionData make_resolution(const DecoratedGraph& dg) {
    ResolutionData res;
    res.decorated = dg;
    for (const auto& [v, count] : dg.arrows) {
        if (count <= 0)
            continue;
        res.multiplicity[v] = multiplicities(dg.graph, v).at(v);
    }
    return res;
}

namespace {

// arrowhead slots in vertex-id-then-declaration order
std::vector<int> arrow_slots(const DecoratedGraph& dg) {
    std::vector<int> slots;
    for (const auto& [v, count] : dg.arrows)
        for (int i = 0; i < count; ++i)
            slots.push_back(v);
    return slots;
}

} // namespace

PlumbingGraph surgery_graph(const ResolutionData& res, const std::vector<long long>& d) {
    auto slots = arrow_slots(res.decorated);
    if (slots.size() != d.size())
        throw domain_error("surgery_graph: " + std::to_string(slots.size()) +
                           " arrowheads but " + std::to_string(d.size()) + " coefficients");
    PlumbingGraph g = res.decorated.graph;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Int k = Int(d[i]) - res.multiplicity.at(slots[i]);
        int leaf = g.fresh_id();
        g.add_vertex(leaf, static_cast<long long>(k));
        g.add_edge(slots[i], leaf);
    }
    return g;
}

std::vector<std::vector<Int>> linking_matrix(const ResolutionData& res,
                                             const std::vector<long long>& d) {
    auto slots = arrow_slots(res.decorated);
    if (slots.size() != d.size())
        throw domain_error("linking_matrix: arity mismatch");
    std::map<int, std::map<int, Int>> mult; // per arrow vertex
    for (const auto& [v, _] : res.multiplicity)
        mult[v] = multiplicities(res.decorated.graph, v);
    std::size_t n = slots.size();
    std::vector<std::vector<Int>> lk(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lk[i][j] = (i == j) ? Int(d[i]) : mult.at(slots[j]).at(slots[i]);
    return lk;
}

PlumbingGraph poincare_graph() {
    // E8 tree: chain 0-...-6 with 7 attached to the trivalent node 4
    PlumbingGraph g = make_chain({-2, -2, -2, -2, -2, -2, -2});
    g.add_vertex(7, -2);
    g.add_edge(4, 7);
    return g;
}

} // namespace lspace
