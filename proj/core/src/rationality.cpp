#include "lspace/rationality.hpp"

#include "lspace/errors.hpp"

namespace lspace {

namespace {

Int pairing(const PlumbingGraph& g, const Cycle& z, int v) {
    Int s = z.at(v) * g.weight(v);
    for (int u : g.neighbors(v))
        s += z.at(u);
    return s;
}

} // namespace

Cycle fundamental_cycle(const PlumbingGraph& g) {
    if (g.empty())
        throw domain_error("fundamental_cycle: empty graph");
    if (!is_connected(g))
        throw domain_error("fundamental_cycle: graph not connected");
    if (!is_negative_definite(g))
        throw domain_error("fundamental_cycle: graph not negative definite");

    Cycle z;
    for (const auto& v : g.vertices)
        z[v.id] = 1;
    for (;;) {
        bool bumped = false;
        for (const auto& v : g.vertices) {
            if (pairing(g, z, v.id) > 0) {
                z[v.id] += 1;
                bumped = true;
                break; // restart at the lowest id
            }
        }
        if (!bumped)
            return z;
    }
}

Int euler_characteristic(const PlumbingGraph& g, const Cycle& z) {
    Int zz = 0, zk = 0;
    for (const auto& v : g.vertices) {
        auto it = z.find(v.id);
        if (it == z.end())
            throw domain_error("euler_characteristic: cycle not supported on graph");
        zz += it->second * pairing(g, z, v.id);
        zk += it->second * Int(-v.weight - 2);
    }
    Int twice = -(zz + zk);
    if (twice % 2 != 0)
        throw domain_error("euler_characteristic: odd pairing (adjunction violated)");
    return twice / 2;
}

bool is_rational(const PlumbingGraph& g) {
    for (const auto& comp : split_components(g)) {
        Cycle z = fundamental_cycle(comp);
        if (euler_characteristic(comp, z) != 1)
            return false;
    }
    return true;
}

ValencyBounds valency_bounds(const PlumbingGraph& g) {
    bool minimal = true;
    for (const auto& v : g.vertices) {
        long long w = -v.weight;
        long long gamma = g.valency(v.id);
        if (w < gamma - 1)
            return ValencyBounds::FailsNecessary;
        if (w < gamma)
            minimal = false;
    }
    return minimal ? ValencyBounds::MinimalRational : ValencyBounds::Indeterminate;
}

std::string to_string(ValencyBounds v) {
    switch (v) {
    case ValencyBounds::FailsNecessary:
        return "FAILS_NECESSARY";
    case ValencyBounds::MinimalRational:
        return "MINIMAL_RATIONAL";
    case ValencyBounds::Indeterminate:
        return "INDETERMINATE";
    }
    return "?";
}

} // namespace lspace
