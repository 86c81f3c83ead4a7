#include "lspace/calculus.hpp"

#include "lspace/errors.hpp"

#include <algorithm>
#include <random>

namespace lspace {

PlumbingGraph blow_up(const PlumbingGraph& g, const MoveSite& site) {
    PlumbingGraph out = g;
    int n = out.fresh_id();
    if (const auto* v = std::get_if<AtVertex>(&site)) {
        if (!out.has_vertex(v->id))
            throw domain_error("blow_up: unknown vertex " + std::to_string(v->id));
        out.set_weight(v->id, out.weight(v->id) - 1);
        out.add_vertex(n, -1);
        out.add_edge(v->id, n);
    } else {
        const auto& e = std::get<AtEdge>(site);
        if (!out.has_edge(e.a, e.b))
            throw domain_error("blow_up: no edge " + std::to_string(e.a) + "-" +
                               std::to_string(e.b));
        out.set_weight(e.a, out.weight(e.a) - 1);
        out.set_weight(e.b, out.weight(e.b) - 1);
        out.remove_edge(e.a, e.b);
        out.add_vertex(n, -1);
        out.add_edge(e.a, n);
        out.add_edge(e.b, n);
    }
    return out;
}

DecoratedGraph blow_up(const DecoratedGraph& g, const MoveSite& site) {
    return DecoratedGraph{blow_up(g.graph, site), g.arrows};
}

PlumbingGraph blow_down(const PlumbingGraph& g, int v) {
    if (!g.has_vertex(v))
        throw domain_error("blow_down: unknown vertex " + std::to_string(v));
    if (g.weight(v) != -1)
        throw domain_error("blow_down: vertex weight is not -1");
    auto nbrs = g.neighbors(v);
    if (nbrs.size() > 2)
        throw domain_error("blow_down: valency exceeds 2");
    PlumbingGraph out = g;
    out.remove_vertex(v);
    for (int u : nbrs)
        out.set_weight(u, out.weight(u) + 1);
    if (nbrs.size() == 2)
        out.add_edge(nbrs[0], nbrs[1]);
    return out;
}

DecoratedGraph blow_down(const DecoratedGraph& g, int v) {
    if (g.arrows_at(v) > 0)
        throw domain_error("blow_down: vertex carries arrowheads");
    return DecoratedGraph{blow_down(g.graph, v), g.arrows};
}

namespace {

bool is_leaf(const PlumbingGraph& g, int id) { return g.valency(id) == 1; }

// R2: weight-0 leaf; deleted together with its supporting neighbor.
std::optional<int> find_r2(const PlumbingGraph& g) {
    for (const auto& v : g.vertices)
        if (v.weight == 0 && is_leaf(g, v.id))
            return v.id;
    return std::nullopt;
}

// R3: (-1)-vertex of valency <= 2, all neighbors of weight <= -1.
std::optional<int> find_r3(const PlumbingGraph& g) {
    for (const auto& v : g.vertices) {
        if (v.weight != -1 || g.valency(v.id) > 2)
            continue;
        bool ok = true;
        for (int u : g.neighbors(v.id))
            if (g.weight(u) >= 0)
                ok = false;
        if (ok)
            return v.id;
    }
    return std::nullopt;
}

// R4: weight-0 vertex of valency 2, neighbors non-positive.
std::optional<int> find_r4(const PlumbingGraph& g) {
    for (const auto& v : g.vertices) {
        if (v.weight != 0 || g.valency(v.id) != 2)
            continue;
        bool ok = true;
        for (int u : g.neighbors(v.id))
            if (g.weight(u) >= 1)
                ok = false;
        if (ok)
            return v.id;
    }
    return std::nullopt;
}

// R1: leaf of weight >= 1.
std::optional<int> find_r1(const PlumbingGraph& g) {
    for (const auto& v : g.vertices)
        if (v.weight >= 1 && is_leaf(g, v.id))
            return v.id;
    return std::nullopt;
}

} // namespace

PlumbingGraph normalize(const PlumbingGraph& g) {
    PlumbingGraph cur = g;
    for (;;) {
        for (const auto& v : cur.vertices)
            if (v.weight >= 1 && cur.valency(v.id) >= 2)
                throw domain_error("normalize: positive-weight vertex of valency >= 2");

        if (auto v = find_r2(cur)) {
            int support = cur.neighbors(*v)[0];
            cur.remove_vertex(*v);
            cur.remove_vertex(support);
            continue;
        }
        if (auto v = find_r1(cur)) {
            int support = cur.neighbors(*v)[0];
            cur = blow_up(cur, AtEdge{support, *v});
            continue;
        }
        if (auto v = find_r3(cur)) {
            cur = blow_down(cur, *v);
            continue;
        }
        if (auto v = find_r4(cur)) {
            auto nbrs = cur.neighbors(*v);
            int keep = nbrs[0], fold = nbrs[1];
            long long merged = cur.weight(keep) + cur.weight(fold);
            auto fold_nbrs = cur.neighbors(fold);
            cur.remove_vertex(*v);
            cur.remove_vertex(fold);
            cur.set_weight(keep, merged);
            for (int u : fold_nbrs)
                if (u != *v)
                    cur.add_edge(keep, u);
            continue;
        }
        return cur;
    }
}

bool is_smooth_graph(const PlumbingGraph& g) {
    PlumbingGraph cur = g;
    for (;;) {
        if (cur.empty())
            return true;
        std::optional<int> site;
        for (const auto& v : cur.vertices)
            if (v.weight == -1 && cur.valency(v.id) <= 2) {
                site = v.id;
                break;
            }
        if (!site)
            return false;
        cur = blow_down(cur, *site);
    }
}

DecoratedGraph random_smooth_decorated(std::uint64_t seed, int steps, int arrows) {
    if (steps < 0 || arrows < 0)
        throw domain_error("random_smooth_decorated: negative parameters");
    std::mt19937_64 rng(seed);
    PlumbingGraph g;
    g.add_vertex(0, -1);
    for (int s = 0; s < steps; ++s) {
        bool at_edge = !g.edges.empty() && rng() % 2 == 0;
        if (at_edge) {
            const auto& e = g.edges[rng() % g.edges.size()];
            g = blow_up(g, AtEdge{e.first, e.second});
        } else {
            int v = g.vertices[rng() % g.size()].id;
            g = blow_up(g, AtVertex{v});
        }
    }
    DecoratedGraph out{std::move(g), {}};
    for (int a = 0; a < arrows; ++a) {
        int v = out.graph.vertices[rng() % out.graph.size()].id;
        out.arrows[v] += 1;
    }
    return out;
}

} // namespace lspace
