#include "lspace/graph.hpp"

#include "lspace/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lspace {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

} // namespace

bool PlumbingGraph::has_vertex(int id) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const Vertex& v) { return v.id == id; });
}

long long PlumbingGraph::weight(int id) const {
    for (const Vertex& v : vertices)
        if (v.id == id)
            return v.weight;
    throw domain_error("unknown vertex id " + std::to_string(id));
}

void PlumbingGraph::set_weight(int id, long long w) {
    for (Vertex& v : vertices)
        if (v.id == id) {
            v.weight = w;
            return;
        }
    throw domain_error("unknown vertex id " + std::to_string(id));
}

bool PlumbingGraph::has_edge(int a, int b) const {
    auto e = norm_edge(a, b);
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

int PlumbingGraph::valency(int id) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == id || b == id)
            ++d;
    return d;
}

std::vector<int> PlumbingGraph::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == id)
            out.push_back(b);
        else if (b == id)
            out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int PlumbingGraph::fresh_id() const {
    int next = 0;
    for (const Vertex& v : vertices)
        next = std::max(next, v.id + 1);
    return next;
}

void PlumbingGraph::add_vertex(int id, long long w) {
    if (has_vertex(id))
        throw domain_error("duplicate vertex id " + std::to_string(id));
    auto pos = std::lower_bound(vertices.begin(), vertices.end(), id,
                                [](const Vertex& v, int i) { return v.id < i; });
    vertices.insert(pos, Vertex{id, w});
}

void PlumbingGraph::add_edge(int a, int b) {
    if (a == b)
        throw domain_error("self-loop at vertex " + std::to_string(a));
    if (!has_vertex(a) || !has_vertex(b))
        throw domain_error("edge endpoint not declared");
    auto e = norm_edge(a, b);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw domain_error("duplicate edge");
    edges.insert(std::lower_bound(edges.begin(), edges.end(), e), e);
}

void PlumbingGraph::remove_vertex(int id) {
    auto it = std::find_if(vertices.begin(), vertices.end(),
                           [&](const Vertex& v) { return v.id == id; });
    if (it == vertices.end())
        throw domain_error("unknown vertex id " + std::to_string(id));
    vertices.erase(it);
    std::erase_if(edges, [&](const auto& e) { return e.first == id || e.second == id; });
}

void PlumbingGraph::remove_edge(int a, int b) {
    auto e = norm_edge(a, b);
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        throw domain_error("unknown edge");
    edges.erase(it);
}

void validate(const PlumbingGraph& g) {
    std::set<int> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second)
            throw domain_error("duplicate vertex id " + std::to_string(v.id));
    std::set<std::pair<int, int>> seen;
    // union-find for the forest check
    std::map<int, int> parent;
    for (int id : ids)
        parent[id] = id;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : g.edges) {
        if (a == b)
            throw domain_error("self-loop at vertex " + std::to_string(a));
        if (!ids.count(a) || !ids.count(b))
            throw domain_error("edge references undeclared vertex");
        if (!seen.insert(norm_edge(a, b)).second)
            throw domain_error("duplicate edge");
        int ra = find(a), rb = find(b);
        if (ra == rb)
            throw domain_error("graph contains a cycle");
        parent[ra] = rb;
    }
}

PlumbingGraph make_graph(const std::vector<std::pair<int, long long>>& vertices,
                         const std::vector<std::pair<int, int>>& edges) {
    PlumbingGraph g;
    for (const auto& [id, w] : vertices)
        g.vertices.push_back({id, w});
    std::sort(g.vertices.begin(), g.vertices.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& [a, b] : edges)
        g.edges.push_back(norm_edge(a, b));
    std::sort(g.edges.begin(), g.edges.end());
    validate(g);
    return g;
}

PlumbingGraph make_chain(const std::vector<long long>& weights) {
    PlumbingGraph g;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
        g.vertices.push_back({i, weights[i]});
        if (i > 0)
            g.edges.push_back({i - 1, i});
    }
    return g;
}

PlumbingGraph make_star(long long center, const std::vector<std::vector<long long>>& legs) {
    PlumbingGraph g;
    g.add_vertex(0, center);
    int next = 1;
    for (const auto& leg : legs) {
        int prev = 0;
        for (long long w : leg) {
            g.add_vertex(next, w);
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

int DecoratedGraph::arrow_count() const {
    int n = 0;
    for (const auto& [_, c] : arrows)
        n += c;
    return n;
}

int DecoratedGraph::arrows_at(int id) const {
    auto it = arrows.find(id);
    return it == arrows.end() ? 0 : it->second;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
    IntersectionMatrix m;
    m.ids.reserve(g.size());
    for (const auto& v : g.vertices)
        m.ids.push_back(v.id);
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < m.ids.size(); ++i)
        index[m.ids[i]] = i;
    m.a.assign(g.size(), std::vector<Int>(g.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i)
        m.a[i][i] = g.vertices[i].weight;
    for (const auto& [a, b] : g.edges) {
        std::size_t i = index.at(a), j = index.at(b);
        m.a[i][j] = 1;
        m.a[j][i] = 1;
    }
    return m;
}

Int integer_determinant(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int determinant(const IntersectionMatrix& m) { return integer_determinant(m.a); }

bool is_negative_definite(const IntersectionMatrix& m) {
    // Bareiss without row swaps: a[k][k] after k rounds is the leading
    // principal minor of order k+1, so the sign sequence falls out for free.
    std::size_t n = m.size();
    auto a = m.a;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Int& minor_k = a[k][k];
        bool want_positive = (k % 2 == 1);
        if (minor_k == 0 || (minor_k > 0) != want_positive)
            return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

bool is_negative_definite(const PlumbingGraph& g) {
    return is_negative_definite(intersection_matrix(g));
}

const Int& HomologyOrder::value() const {
    if (infinite_)
        throw domain_error("homology order is infinite");
    return value_;
}

HomologyOrder HomologyOrder::operator*(const HomologyOrder& o) const {
    if (infinite_ || o.infinite_)
        return infinite();
    return finite(value_ * o.value_);
}

std::string HomologyOrder::str() const { return infinite_ ? "inf" : value_.str(); }

HomologyOrder h1_order(const PlumbingGraph& g) {
    Int d = determinant(intersection_matrix(g));
    if (d == 0)
        return HomologyOrder::infinite();
    return HomologyOrder::finite(d < 0 ? Int(-d) : d);
}

std::vector<PlumbingGraph> split_components(const PlumbingGraph& g) {
    std::vector<PlumbingGraph> out;
    std::set<int> visited;
    for (const auto& root : g.vertices) {
        if (visited.count(root.id))
            continue;
        std::vector<int> stack{root.id};
        std::set<int> comp;
        visited.insert(root.id);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (int u : g.neighbors(v))
                if (visited.insert(u).second)
                    stack.push_back(u);
        }
        PlumbingGraph sub;
        for (const auto& v : g.vertices)
            if (comp.count(v.id))
                sub.vertices.push_back(v);
        for (const auto& e : g.edges)
            if (comp.count(e.first))
                sub.edges.push_back(e);
        out.push_back(std::move(sub));
    }
    return out;
}

bool is_connected(const PlumbingGraph& g) { return split_components(g).size() <= 1; }

} // namespace lspace
