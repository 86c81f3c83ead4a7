#pragma once

#include "lspace/fraction.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lspace {

/// Weighted forest describing a plumbed 3-manifold. Vertices carry the Euler
/// number of the corresponding disk bundle; edges are plumbing connections.
/// All vertices have genus 0 and all edges positive sign.
struct PlumbingGraph {
    struct Vertex {
        int id;
        long long weight;
    };

    std::vector<Vertex> vertices; // sorted by id
    std::vector<std::pair<int, int>> edges; // normalized (lo, hi), sorted

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }

    bool has_vertex(int id) const;
    long long weight(int id) const;
    void set_weight(int id, long long w);
    bool has_edge(int a, int b) const;
    int valency(int id) const;
    std::vector<int> neighbors(int id) const;

    /// Smallest id not yet used (0 for the empty graph).
    int fresh_id() const;

    void add_vertex(int id, long long weight);
    void add_edge(int a, int b);
    void remove_vertex(int id); // drops incident edges
    void remove_edge(int a, int b);
};

/// Builds a graph from (id, weight) pairs and edges, validating all
/// PlumbingGraph invariants (distinct ids, declared endpoints, forest).
PlumbingGraph make_graph(const std::vector<std::pair<int, long long>>& vertices,
                         const std::vector<std::pair<int, int>>& edges);

/// Convenience builders used all over the tests.
PlumbingGraph make_chain(const std::vector<long long>& weights);
PlumbingGraph make_star(long long center, const std::vector<std::vector<long long>>& legs);

/// Throws domain_error if g violates an invariant (duplicate id, dangling or
/// duplicate edge, self-loop, cycle).
void validate(const PlumbingGraph& g);

/// Plumbing graph with arrowheads marking link components.
struct DecoratedGraph {
    PlumbingGraph graph;
    std::map<int, int> arrows; // vertex id -> arrowhead count (>= 1 entries only)

    int arrow_count() const;
    int arrows_at(int id) const;
};

/// Symmetric integer matrix of the intersection form: diagonal = weights,
/// off-diagonal 1 exactly at edges.
struct IntersectionMatrix {
    std::vector<int> ids; // row/column order
    std::vector<std::vector<Int>> a;

    std::size_t size() const { return ids.size(); }
};

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
Int integer_determinant(std::vector<std::vector<Int>> a);

Int determinant(const IntersectionMatrix& m);

/// Sylvester's criterion with exact leading principal minors:
/// (-1)^k Delta_k > 0 for every k.
bool is_negative_definite(const IntersectionMatrix& m);
bool is_negative_definite(const PlumbingGraph& g);

/// |H_1| of the plumbed boundary, with 0-determinant mapped to "infinite".
class HomologyOrder {
public:
    static HomologyOrder infinite() { return HomologyOrder(true, 0); }
    static HomologyOrder finite(Int v) { return HomologyOrder(false, std::move(v)); }

    bool is_infinite() const { return infinite_; }
    const Int& value() const; // throws if infinite

    HomologyOrder operator*(const HomologyOrder& o) const;
    bool operator==(const HomologyOrder& o) const = default;

    std::string str() const; // "inf" for the infinite value

private:
    HomologyOrder(bool inf, Int v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    Int value_;
};

HomologyOrder h1_order(const PlumbingGraph& g);

/// Connected components as separate graphs (ids preserved), ordered by their
/// smallest vertex id. Empty graph yields the empty list.
std::vector<PlumbingGraph> split_components(const PlumbingGraph& g);

bool is_connected(const PlumbingGraph& g);

} // namespace lspace
