#include "lspace/graph_io.hpp"

#include "lspace/errors.hpp"

#include <map>
#include <sstream>

namespace lspace {

namespace {

long long parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("invalid ") + what + " '" + tok + "'", line);
    }
}

} // namespace

DecoratedGraph parse_graph(const std::string& text) {
    DecoratedGraph out;
    std::map<int, int> root; // union-find for the incremental cycle check
    auto find = [&](int x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#')
            continue;
        if (word == "vertex") {
            std::string id_tok, w_tok;
            if (!(ls >> id_tok >> w_tok))
                throw parse_error("vertex needs <id> <weight>", lineno);
            int id = static_cast<int>(parse_int(id_tok, lineno, "vertex id"));
            long long w = parse_int(w_tok, lineno, "weight");
            if (out.graph.has_vertex(id))
                throw parse_error("duplicate vertex id " + std::to_string(id), lineno);
            out.graph.add_vertex(id, w);
            root[id] = id;
            std::string extra;
            if (ls >> extra) {
                if (extra.rfind("arrows=", 0) != 0)
                    throw parse_error("unexpected token '" + extra + "'", lineno);
                long long n = parse_int(extra.substr(7), lineno, "arrow count");
                if (n < 0)
                    throw parse_error("negative arrow count", lineno);
                if (n > 0)
                    out.arrows[id] = static_cast<int>(n);
            }
            if (ls >> extra)
                throw parse_error("unexpected token '" + extra + "'", lineno);
        } else if (word == "edge") {
            std::string a_tok, b_tok;
            if (!(ls >> a_tok >> b_tok))
                throw parse_error("edge needs two vertex ids", lineno);
            int a = static_cast<int>(parse_int(a_tok, lineno, "vertex id"));
            int b = static_cast<int>(parse_int(b_tok, lineno, "vertex id"));
            std::string extra;
            if (ls >> extra)
                throw parse_error("unexpected token '" + extra + "'", lineno);
            if (!out.graph.has_vertex(a) || !out.graph.has_vertex(b))
                throw parse_error("edge references undeclared vertex", lineno);
            if (a == b)
                throw parse_error("self-loop at vertex " + std::to_string(a), lineno);
            if (out.graph.has_edge(a, b))
                throw parse_error("duplicate edge", lineno);
            if (find(a) == find(b))
                throw parse_error("edge closes a cycle (graph must be a forest)", lineno);
            root[find(a)] = find(b);
            out.graph.add_edge(a, b);
        } else {
            throw parse_error("unknown directive '" + word + "'", lineno);
        }
    }
    return out;
}

std::string render_graph(const DecoratedGraph& g) {
    std::ostringstream os;
    for (const auto& v : g.graph.vertices) {
        os << "vertex " << v.id << ' ' << v.weight;
        if (int n = g.arrows_at(v.id))
            os << " arrows=" << n;
        os << '\n';
    }
    for (const auto& [a, b] : g.graph.edges)
        os << "edge " << a << ' ' << b << '\n';
    return os.str();
}

std::string render_graph(const PlumbingGraph& g) { return render_graph(DecoratedGraph{g, {}}); }

} // namespace lspace
