#include "lspace/cli.hpp"

#include "lspace/calculus.hpp"
#include "lspace/classify.hpp"
#include "lspace/errors.hpp"
#include "lspace/graph_io.hpp"
#include "lspace/rationality.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lspace::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<long long> parse_coeffs(std::string list) {
    if (!list.empty() && list[0] == '=') // tolerate the -d=-1 spelling
        list.erase(0, 1);
    std::vector<long long> out;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw parse_error("invalid surgery coefficient '" + item + "'");
        }
    }
    if (out.empty())
        throw parse_error("empty coefficient list");
    return out;
}

std::pair<long long, long long> parse_range(const std::string& range) {
    auto sep = range.find("..", 1); // skip a leading minus sign
    if (sep == std::string::npos)
        throw parse_error("range must look like LO..HI");
    try {
        long long lo = std::stoll(range.substr(0, sep));
        long long hi = std::stoll(range.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw parse_error("invalid range '" + range + "'");
    }
}

void print_report(const CrossReport& rep, std::ostream& out) {
    out << "classify=" << to_string(rep.torus) << '\n';
    out << "oracle=" << to_string(rep.oracle) << '\n';
    out << "agree=" << (rep.agree ? "true" : "false") << '\n';
    out << "linking_det=" << rep.linking_determinant.str() << '\n';
    out << "h1=" << rep.h1.str() << '\n';
    if (!rep.seifert_fibers.empty()) {
        out << "seifert_fibers=";
        for (std::size_t i = 0; i < rep.seifert_fibers.size(); ++i)
            out << (i ? "," : "") << rep.seifert_fibers[i].str();
        out << '\n';
    }
    if (rep.farey_neighbors)
        out << "farey_neighbors=" << (*rep.farey_neighbors ? "true" : "false") << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact L-space recognition for plumbed 3-manifolds and torus-link surgeries"};
    app.require_subcommand(1);

    long long p = 0, q = 0;
    int r = 1;
    std::string coeffs, file, range, format = "csv", out_path;
    bool resolve_boundary = false;

    auto add_pq = [&](CLI::App* sub) {
        sub->add_option("-p", p, "first torus parameter (> 1)")->required();
        sub->add_option("-q", q, "second torus parameter (> 1, coprime to p)")->required();
    };
    auto add_d = [&](CLI::App* sub) {
        sub->add_option("-d", coeffs,
                        "comma-separated surgery coefficients, one per link component, "
                        "matched to arrowheads in vertex-id order; negative leading "
                        "values work as -d -1 or -d=-1")
            ->required();
    };

    auto* c_classify = app.add_subcommand("classify-torus",
                                          "classify a (d_1,...,d_r)-surgery on the "
                                          "(pr,qr) torus link");
    add_pq(c_classify);
    add_d(c_classify);

    auto* c_oracle = app.add_subcommand("oracle", "L-space verdict of a plumbing graph file");
    c_oracle->add_option("file", file, "graph file ('-' for stdin)")->required();

    auto* c_rational =
        app.add_subcommand("rational", "rationality and valency-bound report for a graph file");
    c_rational->add_option("file", file, "graph file ('-' for stdin)")->required();

    auto* c_reduce = app.add_subcommand("reduce", "print the plumbing-calculus normal form");
    c_reduce->add_option("file", file, "graph file ('-' for stdin)")->required();

    auto* c_resolve =
        app.add_subcommand("resolve", "embedded resolution of the (pr,qr) torus link");
    add_pq(c_resolve);
    c_resolve->add_option("-r", r, "number of link components")->required();

    auto* c_surgery = app.add_subcommand("surgery", "surgery plumbing graph for a torus link");
    add_pq(c_surgery);
    add_d(c_surgery);

    auto* c_atlas = app.add_subcommand("atlas", "r = 2 verdict grid over a coefficient range");
    add_pq(c_atlas);
    c_atlas->add_option("--range", range, "coefficient range LO..HI")->required();
    c_atlas->add_option("--format", format, "csv or pgm")
        ->check(CLI::IsMember({"csv", "pgm"}));
    c_atlas->add_option("--out", out_path, "output path")->required();
    c_atlas->add_flag("--resolve-boundary", resolve_boundary,
                      "decide d = pq +- 1 cells with the graph oracle");

    auto* c_cross = app.add_subcommand("cross-validate",
                                       "run classifier and graph oracle side by side");
    add_pq(c_cross);
    add_d(c_cross);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (app.got_subcommand(c_classify)) {
            SurgerySpec spec{p, q, parse_coeffs(coeffs)};
            out << to_string(classify_torus(spec)) << '\n';
        } else if (app.got_subcommand(c_oracle)) {
            DecoratedGraph g = parse_graph(read_input(file));
            out << to_string(is_lspace_oracle(g.graph)) << " h1=" << h1_order(g.graph).str()
                << '\n';
        } else if (app.got_subcommand(c_rational)) {
            DecoratedGraph g = parse_graph(read_input(file));
            bool rat = is_rational(g.graph);
            out << "rational=" << (rat ? "true" : "false")
                << " bounds=" << to_string(valency_bounds(g.graph)) << '\n';
        } else if (app.got_subcommand(c_reduce)) {
            DecoratedGraph g = parse_graph(read_input(file));
            out << render_graph(normalize(g.graph));
        } else if (app.got_subcommand(c_resolve)) {
            ResolutionData res = torus_resolution(p, q, r);
            for (const auto& [v, m] : res.multiplicity)
                out << "# multiplicity " << v << ' ' << m.str() << '\n';
            out << render_graph(res.decorated);
        } else if (app.got_subcommand(c_surgery)) {
            auto d = parse_coeffs(coeffs);
            ResolutionData res = torus_resolution(p, q, static_cast<int>(d.size()));
            out << render_graph(surgery_graph(res, d));
        } else if (app.got_subcommand(c_atlas)) {
            auto [lo, hi] = parse_range(range);
            AtlasGrid grid = atlas(p, q, lo, hi, resolve_boundary);
            std::ofstream os(out_path);
            if (!os)
                throw parse_error("cannot open output file '" + out_path + "'");
            if (format == "csv")
                write_csv(grid, os);
            else
                write_pgm(grid, os);
        } else if (app.got_subcommand(c_cross)) {
            SurgerySpec spec{p, q, parse_coeffs(coeffs)};
            print_report(cross_validate(spec), out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace lspace::cli
