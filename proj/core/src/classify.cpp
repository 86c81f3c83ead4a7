#include "lspace/classify.hpp"

#include "lspace/calculus.hpp"
#include "lspace/errors.hpp"
#include "lspace/rationality.hpp"

#include <algorithm>
#include <ostream>

namespace lspace {

Int linking_det(const SurgerySpec& spec) {
    validate(spec);
    std::size_t r = spec.d.size();
    std::vector<std::vector<Int>> a(r, std::vector<Int>(r, Int(spec.p) * spec.q));
    for (std::size_t i = 0; i < r; ++i)
        a[i][i] = spec.d[i];
    return integer_determinant(std::move(a));
}

Verdict classify_torus(const SurgerySpec& spec) {
    validate(spec);
    long long pq = spec.p * spec.q;
    std::vector<long long> k;
    k.reserve(spec.d.size());
    for (long long di : spec.d)
        k.push_back(di - pq);

    for (long long ki : k)
        if (ki == 1 || ki == -1)
            return Verdict::BoundaryCase;

    int zeros = static_cast<int>(std::count(k.begin(), k.end(), 0));
    if (zeros >= 2)
        return Verdict::NotQHS;
    if (zeros == 1)
        return Verdict::LSpace;

    bool all_pos = std::all_of(k.begin(), k.end(), [](long long v) { return v >= 2; });
    if (all_pos)
        return Verdict::LSpace;

    bool all_neg = std::all_of(k.begin(), k.end(), [](long long v) { return v <= -2; });
    if (all_neg) {
        if (linking_det(spec) == 0)
            return Verdict::NotQHS;
        long long max_k = *std::max_element(k.begin(), k.end());
        return max_k >= -(spec.p + spec.q) ? Verdict::LSpace : Verdict::NotLSpace;
    }

    // mixed signs
    if (linking_det(spec) == 0)
        return Verdict::NotQHS;
    return Verdict::NotLSpace;
}

Verdict is_lspace_oracle(const PlumbingGraph& g) {
    PlumbingGraph reduced = normalize(g);
    bool unknown = false;
    bool all_lspace = true;
    for (const auto& comp : split_components(reduced)) {
        if (h1_order(comp).is_infinite())
            return Verdict::NotQHS;
        Verdict v;
        bool star = star_center(comp).kind != StarShape::Kind::None;
        if (is_negative_definite(comp)) {
            if (is_rational(comp))
                v = Verdict::LSpace;
            else
                v = star ? Verdict::NotLSpace : Verdict::Unknown;
        } else {
            v = star ? is_lspace_star(comp) : Verdict::Unknown;
        }
        if (v == Verdict::Unknown)
            unknown = true;
        else if (v != Verdict::LSpace)
            all_lspace = false;
    }
    if (unknown)
        return Verdict::Unknown;
    return all_lspace ? Verdict::LSpace : Verdict::NotLSpace;
}

CrossReport cross_validate(const SurgerySpec& spec) {
    validate(spec);
    long long pq = spec.p * spec.q;
    for (long long di : spec.d)
        if (di == pq + 1 || di == pq - 1)
            throw domain_error("cross_validate: boundary coefficient d = pq +- 1");

    CrossReport rep;
    rep.spec = spec;
    rep.torus = classify_torus(spec);
    ResolutionData res = torus_resolution(spec.p, spec.q, spec.r());
    PlumbingGraph sg = surgery_graph(res, spec.d);
    rep.oracle = is_lspace_oracle(sg);
    rep.agree = rep.torus == rep.oracle;
    rep.linking_determinant = linking_det(spec);
    rep.h1 = h1_order(sg);

    // intermediate Seifert data of the raw surgery star, when it exists
    try {
        StarShape sc = star_center(sg);
        if (sc.kind == StarShape::Kind::Star) {
            if (auto sd = seifert_data(sg)) {
                rep.seifert_fibers = sd->fibers;
                std::optional<Fraction> fp, fq;
                for (const auto& f : sd->fibers) {
                    if (f.den() == spec.p && !fp)
                        fp = f;
                    else if (f.den() == spec.q && !fq)
                        fq = f;
                }
                if (fp && fq) {
                    Int a = fp->num();
                    Int b = fq->den() - fq->num();
                    Int cross = a * spec.q - b * spec.p;
                    rep.farey_neighbors = cross == 1 || cross == -1;
                }
            }
        }
    } catch (const domain_error&) {
        // zero-weight legs and such: no Seifert data to report
    }
    return rep;
}

const Verdict& AtlasGrid::at(long long d1, long long d2) const {
    return cells.at(static_cast<std::size_t>((d1 - lo) * side() + (d2 - lo)));
}

AtlasGrid atlas(long long p, long long q, long long lo, long long hi, bool resolve_boundary) {
    if (lo > hi)
        throw domain_error("atlas: empty range");
    AtlasGrid grid;
    grid.p = p;
    grid.q = q;
    grid.lo = lo;
    grid.hi = hi;
    grid.boundary_resolved = resolve_boundary;
    std::optional<ResolutionData> res;
    if (resolve_boundary)
        res = torus_resolution(p, q, 2);
    for (long long d1 = lo; d1 <= hi; ++d1) {
        for (long long d2 = lo; d2 <= hi; ++d2) {
            SurgerySpec spec{p, q, {d1, d2}};
            Verdict v = classify_torus(spec);
            if (v == Verdict::BoundaryCase && resolve_boundary)
                v = is_lspace_oracle(surgery_graph(*res, spec.d));
            grid.cells.push_back(v);
            Int det = linking_det(spec);
            grid.h1.push_back(det == 0 ? HomologyOrder::infinite()
                                       : HomologyOrder::finite(det < 0 ? Int(-det) : det));
        }
    }
    return grid;
}

void write_csv(const AtlasGrid& grid, std::ostream& os) {
    os << "d1,d2,verdict,h1\n";
    std::size_t idx = 0;
    for (long long d1 = grid.lo; d1 <= grid.hi; ++d1)
        for (long long d2 = grid.lo; d2 <= grid.hi; ++d2, ++idx)
            os << d1 << ',' << d2 << ',' << to_string(grid.cells[idx]) << ','
               << grid.h1[idx].str() << '\n';
}

namespace {

int pgm_level(Verdict v) {
    switch (v) {
    case Verdict::LSpace:
        return 255;
    case Verdict::BoundaryCase:
        return 170;
    case Verdict::NotLSpace:
        return 85;
    case Verdict::NotQHS:
        return 0;
    case Verdict::Unknown:
        break;
    }
    throw std::logic_error("atlas: unexpected verdict in grid");
}

} // namespace

void write_pgm(const AtlasGrid& grid, std::ostream& os) {
    long long n = grid.side();
    os << "P2\n";
    os << "# L-space atlas p=" << grid.p << " q=" << grid.q << " d in [" << grid.lo << ","
       << grid.hi << "], rows d1 top-to-bottom, cols d2 left-to-right\n";
    os << "# levels: LSPACE=255 BOUNDARY=170 NOT_LSPACE=85 NOT_QHS=0\n";
    os << n << ' ' << n << "\n255\n";
    std::size_t idx = 0;
    for (long long row = 0; row < n; ++row) {
        for (long long col = 0; col < n; ++col, ++idx) {
            if (col)
                os << ' ';
            os << pgm_level(grid.cells[idx]);
        }
        os << '\n';
    }
}

} // namespace lspace
