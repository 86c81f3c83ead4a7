#include "lspace/seifert.hpp"

#include "lspace/errors.hpp"

#include <algorithm>

namespace lspace {

StarShape star_center(const PlumbingGraph& g) {
    std::vector<int> branch;
    for (const auto& v : g.vertices)
        if (g.valency(v.id) >= 3)
            branch.push_back(v.id);
    if (branch.size() == 1)
        return {StarShape::Kind::Star, branch[0]};
    if (branch.size() > 1)
        return {StarShape::Kind::None, -1};
    if (g.empty())
        return {StarShape::Kind::None, -1};
    return {StarShape::Kind::Chain, g.vertices.front().id};
}

namespace {

// Negative continued fraction a_1 - 1/(a_2 - 1/(...)) of a leg read from the
// center outward, a_i = -weight.
Fraction leg_fraction(const PlumbingGraph& g, int center, int first) {
    std::vector<long long> weights;
    int prev = center, cur = first;
    for (;;) {
        weights.push_back(g.weight(cur));
        int next = -1;
        for (int u : g.neighbors(cur))
            if (u != prev)
                next = u;
        if (next < 0)
            break;
        prev = cur;
        cur = next;
    }
    Fraction val(-weights.back());
    for (auto it = std::next(weights.rbegin()); it != weights.rend(); ++it) {
        if (val.is_zero())
            throw domain_error("seifert_data: leg normalization failure, "
                               "route the graph through normalize first");
        val = Fraction(-*it) - val.reciprocal();
    }
    return val;
}

Int ceil_fraction(const Fraction& f) {
    return -(-f).floor();
}

} // namespace

std::optional<SeifertData> seifert_data(const PlumbingGraph& g) {
    StarShape sc = star_center(g);
    if (sc.kind == StarShape::Kind::None)
        throw domain_error("seifert_data: graph is not star-shaped");

    Int central = g.weight(sc.center);
    std::vector<Fraction> fibers;
    Int denom_product = 1;
    for (int first : g.neighbors(sc.center)) {
        Fraction cf = leg_fraction(g, sc.center, first);
        if (cf.is_zero())
            throw domain_error("seifert_data: zero-valued leg, "
                               "route the graph through normalize first");
        Fraction r = cf.reciprocal();
        Int whole = r.floor();
        central += whole;
        Fraction alpha = r - Fraction(whole);
        denom_product *= alpha.den();
        if (!alpha.is_zero())
            fibers.push_back(alpha);
    }

    Fraction e_orb = Fraction(central);
    for (const auto& a : fibers)
        e_orb = e_orb + a;

    if (e_orb.is_zero())
        return std::nullopt;

    bool flipped = false;
    if (e_orb > Fraction(0)) {
        flipped = true;
        central = -central - Int(fibers.size());
        for (auto& a : fibers)
            a = Fraction(1) - a;
        e_orb = -e_orb;
    }

    // central = e_orb - sum(alpha) < 0, so the padding count is >= 0
    Int pad = -1 - central;
    SeifertData sd;
    sd.central = -1;
    sd.flipped = flipped;
    sd.e_orb = e_orb;
    for (Int i = 0; i < pad; ++i)
        sd.fibers.emplace_back(1);
    std::sort(fibers.begin(), fibers.end(), std::greater<>());
    sd.fibers.insert(sd.fibers.end(), fibers.begin(), fibers.end());

    // |det| = (product of fiber denominators) * |e_orb|; guards the whole
    // leg-fraction extraction
    HomologyOrder h1 = h1_order(g);
    Fraction expected = Fraction(denom_product) * (-e_orb);
    if (h1.is_infinite() || !expected.is_integer() || expected.num() != h1.value())
        throw std::logic_error("seifert_data: determinant cross-check failed");

    return sd;
}

std::optional<Fraction> min_denominator_fraction(const Fraction& lo, const Fraction& hi) {
    if (lo >= hi)
        return std::nullopt;
    // Stern-Brocot descent with continued-fraction jumps; the first fraction
    // whose value lands strictly inside the interval has minimal denominator.
    Fraction candidate = Fraction(lo.floor() + 1);
    if (candidate < hi)
        return candidate;
    Int n = lo.floor();
    Fraction x = lo - Fraction(n);
    Fraction y = hi - Fraction(n);
    if (x.is_zero()) {
        Int q = y.reciprocal().floor() + 1;
        return Fraction(n) + Fraction(Int(1), q);
    }
    auto inner = min_denominator_fraction(y.reciprocal(), x.reciprocal());
    return Fraction(n) + inner->reciprocal();
}

std::optional<LsWitness> ls_obstruction(const SeifertData& sd) {
    std::vector<Fraction> honest;
    Int pad = 0;
    for (const auto& a : sd.fibers) {
        if (a == Fraction(1))
            ++pad;
        else
            honest.push_back(a);
    }

    // a Seifert space with at most two exceptional fibers is a lens space
    if (honest.size() < 3)
        return std::nullopt;

    if (pad == 0) {
        const Fraction& a1 = honest[0];
        Fraction cap = Fraction(1) - honest[1];
        if (a1 >= cap)
            return std::nullopt;
        Fraction f = *min_denominator_fraction(a1, cap);
        for (std::size_t i = 2; i < honest.size(); ++i)
            if (Fraction(f.den()) * honest[i] >= Fraction(1))
                return std::nullopt;
        return LsWitness{f.num(), f.den()};
    }

    // true central weight -(1 + pad): scan the central Laufer ray. Beyond
    // ceil((nu-2)/|e|) the defect is >= -1 by the linear lower bound, and the
    // scan is A-periodic up to the strictly positive shift A*|e| for
    // A = lcm(denominators), so min(both) levels suffice.
    Int b = 1 + pad;
    Fraction abs_e = -sd.e_orb;
    Int nu = Int(honest.size());
    Int bound = ceil_fraction(Fraction(nu - 2) / abs_e);
    Int period = 1;
    for (const auto& a : honest)
        period = boost::multiprecision::lcm(period, a.den());
    if (period < bound)
        bound = period;
    for (Int m = 1; m <= bound; ++m) {
        Int s = m * b;
        for (const auto& a : honest)
            s -= ceil_fraction(Fraction(m) * a);
        if (s <= -2) {
            Int l = (Fraction(m) * honest[0]).floor() + 1;
            return LsWitness{l, m};
        }
    }
    return std::nullopt;
}

Verdict is_lspace_star(const PlumbingGraph& g) {
    StarShape sc = star_center(g);
    auto sd = seifert_data(g);
    if (!sd)
        return Verdict::NotQHS;
    if (sc.kind == StarShape::Kind::Chain)
        return Verdict::LSpace;
    return ls_obstruction(*sd) ? Verdict::NotLSpace : Verdict::LSpace;
}

} // namespace lspace
