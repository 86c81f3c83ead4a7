#include "lspace/classify.hpp"
#include "lspace/errors.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace lspace;

TEST_SUITE("classify") {

TEST_CASE("linking determinant") {
    CHECK(linking_det({2, 3, {6, 6}}) == 0);
    CHECK(linking_det({2, 3, {8, 9}}) == 36);
    CHECK(linking_det({2, 3, {0}}) == 0);
    CHECK_THROWS_AS(linking_det({2, 4, {5}}), domain_error);
}

TEST_CASE("linking determinant closed form") {
    // det = prod k_i + pq * sum_j prod_{i != j} k_i
    std::mt19937_64 rng(61);
    const std::pair<long long, long long> pqs[] = {{2, 3}, {3, 5}, {4, 7}};
    for (const auto& [p, q] : pqs) {
        for (int trial = 0; trial < 40; ++trial) {
            int r = 1 + int(rng() % 4);
            SurgerySpec spec{p, q, {}};
            for (int i = 0; i < r; ++i)
                spec.d.push_back(p * q + static_cast<long long>(rng() % 21) - 10);
            Int prod = 1, sum = 0;
            for (long long di : spec.d)
                prod *= Int(di - p * q);
            for (int j = 0; j < r; ++j) {
                Int t = 1;
                for (int i = 0; i < r; ++i)
                    if (i != j)
                        t *= Int(spec.d[i] - p * q);
                sum += t;
            }
            CAPTURE(trial);
            CHECK(linking_det(spec) == prod + Int(p) * q * sum);
        }
    }
}

TEST_CASE("classify_torus examples") {
    CHECK(classify_torus({2, 3, {1}}) == Verdict::LSpace);
    CHECK(classify_torus({2, 3, {0}}) == Verdict::NotQHS);
    CHECK(classify_torus({2, 3, {6, 9}}) == Verdict::LSpace);
    CHECK(classify_torus({2, 3, {9, 3}}) == Verdict::NotLSpace);
    CHECK(classify_torus({2, 3, {7, 100}}) == Verdict::BoundaryCase);
    CHECK(classify_torus({2, 3, {6, 6}}) == Verdict::NotQHS);
    CHECK_THROWS_AS(classify_torus({2, 4, {5}}), domain_error);
    CHECK_THROWS_AS(classify_torus({1, 3, {5}}), domain_error);
}

TEST_CASE("classify_torus r = 1 half line") {
    const std::pair<long long, long long> pqs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    for (const auto& [p, q] : pqs) {
        long long pq = p * q;
        for (long long d = pq - 15; d <= pq + 15; ++d) {
            if (d == pq - 1 || d == pq + 1)
                continue;
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(d);
            Verdict v = classify_torus({p, q, {d}});
            if (d == 0)
                CHECK(v == Verdict::NotQHS);
            else
                CHECK(v == (d >= pq - p - q ? Verdict::LSpace : Verdict::NotLSpace));
        }
    }
}

TEST_CASE("linking determinant signs on the decided branches") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        long long p = 2 + static_cast<long long>(rng() % 3);
        long long q = p + 1 + static_cast<long long>(rng() % 3);
        if (std::gcd(p, q) != 1)
            continue;
        int r = 1 + int(rng() % 4);
        SurgerySpec pos{p, q, {}}, neg{p, q, {}};
        bool has_big = false;
        for (int i = 0; i < r; ++i) {
            long long k = 2 + static_cast<long long>(rng() % 9);
            pos.d.push_back(p * q + k);
            long long kn = -2 - static_cast<long long>(rng() % 9);
            if (kn >= -(p + q))
                has_big = true;
            neg.d.push_back(p * q + kn);
        }
        CAPTURE(trial);
        CHECK(linking_det(pos) > 0);
        if (has_big)
            CHECK(linking_det(neg) != 0);
    }
}

TEST_CASE("classify_torus is symmetric in the coefficients") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 150; ++trial) {
        SurgerySpec spec{2, 3, {}};
        int r = 2 + int(rng() % 3);
        for (int i = 0; i < r; ++i)
            spec.d.push_back(static_cast<long long>(rng() % 25) - 6);
        SurgerySpec shuffled = spec;
        std::shuffle(shuffled.d.begin(), shuffled.d.end(), rng);
        CAPTURE(trial);
        CHECK(classify_torus(spec) == classify_torus(shuffled));
    }
}

TEST_CASE("oracle on known manifolds") {
    CHECK(is_lspace_oracle(poincare_graph()) == Verdict::LSpace);
    CHECK(is_lspace_oracle(make_star(-1, {{-2}, {-3}, {-7}})) == Verdict::NotLSpace);
    CHECK(is_lspace_oracle(make_star(-1, {{-2}, {-3}, {-5}})) == Verdict::LSpace);
    CHECK(is_lspace_oracle(PlumbingGraph{}) == Verdict::LSpace); // S^3
    CHECK(is_lspace_oracle(make_chain({0})) == Verdict::NotQHS);
}

TEST_CASE("oracle returns Unknown outside its decidable classes") {
    // two valency-4 vertices of weight -2: not negative definite, not a star
    PlumbingGraph g = make_star(-2, {{-2}, {-2}, {-2, -2}});
    g.add_vertex(10, -2);
    g.add_vertex(11, -2);
    g.add_vertex(12, -2);
    g.add_edge(4, 10);
    g.add_edge(4, 11);
    g.add_edge(4, 12);
    REQUIRE_FALSE(is_negative_definite(g));
    CHECK(is_lspace_oracle(g) == Verdict::Unknown);
}

TEST_CASE("oracle handles connected sums") {
    PlumbingGraph g = make_graph({{0, -2}, {1, -3}, {2, -7}}, {});
    CHECK(is_lspace_oracle(g) == Verdict::LSpace); // lens # lens # lens
}

TEST_CASE("dual oracle agreement on a coefficient window") {
    // narrower than the acceptance sweep: spot grid around pq for r = 2
    const std::pair<long long, long long> pqs[] = {{2, 3}, {3, 4}};
    for (const auto& [p, q] : pqs) {
        long long pq = p * q;
        ResolutionData res = torus_resolution(p, q, 2);
        for (long long d1 = pq - 7; d1 <= pq + 7; ++d1) {
            for (long long d2 = pq - 7; d2 <= pq + 7; ++d2) {
                if (std::abs(d1 - pq) == 1 || std::abs(d2 - pq) == 1)
                    continue;
                SurgerySpec spec{p, q, {d1, d2}};
                Verdict expect = classify_torus(spec);
                Verdict got = is_lspace_oracle(surgery_graph(res, spec.d));
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(d1);
                CAPTURE(d2);
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("cross_validate") {
    CrossReport rep = cross_validate({2, 3, {8, 9}});
    CHECK(rep.agree);
    CHECK(rep.torus == Verdict::LSpace);
    CHECK(rep.oracle == Verdict::LSpace);
    CHECK(rep.linking_determinant == 36);
    CHECK(rep.h1 == HomologyOrder::finite(36));

    CrossReport neg = cross_validate({2, 3, {-1}});
    CHECK(neg.agree);
    CHECK(neg.torus == Verdict::NotLSpace);
    REQUIRE(neg.farey_neighbors.has_value());
    CHECK(*neg.farey_neighbors);

    CHECK_THROWS_AS(cross_validate({2, 3, {7, 9}}), domain_error);
}

TEST_CASE("atlas grid for (2,3) over [-6,12]") {
    AtlasGrid grid = atlas(2, 3, -6, 12);
    REQUIRE(grid.cells.size() == 19 * 19);
    CHECK(grid.at(6, 6) == Verdict::NotQHS);
    CHECK(grid.at(6, 9) == Verdict::LSpace);
    CHECK(grid.at(8, 9) == Verdict::LSpace);
    CHECK(grid.at(3, 1) == Verdict::LSpace);
    CHECK(grid.at(9, 3) == Verdict::NotLSpace);
    CHECK(grid.at(5, 2) == Verdict::BoundaryCase);
    for (long long d1 = -6; d1 <= 12; ++d1) {
        for (long long d2 = -6; d2 <= 12; ++d2) {
            long long k1 = d1 - 6, k2 = d2 - 6;
            CAPTURE(d1);
            CAPTURE(d2);
            if (std::abs(k1) == 1 || std::abs(k2) == 1) {
                CHECK(grid.at(d1, d2) == Verdict::BoundaryCase);
                continue;
            }
            bool lspace = (k1 == 0) != (k2 == 0);
            lspace = lspace || (k1 >= 2 && k2 >= 2);
            lspace = lspace || (k1 <= -2 && k2 <= -2 && std::max(k1, k2) >= -5);
            CHECK((grid.at(d1, d2) == Verdict::LSpace) == lspace);
        }
    }
}

TEST_CASE("atlas boundary resolution decides the pq +- 1 rows") {
    AtlasGrid grid = atlas(2, 3, -6, 12, true);
    for (long long d2 = -6; d2 <= 12; ++d2) {
        CAPTURE(d2);
        CHECK(grid.at(5, d2) == Verdict::LSpace);
        CHECK(grid.at(7, d2) == Verdict::LSpace);
        CHECK(grid.at(d2, 5) == Verdict::LSpace);
        CHECK(grid.at(d2, 7) == Verdict::LSpace);
    }
}

TEST_CASE("atlas CSV format") {
    AtlasGrid grid = atlas(2, 3, 5, 7);
    std::ostringstream os;
    write_csv(grid, os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "d1,d2,verdict,h1");
    std::getline(in, line);
    CHECK(line == "5,5,BOUNDARY,11");
    std::getline(in, line);
    CHECK(line == "5,6,BOUNDARY,6");
    int rows = 2;
    bool saw_star_point = false;
    while (std::getline(in, line)) {
        ++rows;
        if (line == "6,6,NOT_QHS,inf")
            saw_star_point = true;
    }
    CHECK(rows == 9);
    CHECK(saw_star_point);
}

TEST_CASE("atlas PGM format") {
    AtlasGrid grid = atlas(2, 3, 5, 7);
    std::ostringstream os;
    write_pgm(grid, os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "P2");
    std::getline(in, line); // grid comment
    std::getline(in, line);
    CHECK(line == "# levels: LSPACE=255 BOUNDARY=170 NOT_LSPACE=85 NOT_QHS=0");
    std::getline(in, line);
    CHECK(line == "3 3");
    std::getline(in, line);
    CHECK(line == "255");
    std::getline(in, line);
    CHECK(line == "170 170 170"); // d1 = 5 row is all boundary
    std::getline(in, line);
    CHECK(line == "170 0 170"); // (6,6) is the excluded star point
}

TEST_CASE("atlas determinism") {
    AtlasGrid a = atlas(2, 3, -2, 4);
    AtlasGrid b = atlas(2, 3, -2, 4);
    std::ostringstream sa, sb;
    write_csv(a, sa);
    write_csv(b, sb);
    CHECK(sa.str() == sb.str());
}

} // TEST_SUITE
