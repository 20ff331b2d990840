#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cperm/shadow.hpp"
#include "cperm/stats.hpp"

using namespace cperm;

namespace {

// Independent oracle: build each shadow line as the staircase of points not
// weakly dominated (towards the origin) by another remaining point, then peel.
struct OracleDecomposition {
    std::vector<std::vector<GridPoint>> lines;
    std::vector<GridPoint> corners;
};

OracleDecomposition oracle_shadow_lines(const RookPlacement& placement) {
    OracleDecomposition out;
    std::vector<GridPoint> remaining = placement.points();
    while (!remaining.empty()) {
        std::vector<GridPoint> line;
        for (const GridPoint& p : remaining) {
            bool dominated = false;
            for (const GridPoint& q : remaining)
                if (q != p && q.row <= p.row && q.col <= p.col) dominated = true;
            if (!dominated) line.push_back(p);
        }
        std::sort(line.begin(), line.end());
        for (std::size_t i = 1; i < line.size(); ++i)
            out.corners.push_back(GridPoint{line[i].row, line[i - 1].col});
        std::vector<GridPoint> next;
        for (const GridPoint& p : remaining)
            if (std::find(line.begin(), line.end(), p) == line.end()) next.push_back(p);
        out.lines.push_back(std::move(line));
        remaining = std::move(next);
    }
    return out;
}

RookPlacement permutation_points(const Permutation& w) {
    std::vector<GridPoint> pts;
    for (int i = 1; i <= w.n(); ++i) pts.push_back(GridPoint{i, w(i)});
    return RookPlacement(std::move(pts));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// Deterministic Fisher-Yates so the sampled words match across platforms.
Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[rng() % static_cast<unsigned>(i + 1)]);
    return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("shadow lines of the running 7-letter example") {
    const auto dec = shadow_lines(permutation_points(Permutation({5, 1, 3, 6, 7, 2, 4})));
    CHECK(dec.lines.size() == 4);
    CHECK(dec.shadow_set.points() == std::vector<GridPoint>{{2, 5}, {6, 3}, {7, 6}});
    CHECK(dec.horizontal_ray_ys == std::vector<int>{1, 2, 4, 7});
    CHECK(dec.vertical_ray_xs == std::vector<int>{1, 3, 4, 5});
}

TEST_CASE("shadow lines of simple placements") {
    const auto id = shadow_lines(permutation_points(Permutation::identity(5)));
    CHECK(id.lines.size() == 5);
    CHECK(id.shadow_set.empty());

    const auto rev = shadow_lines(permutation_points(Permutation({3, 2, 1})));
    CHECK(rev.lines.size() == 1);
    CHECK(rev.shadow_set.points() == std::vector<GridPoint>{{2, 3}, {3, 2}});

    const auto none = shadow_lines(RookPlacement{});
    CHECK(none.lines.empty());
    CHECK(none.shadow_set.empty());
    CHECK(iterated_shadows(RookPlacement{}) == TableauPair{});
}

TEST_CASE("greedy sweep matches the staircase oracle") {
    for (int n = 0; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            const RookPlacement pts = permutation_points(w);
            const auto fast = shadow_lines(pts);
            const auto slow = oracle_shadow_lines(pts);
            REQUIRE(fast.lines.size() == slow.lines.size());
            for (std::size_t i = 0; i < fast.lines.size(); ++i) CHECK(fast.lines[i].points == slow.lines[i]);
            CHECK(fast.shadow_set == RookPlacement(slow.corners));
            CHECK(fast.shadow_set.size() == pts.size() - fast.lines.size());
        });

    // also on proper sub-permutation rook placements
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<GridPoint> pts;
        std::set<int> rows, cols;
        for (int tries = 0; tries < 8; ++tries) {
            const int row = static_cast<int>(rng() % 12) + 1;
            const int col = static_cast<int>(rng() % 12) + 1;
            if (rows.count(row) || cols.count(col)) continue;
            rows.insert(row);
            cols.insert(col);
            pts.push_back(GridPoint{row, col});
        }
        const RookPlacement placement(pts);
        const auto fast = shadow_lines(placement);
        const auto slow = oracle_shadow_lines(placement);
        CHECK(fast.shadow_set == RookPlacement(slow.corners));
        CHECK(fast.lines.size() == slow.lines.size());
    }
}

TEST_CASE("iterated shadows of the running example") {
    const auto pair = iterated_shadows(permutation_points(Permutation({5, 1, 3, 6, 7, 2, 4})));
    CHECK(pair.P == std::vector<std::vector<int>>{{1, 2, 4, 7}, {3, 6}, {5}});
    CHECK(pair.Q == std::vector<std::vector<int>>{{1, 3, 4, 5}, {2, 7}, {6}});
    CHECK(pair.is_standard());

    // the second-level shadow set of this example, read off the iteration
    const auto level1 = shadow_lines(permutation_points(Permutation({5, 1, 3, 6, 7, 2, 4})));
    const auto level2 = shadow_lines(level1.shadow_set);
    CHECK(level2.shadow_set.points() == std::vector<GridPoint>{{6, 5}});

    const auto id = iterated_shadows(permutation_points(Permutation::identity(3)));
    CHECK(id.P == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(id.Q == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("row insertion on the named examples") {
    const auto pair = schensted_insert(Permutation({5, 1, 3, 6, 7, 2, 4}));
    CHECK(pair.P[0] == std::vector<int>{1, 2, 4, 7});

    const auto id = schensted_insert(Permutation::identity(4));
    CHECK(id.P == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(id.Q == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    const auto rev = schensted_insert(Permutation({3, 2, 1}));
    CHECK(rev.P == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(rev.Q == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("shadow iteration agrees with row insertion") {
    for (int n = 0; n <= 5; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            const TableauPair a = iterated_shadows(permutation_points(w));
            const TableauPair b = schensted_insert(w);
            REQUIRE(a == b);
            if (n > 0) CHECK(a.is_standard());
        });
    std::mt19937 rng(12345);
    for (int n : {7, 8, 9})
        for (int trial = 0; trial < 40; ++trial) {
            const Permutation w = random_permutation(n, rng);
            CHECK(iterated_shadows(permutation_points(w)) == schensted_insert(w));
        }
}

TEST_CASE("shadow set size law") {
    for (int n = 0; n <= 5; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            const RookPlacement pts = permutation_points(w);
            CHECK(shadow_lines(pts).shadow_set.size() == pts.size() - static_cast<std::size_t>(lis_points(pts)));
        });
}

TEST_CASE("shadow monomials") {
    const auto w = ColoredPermutation::parse("2^1,5^0,3^0,1^0,6^0,4^1", 2);
    const ShadowMonomial m = shadow_monomial(w);
    CHECK(m.to_string() == "x[1,2]*x[3,5]^2*x[4,3]^2*x[6,4]");
    CHECK(m.degree() == 6);

    CHECK(shadow_monomial(ColoredPermutation::identity(4, 3)).to_string() == "1");
    CHECK(shadow_monomial(ColoredPermutation::identity(4, 3)).degree() == 0);

    const auto w7 = ColoredPermutation::parse("5,1,3,6,7,2,4", 1);
    const ShadowMonomial m7 = shadow_monomial(w7);
    CHECK(m7.to_string() == "x[2,5]*x[6,3]*x[7,6]");
    CHECK(m7.degree() == 3);
    CHECK(m7.degree() == 7 - lis_points(diagram(w7).layers[0]));
}

TEST_CASE("colored degree law and monomial support") {
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for_each_group_element(n, r, [&](const ColoredPermutation& w) {
                const ColoredDiagram d = diagram(w);
                long expected = static_cast<long>(r) * n - static_cast<long>(r) * lis_points(d.layers[0]);
                for (int i = 1; i < r; ++i)
                    expected -= static_cast<long>(r - i) * static_cast<long>(d.layers[static_cast<std::size_t>(i)].size());
                const ShadowMonomial m = shadow_monomial(w);
                CHECK(m.degree() == expected);
                std::vector<GridPoint> support;
                for (const auto& [p, e] : m.exponents) {
                    CHECK(e >= 1);
                    CHECK(e <= r);
                    support.push_back(p);
                }
                CHECK_NOTHROW(RookPlacement{support});  // support never attacks itself
            });
}

TEST_CASE("the monomial map is injective on the group") {
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::set<ShadowMonomial> seen;
            std::size_t count = 0;
            for_each_group_element(n, r, [&](const ColoredPermutation& w) {
                seen.insert(shadow_monomial(w));
                ++count;
            });
            CHECK(seen.size() == count);
        }
}
