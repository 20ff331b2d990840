#include "doctest.h"

#include <algorithm>
#include <set>

#include "cperm/core.hpp"

using namespace cperm;

namespace {

RPartition rp(std::vector<std::vector<int>> comps) { return RPartition(std::move(comps)); }

}  // namespace

TEST_CASE("group enumeration sizes and order") {
    CHECK(enumerate_group(1, 2).size() == 2);
    CHECK(enumerate_group(3, 2).size() == 48);
    CHECK(enumerate_group(3, 3).size() == 162);
    CHECK(enumerate_group(0, 5).size() == 1);

    const auto b1 = enumerate_group(1, 2);
    CHECK(b1[0].to_string() == "1^0");
    CHECK(b1[1].to_string() == "1^1");

    // lex on sigma first, then the color word as a base-r number
    const auto b2 = enumerate_group(2, 2);
    CHECK(b2[0].to_string() == "1^0,2^0");
    CHECK(b2[1].to_string() == "1^0,2^1");
    CHECK(b2[2].to_string() == "1^1,2^0");
    CHECK(b2[3].to_string() == "1^1,2^1");
    CHECK(b2[4].to_string() == "2^0,1^0");

    std::set<ColoredPermutation> distinct(b2.begin(), b2.end());
    CHECK(distinct.size() == b2.size());
}

TEST_CASE("enumeration cap refused with the offending size") {
    CHECK_THROWS_AS(enumerate_group(3, 3, BigInt(100)), size_limit_error);
    try {
        enumerate_group(3, 3, BigInt(100));
    } catch (const size_limit_error& e) {
        CHECK(e.requested() == 162);
        CHECK(e.cap() == 100);
        CHECK(std::string(e.what()).find("162") != std::string::npos);
    }
}

TEST_CASE("cycle types") {
    const auto w = ColoredPermutation::parse("4^2,2^1,5^0,3^2,1^2", 3);
    CHECK(cycle_type(w) == rp({{4}, {1}, {}}));

    CHECK(cycle_type(ColoredPermutation::identity(4, 3)) == rp({{1, 1, 1, 1}, {}, {}}));
    CHECK(cycle_type(ColoredPermutation::parse("1^1", 2)) == rp({{}, {1}}));
}

TEST_CASE("diagrams split by color") {
    const auto w = ColoredPermutation::parse("2^1,5^0,3^0,1^0,6^0,4^1", 2);
    const ColoredDiagram d = diagram(w);
    CHECK(d.layers[1].points() == std::vector<GridPoint>{{1, 2}, {6, 4}});
    CHECK(d.layers[0].points() == std::vector<GridPoint>{{2, 5}, {3, 3}, {4, 1}, {5, 6}});

    const ColoredDiagram id = diagram(ColoredPermutation::identity(3, 3));
    CHECK(id.layers[0].points() == std::vector<GridPoint>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(id.layers[1].empty());
    CHECK(id.layers[2].empty());

    const auto w7 = ColoredPermutation::parse("3^0,1^1,6^0,4^0,7^0,2^1,5^1", 2);
    CHECK(diagram(w7).layers[0].points() == std::vector<GridPoint>{{1, 3}, {3, 6}, {4, 4}, {5, 7}});
}

TEST_CASE("diagram layers are disjoint and union to the permutation support") {
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for_each_group_element(n, r, [&](const ColoredPermutation& w) {
                const ColoredDiagram d = diagram(w);
                const RookPlacement all = d.union_placement();  // throws if layers attack
                CHECK(all.size() == static_cast<std::size_t>(n));
                std::set<int> rows, cols;
                for (const GridPoint& p : all.points()) {
                    rows.insert(p.row);
                    cols.insert(p.col);
                    CHECK(w.sigma()(p.row) == p.col);
                }
                CHECK(rows.size() == static_cast<std::size_t>(n));
                CHECK(cols.size() == static_cast<std::size_t>(n));
            });
}

TEST_CASE("r-partition enumeration") {
    const auto one_two = enumerate_rpartitions(1, 2);
    REQUIRE(one_two.size() == 2);
    CHECK(one_two[0] == rp({{1}, {}}));
    CHECK(one_two[1] == rp({{}, {1}}));

    const auto two_one = enumerate_rpartitions(2, 1);
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0] == rp({{2}}));
    CHECK(two_one[1] == rp({{1, 1}}));

    CHECK(enumerate_rpartitions(2, 2).size() == 5);
}

TEST_CASE("classes correspond to r-partitions") {
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::set<RPartition> types;
            for_each_group_element(n, r, [&](const ColoredPermutation& w) { types.insert(cycle_type(w)); });
            CHECK(types.size() == enumerate_rpartitions(n, r).size());
        }
}

TEST_CASE("cycle type is a conjugation invariant") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto elements = enumerate_group(n, r);
            for (const ColoredPermutation& g : elements) {
                const ColoredPermutation ginv = g.inverse();
                CHECK((g * ginv) == ColoredPermutation::identity(n, r));
                for (const ColoredPermutation& w : elements)
                    CHECK(cycle_type(g * w * ginv) == cycle_type(w));
            }
        }
}

TEST_CASE("dual r-partition") {
    CHECK(dual_rpartition(rp({{2}, {1}})) == rp({{2}, {1}}));
    CHECK(dual_rpartition(rp({{1}, {2}, {3}})) == rp({{1}, {3}, {2}}));
    CHECK(dual_rpartition(rp({{3, 1}, {}, {}})) == rp({{3, 1}, {}, {}}));

    for (int n = 0; n <= 6; ++n)
        for (int r = 1; r <= 4; ++r)
            for (const RPartition& lam : enumerate_rpartitions(n, r))
                CHECK(dual_rpartition(dual_rpartition(lam)) == lam);
}

TEST_CASE("one-line notation round trip") {
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for_each_group_element(n, r, [&](const ColoredPermutation& w) {
                if (w.n() == 0) return;  // no textual form for the empty word
                CHECK(ColoredPermutation::parse(w.to_string(), r) == w);
            });

    CHECK(ColoredPermutation::parse("5,1,3,6,7,2,4").r() == 1);
    CHECK(ColoredPermutation::parse("5,1,3,6,7,2,4").to_string() == "5,1,3,6,7,2,4");
    CHECK(ColoredPermutation::parse("2^1,1^0").r() == 2);

    CHECK_THROWS_AS(ColoredPermutation::parse(""), parse_error);
    CHECK_THROWS_AS(ColoredPermutation::parse("1,,2"), parse_error);
    CHECK_THROWS_AS(ColoredPermutation::parse("1^3,2", 2), parse_error);
    CHECK_THROWS_AS(ColoredPermutation::parse("1,1"), std::invalid_argument);
    try {
        ColoredPermutation::parse("3,x");
    } catch (const parse_error& e) {
        CHECK(e.column() == 3);
    }
}

TEST_CASE("rook placement rejects attacking points") {
    CHECK_THROWS_AS(RookPlacement({{1, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RookPlacement({{1, 1}, {2, 1}}), std::invalid_argument);
    CHECK(RookPlacement({{2, 1}, {1, 3}}).points() == std::vector<GridPoint>{{1, 3}, {2, 1}});
}
