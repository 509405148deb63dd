#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nwg/cartan.hpp"
#include "test_util.hpp"

using namespace nwg;
using namespace nwg::testing;

namespace {

const CartanType kAllTypes[] = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'B', 2}, {'B', 3},
    {'B', 4}, {'B', 5}, {'C', 3}, {'C', 4}, {'C', 5}, {'D', 4}, {'D', 5}, {'D', 6},
    {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2},
};

Matrix permuted(const Matrix& a, const std::vector<int>& p) {
    int n = static_cast<int>(a.size());
    Matrix b(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[p[i]][p[j]] = a[i][j];
    return b;
}

Int count_norm(const RootDatum& rd, Int value) {
    return std::count(rd.norm.begin(), rd.norm.end(), value);
}

}  // namespace

TEST_CASE("template Cartan matrices carry the marked bonds") {
    Matrix a3 = cartan_matrix({'A', 3});
    CHECK(a3 == Matrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});

    // B: the last simple is short, C: the last simple is long
    Matrix b3 = cartan_matrix({'B', 3});
    CHECK(b3[1][2] == -2);
    CHECK(b3[2][1] == -1);
    Matrix c3 = cartan_matrix({'C', 3});
    CHECK(c3[1][2] == -1);
    CHECK(c3[2][1] == -2);

    Matrix d4 = cartan_matrix({'D', 4});
    CHECK(d4[1][3] == -1);
    CHECK(d4[2][3] == 0);

    Matrix f4 = cartan_matrix({'F', 4});
    CHECK(f4[1][2] == -2);
    CHECK(f4[2][1] == -1);

    Matrix g2 = cartan_matrix({'G', 2});
    CHECK(g2 == Matrix{{2, -1}, {-3, 2}});

    CHECK(to_string(CartanType{'B', 3}) == "B3");
    CHECK(to_string(CartanType{'G', 2}) == "G2");
}

TEST_CASE("ranks outside each family are rejected") {
    CHECK_THROWS_AS(cartan_matrix({'A', 0}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'C', 2}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'D', 3}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'E', 5}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'E', 9}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'F', 3}), input_error);
    CHECK_THROWS_AS(cartan_matrix({'G', 3}), input_error);
    CHECK_THROWS_AS(weyl_group_order({'H', 3}), input_error);
}

TEST_CASE("root counts and group orders") {
    CHECK(positive_root_count({'A', 5}) == 15);
    CHECK(positive_root_count({'B', 4}) == 16);
    CHECK(positive_root_count({'C', 4}) == 16);
    CHECK(positive_root_count({'D', 5}) == 20);
    CHECK(positive_root_count({'E', 6}) == 36);
    CHECK(positive_root_count({'E', 7}) == 63);
    CHECK(positive_root_count({'E', 8}) == 120);
    CHECK(positive_root_count({'F', 4}) == 24);
    CHECK(positive_root_count({'G', 2}) == 6);

    CHECK(weyl_group_order({'A', 1}) == 2);
    CHECK(weyl_group_order({'A', 4}) == 120);
    CHECK(weyl_group_order({'B', 2}) == 8);
    CHECK(weyl_group_order({'B', 5}) == 3840);
    CHECK(weyl_group_order({'C', 5}) == 3840);
    CHECK(weyl_group_order({'D', 4}) == 192);
    CHECK(weyl_group_order({'D', 6}) == 23040);
    CHECK(weyl_group_order({'E', 6}) == 51840);
    CHECK(weyl_group_order({'E', 7}) == 2903040);
    CHECK(weyl_group_order({'E', 8}) == 696729600);
    CHECK(weyl_group_order({'F', 4}) == 1152);
    CHECK(weyl_group_order({'G', 2}) == 12);
}

TEST_CASE("generated root systems have the right size and norm spread") {
    for (CartanType t : kAllTypes) {
        CAPTURE(to_string(t));
        RootDatum rd = generate_root_system(cartan_matrix(t));
        CHECK(static_cast<Int>(rd.positive.size()) == positive_root_count(t));
        Int ratio = rd.max_norm / rd.min_norm;
        CHECK(rd.max_norm % rd.min_norm == 0);
        if (t.letter == 'G')
            CHECK(ratio == 3);
        else if (t.letter == 'B' || t.letter == 'C' || t.letter == 'F')
            CHECK(ratio == 2);
        else
            CHECK(ratio == 1);
    }
}

TEST_CASE("short and long root counts in the non-simply-laced families") {
    RootDatum b3 = generate_root_system(cartan_matrix({'B', 3}));
    CHECK(count_norm(b3, b3.min_norm) == 3);
    CHECK(count_norm(b3, b3.max_norm) == 6);

    RootDatum c3 = generate_root_system(cartan_matrix({'C', 3}));
    CHECK(count_norm(c3, c3.min_norm) == 6);
    CHECK(count_norm(c3, c3.max_norm) == 3);

    RootDatum f4 = generate_root_system(cartan_matrix({'F', 4}));
    CHECK(count_norm(f4, f4.min_norm) == 12);
    CHECK(count_norm(f4, f4.max_norm) == 12);

    RootDatum g2 = generate_root_system(cartan_matrix({'G', 2}));
    CHECK(count_norm(g2, g2.min_norm) == 3);
    CHECK(count_norm(g2, g2.max_norm) == 3);
}

TEST_CASE("frozen positive systems and highest roots") {
    RootDatum b2 = generate_root_system(cartan_matrix({'B', 2}));
    CHECK(b2.positive ==
          std::vector<Vec>{Vec{0, 1}, Vec{1, 0}, Vec{1, 1}, Vec{1, 2}});

    RootDatum g2 = generate_root_system(cartan_matrix({'G', 2}));
    CHECK(std::count(g2.positive.begin(), g2.positive.end(), Vec{3, 2}) == 1);

    auto contains = [](const RootDatum& rd, const Vec& x) {
        return std::count(rd.positive.begin(), rd.positive.end(), x) == 1;
    };
    CHECK(contains(generate_root_system(cartan_matrix({'A', 3})), Vec{1, 1, 1}));
    CHECK(contains(generate_root_system(cartan_matrix({'D', 4})), Vec{1, 2, 1, 1}));
    // branch simple sits at the last index in this numbering
    CHECK(contains(generate_root_system(cartan_matrix({'E', 6})), Vec{1, 2, 3, 2, 1, 2}));
    CHECK(contains(generate_root_system(cartan_matrix({'E', 8})),
                   Vec{2, 4, 6, 5, 4, 3, 2, 3}));
}

TEST_CASE("root generation rejects malformed, infinite, and asymmetric input") {
    CHECK_THROWS_AS(generate_root_system(Matrix{{1}}), input_error);
    CHECK_THROWS_AS(generate_root_system(Matrix{{2, 1}, {1, 2}}), input_error);
    CHECK_THROWS_AS(generate_root_system(Matrix{{2, 0}, {-1, 2}}), input_error);

    // affine and hyperbolic closures blow through the budget
    CHECK_THROWS_AS(generate_root_system(Matrix{{2, -2}, {-2, 2}}), theorem_error);
    CHECK_THROWS_AS(generate_root_system(Matrix{{2, -1}, {-4, 2}}), theorem_error);

    // ratios around the triangle multiply to 8, so no symmetrizer exists
    Matrix skew{{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}};
    CHECK_THROWS_AS(generate_root_system(skew), theorem_error);
}

TEST_CASE("classification round-trips every template matrix") {
    for (CartanType t : kAllTypes) {
        CAPTURE(to_string(t));
        auto got = classify_cartan(cartan_matrix(t));
        REQUIRE(got.has_value());
        CHECK(*got == t);
    }
}

TEST_CASE("classification is invariant under simultaneous permutation") {
    std::mt19937_64 rng(913);
    for (CartanType t : kAllTypes) {
        CAPTURE(to_string(t));
        std::vector<int> p(t.rank);
        std::iota(p.begin(), p.end(), 0);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(p.begin(), p.end(), rng);
            auto got = classify_cartan(permuted(cartan_matrix(t), p));
            REQUIRE(got.has_value());
            CHECK(*got == t);
        }
    }
}

TEST_CASE("a rank-2 double bond reports as B2 either way around") {
    auto a = classify_cartan(Matrix{{2, -2}, {-1, 2}});
    auto b = classify_cartan(Matrix{{2, -1}, {-2, 2}});
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == CartanType{'B', 2});
    CHECK(*b == CartanType{'B', 2});
}

TEST_CASE("matrices outside the finite families classify as nothing") {
    CHECK_FALSE(classify_cartan(Matrix{}).has_value());
    CHECK_FALSE(classify_cartan(Matrix{{2, 0}, {0, 2}}).has_value());
    CHECK_FALSE(classify_cartan(Matrix{{2, -2}, {-2, 2}}).has_value());

    // affine G2 has a triple bond on three vertices
    Matrix g2aff{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};
    CHECK_FALSE(classify_cartan(g2aff).has_value());

    // cycle (affine A2)
    Matrix cyc{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    CHECK_FALSE(classify_cartan(cyc).has_value());

    // two double bonds (affine C2)
    Matrix c2aff{{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}};
    CHECK_FALSE(classify_cartan(c2aff).has_value());

    // interior double bond on a path of five is not F4
    Matrix f5{{2, -1, 0, 0, 0},
              {-1, 2, -2, 0, 0},
              {0, -1, 2, -1, 0},
              {0, 0, -1, 2, -1},
              {0, 0, 0, -1, 2}};
    CHECK_FALSE(classify_cartan(f5).has_value());

    // degree-four node (affine D4)
    Matrix star5(5, std::vector<Int>(5, 0));
    for (int i = 0; i < 5; ++i) star5[i][i] = 2;
    for (int leaf = 1; leaf < 5; ++leaf) star5[0][leaf] = star5[leaf][0] = -1;
    CHECK_FALSE(classify_cartan(star5).has_value());

    // two branch nodes (affine D5)
    Matrix d5aff(6, std::vector<Int>(6, 0));
    for (int i = 0; i < 6; ++i) d5aff[i][i] = 2;
    auto bond = [&](int i, int j) { d5aff[i][j] = d5aff[j][i] = -1; };
    bond(0, 1);
    bond(1, 2);
    bond(2, 3);
    bond(1, 4);
    bond(2, 5);
    CHECK_FALSE(classify_cartan(d5aff).has_value());

    // arms (2,2,2) and (1,3,3) are the affine E trees
    Matrix e6aff(7, std::vector<Int>(7, 0));
    for (int i = 0; i < 7; ++i) e6aff[i][i] = 2;
    auto bond6 = [&](int i, int j) { e6aff[i][j] = e6aff[j][i] = -1; };
    bond6(0, 1);
    bond6(1, 2);
    bond6(2, 3);
    bond6(3, 4);
    bond6(2, 5);
    bond6(5, 6);
    CHECK_FALSE(classify_cartan(e6aff).has_value());
}

TEST_CASE("diagram shapes of induced subquivers") {
    Quiver path4 = path_quiver(4);
    auto full = diagram_type(path4, {0, 1, 2, 3});
    REQUIRE(full.has_value());
    CHECK(*full == CartanType{'A', 4});
    auto pair = diagram_type(path4, {0, 1});
    REQUIRE(pair.has_value());
    CHECK(*pair == CartanType{'A', 2});
    CHECK_FALSE(diagram_type(path4, {0, 2}).has_value());

    Quiver d4 = Quiver::make(4);
    d4.add_edge(0, 1);
    d4.add_edge(1, 2);
    d4.add_edge(1, 3);
    auto star = diagram_type(d4, {0, 1, 2, 3});
    REQUIRE(star.has_value());
    CHECK(*star == CartanType{'D', 4});

    CHECK_FALSE(diagram_type(cycle_quiver(3), {0, 1, 2}).has_value());
    CHECK_FALSE(diagram_type(kronecker_quiver(2), {0, 1}).has_value());
    CHECK_FALSE(diagram_type(jordan_quiver(1), {0}).has_value());
    CHECK_FALSE(diagram_type(path4, {}).has_value());
}

TEST_CASE("Dynkin recognition over whole quivers") {
    CHECK(is_dynkin_type(path_quiver(5)));

    Quiver forest = Quiver::make(5);
    forest.add_edge(0, 1);
    forest.add_edge(2, 3);
    forest.add_edge(3, 4);
    CHECK(is_dynkin_type(forest));

    Quiver e6 = Quiver::make(6);
    e6.add_edge(0, 1);
    e6.add_edge(1, 2);
    e6.add_edge(2, 3);
    e6.add_edge(3, 4);
    e6.add_edge(2, 5);
    CHECK(is_dynkin_type(e6));

    CHECK_FALSE(is_dynkin_type(cycle_quiver(4)));
    CHECK_FALSE(is_dynkin_type(kronecker_quiver(2)));
    CHECK_FALSE(is_dynkin_type(jordan_quiver(1)));
}

TEST_CASE("affine recognition and radical vectors") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(is_affine_type(cycle_quiver(n)));
        CHECK(affine_delta(cycle_quiver(n)) == Vec(n, 1));
    }
    CHECK(is_affine_type(kronecker_quiver(2)));
    CHECK(affine_delta(kronecker_quiver(2)) == Vec{1, 1});
    CHECK(is_affine_type(jordan_quiver(1)));
    CHECK(affine_delta(jordan_quiver(1)) == Vec{1});

    Quiver d4aff = Quiver::make(5);
    for (int leaf = 1; leaf < 5; ++leaf) d4aff.add_edge(0, leaf);
    CHECK(is_affine_type(d4aff));
    CHECK(affine_delta(d4aff) == Vec{2, 1, 1, 1, 1});

    Quiver e6aff = Quiver::make(7);
    e6aff.add_edge(0, 1);
    e6aff.add_edge(1, 2);
    e6aff.add_edge(2, 3);
    e6aff.add_edge(3, 4);
    e6aff.add_edge(2, 5);
    e6aff.add_edge(5, 6);
    CHECK(is_affine_type(e6aff));
    CHECK(affine_delta(e6aff) == Vec{1, 2, 3, 2, 1, 2, 1});

    CHECK_FALSE(is_affine_type(path_quiver(3)));
    CHECK_FALSE(is_affine_type(jordan_quiver(2)));
    CHECK_FALSE(is_affine_type(kronecker_quiver(3)));
    CHECK_FALSE(is_affine_type(triangle_pendant_quiver()));

    Quiver d5star = Quiver::make(6);
    for (int leaf = 1; leaf < 6; ++leaf) d5star.add_edge(0, leaf);
    CHECK_FALSE(is_affine_type(d5star));

    CHECK_THROWS_AS(affine_delta(path_quiver(2)), input_error);
}
