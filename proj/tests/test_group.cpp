#include <catch2/catch_amalgamated.hpp>

#include <majiq/group.hpp>

#include <set>

using namespace majiq;

TEST_CASE("group invariants", "[group]") {
    AbGroup G({4, 2});
    CHECK(G.order() == 8);
    CHECK(G.exponent() == 4);
    CHECK(G.rank() == 2);

    AbGroup C9({9});
    CHECK(C9.order() == 9);
    CHECK(C9.exponent() == 9);

    AbGroup E({2, 2, 2});
    CHECK(E.order() == 8);
    CHECK(E.exponent() == 2);

    CHECK_THROWS_AS(AbGroup({}), std::invalid_argument);
    CHECK_THROWS_AS(AbGroup({4, 0}), std::invalid_argument);
}

TEST_CASE("group law on a full small group", "[group]") {
    AbGroup G({4, 2});
    auto all = enumerate(G);
    REQUIRE(all.size() == 8);

    std::set<GrpElt> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 8);

    for (const auto& a : all) {
        CHECK(mul(G, a, identity(G)) == a);
        CHECK(mul(G, a, inv(G, a)) == identity(G));
        for (const auto& b : all) {
            CHECK(mul(G, a, b) == mul(G, b, a));
            for (const auto& c : all)
                CHECK(mul(G, mul(G, a, b), c) == mul(G, a, mul(G, b, c)));
        }
    }
}

TEST_CASE("powers against repeated multiplication", "[group]") {
    AbGroup G({6, 4});
    GrpElt a = make_elt(G, {1, 3});
    GrpElt acc = identity(G);
    for (long k = 0; k <= 30; ++k) {
        CHECK(gpow(G, a, k) == acc);
        acc = mul(G, acc, a);
    }
    CHECK(gpow(G, a, -1) == inv(G, a));
    CHECK(gpow(G, a, -7) == inv(G, gpow(G, a, 7)));
}

TEST_CASE("element orders", "[group]") {
    AbGroup G({4, 2});
    CHECK(element_order(G, make_elt(G, {0, 0})) == 1);
    CHECK(element_order(G, make_elt(G, {1, 0})) == 4);
    CHECK(element_order(G, make_elt(G, {2, 1})) == 2);
    CHECK(element_order(G, make_elt(G, {1, 1})) == 4);

    // oracle: smallest k >= 1 with a^k = 1
    AbGroup H({9, 3});
    for (const auto& a : enumerate(H)) {
        long k = 1;
        GrpElt acc = a;
        while (!is_identity(acc)) {
            acc = mul(H, acc, a);
            ++k;
        }
        CHECK(element_order(H, a) == k);
    }
}

TEST_CASE("canonical reduction of coordinates", "[group]") {
    AbGroup G({4, 2});
    CHECK(make_elt(G, {5, -1}) == make_elt(G, {1, 1}));
    CHECK(make_elt(G, {-4, 2}) == identity(G));
    CHECK_THROWS_AS(make_elt(G, {1}), std::invalid_argument);
    CHECK_THROWS_AS(mul(G, GrpElt{{1}}, identity(G)), std::invalid_argument);
}

TEST_CASE("enumeration order and indexing", "[group]") {
    AbGroup G({2, 3});
    auto all = enumerate(G);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == make_elt(G, {0, 0}));
    CHECK(all[1] == make_elt(G, {0, 1}));
    CHECK(all[2] == make_elt(G, {0, 2}));
    CHECK(all[3] == make_elt(G, {1, 0}));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (long i = 0; i < G.order(); ++i) CHECK(index_of(G, all[i]) == i);
    CHECK_THROWS_AS(element_at(G, 6), std::out_of_range);
}

TEST_CASE("group and element text forms", "[group]") {
    AbGroup G({4, 2});
    CHECK(to_string(G) == "Z(4)xZ(2)");
    CHECK(group_from_string("Z(4)xZ(2)") == G);
    CHECK(group_from_string(" Z(9) ") == AbGroup({9}));
    CHECK(group_from_string("Z(2)xZ(2)xZ(2)") == AbGroup({2, 2, 2}));
    CHECK_THROWS_AS(group_from_string("Z4xZ2"), std::invalid_argument);
    CHECK_THROWS_AS(group_from_string("Z(4)x"), std::invalid_argument);
    CHECK_THROWS_AS(group_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(group_from_string("Z(-2)"), std::invalid_argument);

    GrpElt a = make_elt(G, {3, 1});
    CHECK(to_string(a) == "(3,1)");
    CHECK(elt_from_string(G, "(3,1)") == a);
    CHECK(elt_from_string(G, " ( 3 , 1 ) ") == a);
    CHECK(elt_from_string(G, "(7,-1)") == a);
    CHECK_THROWS_AS(elt_from_string(G, "(3)"), std::invalid_argument);
    CHECK_THROWS_AS(elt_from_string(G, "3,1"), std::invalid_argument);
    CHECK_THROWS_AS(elt_from_string(G, "(a,b)"), std::invalid_argument);
}
