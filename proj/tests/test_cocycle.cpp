#include <catch2/catch_amalgamated.hpp>

#include <majiq/cocycle.hpp>

using namespace majiq;

TEST_CASE("parameter canonicalization", "[cocycle]") {
    auto c1 = std::get<Rank1Cocycle>(make_rank1(4, 5));
    CHECK(c1.a == 1);
    auto c2 = std::get<Rank2Cocycle>(make_rank2(4, 2, 5, 3, -1));
    CHECK(c2.a == 1);
    CHECK(c2.b == 1);  // reduced mod gcd(4,2)
    CHECK(c2.c == 1);
    auto c3 = std::get<Rank3Cocycle>(make_rank3(3, {4, -1, 0, 3, 1, 2, 5}));
    CHECK(c3.a == std::array<long, 7>{1, 2, 0, 0, 1, 2, 2});
}

TEST_CASE("group and modulus of each family", "[cocycle]") {
    CHECK(group_of(make_rank1(6, 1)) == AbGroup({6}));
    CHECK(group_of(make_rank2(4, 2, 0, 0, 0)) == AbGroup({4, 2}));
    CHECK(group_of(make_rank3(2, {})) == AbGroup({2, 2, 2}));
    CHECK(value_modulus(make_rank1(6, 1)) == 6);
    CHECK(value_modulus(make_rank2(4, 2, 0, 0, 0)) == 4);
    CHECK(value_modulus(make_rank2(4, 6, 0, 0, 0)) == 12);
    CHECK(value_modulus(make_rank3(5, {})) == 5);
}

TEST_CASE("hand-computed cocycle values", "[cocycle]") {
    AbGroup Z4({4});
    Cocycle3 r1 = make_rank1(4, 1);
    CHECK(eval3_root(r1, make_elt(Z4, {1}), make_elt(Z4, {3}), make_elt(Z4, {2})) ==
          RootOfUnity::zeta(4, 1));
    CHECK(eval3_root(r1, make_elt(Z4, {2}), make_elt(Z4, {3}), make_elt(Z4, {3})) ==
          RootOfUnity::zeta(4, 2));
    CHECK(eval3_root(r1, make_elt(Z4, {1}), make_elt(Z4, {1}), make_elt(Z4, {1})).is_one());

    AbGroup G42({4, 2});
    Cocycle3 r2 = make_rank2(4, 2, 1, 1, 1);
    // carries: g-part floor((3+2)/4) = 1, h-part floor((1+1)/2) = 1
    CHECK(eval3_root(r2, make_elt(G42, {1, 1}), make_elt(G42, {3, 1}), make_elt(G42, {2, 1})) ==
          RootOfUnity::zeta(4, 1));
    // j = 0 kills the two zeta_n factors
    CHECK(eval3_root(r2, make_elt(G42, {1, 0}), make_elt(G42, {3, 1}), make_elt(G42, {2, 1})) ==
          RootOfUnity::zeta(4, 1));
    CHECK(eval3_root(r2, make_elt(G42, {0, 1}), make_elt(G42, {3, 1}), make_elt(G42, {2, 1})) ==
          RootOfUnity::zeta(4, 0) * RootOfUnity::zeta(4, 2) * RootOfUnity::zeta(4, 2));

    AbGroup E8({2, 2, 2});
    Cocycle3 r3 = make_rank3(2, {1, 0, 0, 0, 0, 0, 1});
    CHECK(eval3_root(r3, make_elt(E8, {1, 1, 1}), make_elt(E8, {0, 1, 0}),
                     make_elt(E8, {1, 1, 0})) == RootOfUnity::zeta(2, 1));
    CHECK(eval3_root(r3, make_elt(E8, {1, 1, 1}), make_elt(E8, {1, 1, 0}),
                     make_elt(E8, {1, 1, 0})) == RootOfUnity::zeta(2, 1) * RootOfUnity::zeta(2, 1));
}

TEST_CASE("representatives satisfy the 3-cocycle identity", "[cocycle]") {
    for (long m : {2L, 3L, 4L, 6L})
        for (long a = 0; a < m; ++a) {
            std::string why;
            INFO("rank1(" << m << ";" << a << ") " << why);
            CHECK(check_3cocycle(make_rank1(m, a), &why));
        }
    for (long a : {0L, 1L, 3L})
        for (long b : {0L, 1L})
            for (long c : {0L, 1L}) {
                std::string why;
                INFO("rank2(4,2;" << a << "," << b << "," << c << ") " << why);
                CHECK(check_3cocycle(make_rank2(4, 2, a, b, c), &why));
            }
    for (long a = 0; a < 3; ++a)
        for (long c = 0; c < 3; ++c) {
            std::string why;
            INFO("rank2(3,3;" << a << ",1," << c << ") " << why);
            CHECK(check_3cocycle(make_rank2(3, 3, a, 1, c), &why));
        }
    {
        std::string why;
        INFO("rank2(9,3;2,1,2) " << why);
        CHECK(check_3cocycle(make_rank2(9, 3, 2, 1, 2), &why));
    }
}

TEST_CASE("all rank-3 cocycles over Z(2)^3 pass the direct check", "[cocycle]") {
    for (long bits = 0; bits < 128; ++bits) {
        std::array<long, 7> a{};
        for (int t = 0; t < 7; ++t) a[t] = (bits >> t) & 1;
        std::string why;
        INFO("rank3(2;...) bits=" << bits << " " << why);
        CHECK(check_3cocycle(make_rank3(2, a), &why));
    }
}

TEST_CASE("rank-3 template certification covers every parameter tuple", "[cocycle]") {
    std::string why;
    INFO(why);
    CHECK(certify_rank3_templates(2, &why));
    CHECK(certify_rank3_templates(3, &why));

    // the certificate and the direct check agree on a sample at p = 3
    CHECK(check_3cocycle(make_rank3(3, {0, 1, 2, 0, 1, 0, 2})));
    CHECK(check_3cocycle(make_rank3(3, {1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("checker rejects corrupted tables", "[cocycle]") {
    Cocycle3 phi = make_rank2(4, 2, 1, 1, 1);
    AbGroup G = group_of(phi);
    GrpElt bad1 = make_elt(G, {1, 1});
    GrpElt bad2 = make_elt(G, {2, 0});
    GrpElt bad3 = make_elt(G, {3, 1});
    auto corrupted = [&](const GrpElt& x, const GrpElt& y, const GrpElt& z) {
        RootOfUnity v = eval3_root(phi, x, y, z);
        if (x == bad1 && y == bad2 && z == bad3) v = v * RootOfUnity::zeta(4, 1);
        return v;
    };
    std::string why;
    CHECK(!check_3cocycle(G, corrupted, &why));
    CHECK(!why.empty());

    auto denormalized = [&](const GrpElt& x, const GrpElt& y, const GrpElt& z) {
        RootOfUnity v = eval3_root(phi, x, y, z);
        if (is_identity(x)) v = v * RootOfUnity::zeta(4, 2);
        return v;
    };
    CHECK(!check_3cocycle(G, denormalized, &why));
}

TEST_CASE("induced 2-cocycle: general and closed forms agree", "[cocycle]") {
    for (long m : {4L, 6L})
        for (long a = 0; a < m; ++a) {
            Cocycle3 phi = make_rank1(m, a);
            AbGroup G = group_of(phi);
            for (const auto& e : enumerate(G))
                for (const auto& f : enumerate(G))
                    for (const auto& s : enumerate(G))
                        CHECK(phi_tilde(phi, e, f, s) == phi_tilde_explicit(phi, e, f, s));
        }
    for (long a : {0L, 1L, 2L, 3L})
        for (long b : {0L, 1L})
            for (long c : {0L, 1L}) {
                Cocycle3 phi = make_rank2(4, 2, a, b, c);
                AbGroup G = group_of(phi);
                for (const auto& e : enumerate(G))
                    for (const auto& f : enumerate(G))
                        for (const auto& s : enumerate(G))
                            CHECK(phi_tilde(phi, e, f, s) == phi_tilde_explicit(phi, e, f, s));
            }
    CHECK_THROWS_AS(phi_tilde_explicit(make_rank3(2, {}), GrpElt{{0, 0, 0}}, GrpElt{{0, 0, 0}},
                                       GrpElt{{0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("induced 2-cocycles pass the 2-cocycle check", "[cocycle]") {
    for (const Cocycle3& phi :
         {make_rank2(4, 2, 3, 1, 1), make_rank1(9, 2), make_rank3(2, {1, 0, 1, 0, 0, 1, 1})}) {
        AbGroup G = group_of(phi);
        for (const auto& sigma : enumerate(G)) {
            auto f2 = [&](const GrpElt& e, const GrpElt& f) { return phi_tilde(phi, e, f, sigma); };
            std::string why;
            INFO(to_string(phi) << " at sigma=" << to_string(sigma) << " " << why);
            CHECK(check_2cocycle(G, f2, &why));
        }
    }
}

TEST_CASE("induced 2-cocycle on a cyclic group is symmetric", "[cocycle]") {
    for (long m : {4L, 9L})
        for (long a = 0; a < m; ++a) {
            Cocycle3 phi = make_rank1(m, a);
            AbGroup G = group_of(phi);
            for (const auto& sigma : enumerate(G))
                for (const auto& x : enumerate(G))
                    for (const auto& y : enumerate(G))
                        CHECK(phi_tilde(phi, x, y, sigma) == phi_tilde(phi, y, x, sigma));
        }
}

TEST_CASE("twisted star powers of the generators", "[cocycle]") {
    // over Z(m)xZ(n) with base sigma = g: g^{*i} picks up zeta_m^{-a(i-1)}, h^{*i} nothing
    struct Case {
        long m, n, a, b, c;
    };
    for (Case cs : {Case{4, 2, 1, 1, 1}, Case{9, 3, 2, 1, 2}}) {
        Cocycle3 phi = make_rank2(cs.m, cs.n, cs.a, cs.b, cs.c);
        AbGroup G = group_of(phi);
        GrpElt g = make_elt(G, {1, 0});
        GrpElt h = make_elt(G, {0, 1});
        long L = value_modulus(phi);
        for (long i = 1; i <= cs.m; ++i) {
            CHECK(twisted_power_scalar(phi, g, g, i) ==
                  embed(RootOfUnity::zeta(cs.m, -cs.a * (i - 1)), L));
            if (i <= cs.n) CHECK(twisted_power_scalar(phi, g, h, i).is_one());
        }
    }
    // cyclic case, base sigma = e
    for (long m : {4L, 8L})
        for (long a = 1; a < m; a += 2) {
            Cocycle3 phi = make_rank1(m, a);
            AbGroup G = group_of(phi);
            GrpElt e = make_elt(G, {1});
            for (long i = 1; i <= m; ++i)
                CHECK(twisted_power_scalar(phi, e, e, i) == RootOfUnity::zeta(m, -a * (i - 1)));
        }
    CHECK(twisted_power_scalar(make_rank1(4, 1), GrpElt{{1}}, GrpElt{{1}}, 0).is_one());
}

TEST_CASE("cocycle text round trips", "[cocycle]") {
    for (const Cocycle3& phi : {make_rank1(7, 3), make_rank2(4, 2, 1, 0, 1),
                                make_rank3(3, {0, 1, 2, 0, 1, 0, 2})}) {
        CHECK(to_string(cocycle_from_string(to_string(phi))) == to_string(phi));
    }
    CHECK(to_string(cocycle_from_string("rank2( 4 , 2 ; 1 , 0 , 1 )")) == "rank2(4,2;1,0,1)");
    CHECK_THROWS_AS(cocycle_from_string("rank2(4;1,0,1)"), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_string("rank4(4;1)"), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_string("rank3(3;1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_string("rank1(3,1)"), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_string("rank1(x;1)"), std::invalid_argument);
}
