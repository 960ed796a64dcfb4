#pragma once

// Shared fixtures for the unit and acceptance suites: bimodule structures
// assembled from the closed-form action tables, independent of the
// constructor in majid.hpp, so the two can be compared entry by entry.

#include <majiq/majid.hpp>

#include <numeric>
#include <vector>

namespace majiq::testing {

// chi(f) read off a finished structure through f |> X = (f . X_1) . f^{-1}
inline RootOfUnity observed_chi(const MajidStructure& M, size_t s, const GrpElt& f) {
    const AbGroup& G = M.group();
    Arrow base{identity(G), s};
    return M.left_scalar(f, base) * M.right_scalar(M.left_moved(f, base), inv(G, f));
}

// Tables over Z(m)xZ(n) with two species X (class g) and Y (class h):
//   (g^i h^j) . X_(s,t) = zeta_m^{a[(s+1)/m]i} zeta_n^{b[(s+1)/m]j} X_(i+s,j+t)
//   (g^i h^j) . Y_(s,t) = zeta_n^{c[(t+1)/n]j} Y_(i+s,j+t)
//   X_(i,j) . g^s h^t  = (zeta_m^a l1)^{-s} l2^{-t} X_(i+s,j+t)
//   Y_(i,j) . g^s h^t  = (zeta_n^b e1)^{-s} (zeta_n^c e2)^{-t} Y_(i+s,j+t)
inline MajidStructure explicit_rank2(long m, long n, long a, long b, long c, RootOfUnity l1,
                                     RootOfUnity l2, RootOfUnity e1, RootOfUnity e2) {
    Cocycle3 phi = make_rank2(m, n, a, b, c);
    AbGroup G = group_of(phi);
    long M = std::lcm(value_modulus(phi), std::lcm(std::lcm(l1.modulus, l2.modulus),
                                                   std::lcm(e1.modulus, e2.modulus)));
    const long N = G.order();
    auto all = enumerate(G);
    auto make_table = [&]() {
        return std::vector<std::vector<RootOfUnity>>(N,
                                                     std::vector<RootOfUnity>(N, RootOfUnity::one(M)));
    };
    auto LX = make_table(), RX = make_table(), LY = make_table(), RY = make_table();
    for (long fi = 0; fi < N; ++fi)
        for (long xi = 0; xi < N; ++xi) {
            long i = all[fi].c[0], j = all[fi].c[1];
            long s = all[xi].c[0], t = all[xi].c[1];
            LX[fi][xi] = embed(RootOfUnity::zeta(m, a * ((s + 1) / m) * i), M) *
                         embed(RootOfUnity::zeta(n, b * ((s + 1) / m) * j), M);
            LY[fi][xi] = embed(RootOfUnity::zeta(n, c * ((t + 1) / n) * j), M);
        }
    for (long xi = 0; xi < N; ++xi)
        for (long fi = 0; fi < N; ++fi) {
            long s = all[fi].c[0], t = all[fi].c[1];
            RX[xi][fi] = pow(embed(RootOfUnity::zeta(m, a), M) * embed(l1, M), -s) *
                         pow(embed(l2, M), -t);
            RY[xi][fi] = pow(embed(RootOfUnity::zeta(n, b), M) * embed(e1, M), -s) *
                         pow(embed(RootOfUnity::zeta(n, c), M) * embed(e2, M), -t);
        }
    // chi metadata comes from the tables themselves (f |> X), not from the
    // library's character extension
    std::vector<SpeciesSpec> sp{
        SpeciesSpec{make_elt(G, {1, 0}), "X", std::vector<RootOfUnity>(N, RootOfUnity::one(M))},
        SpeciesSpec{make_elt(G, {0, 1}), "Y", std::vector<RootOfUnity>(N, RootOfUnity::one(M))}};
    MajidStructure built =
        MajidStructure::from_tables(phi, sp, {LX, LY}, {RX, RY});
    for (size_t s = 0; s < 2; ++s) {
        std::vector<RootOfUnity> chi;
        for (const auto& f : enumerate(G)) chi.push_back(observed_chi(built, s, f));
        sp[s].chi = std::move(chi);
    }
    return MajidStructure::from_tables(phi, sp, {LX, LY}, {RX, RY});
}

// Tables over Z(m) with species X (class e^alpha) and Y (class e^beta):
//   e^i . X_j = zeta_m^{a[(j+alpha)/m]i} X_{i+j},   X_i . e^j = (zeta_m^{a alpha} mu1)^{-j} X_{i+j}
inline MajidStructure explicit_rank1(long m, long a, long alpha, long beta, RootOfUnity mu1,
                                     RootOfUnity mu2) {
    Cocycle3 phi = make_rank1(m, a);
    AbGroup G = group_of(phi);
    long M = std::lcm(value_modulus(phi), std::lcm(mu1.modulus, mu2.modulus));
    const long N = G.order();
    auto make_table = [&]() {
        return std::vector<std::vector<RootOfUnity>>(N,
                                                     std::vector<RootOfUnity>(N, RootOfUnity::one(M)));
    };
    auto LX = make_table(), RX = make_table(), LY = make_table(), RY = make_table();
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            LX[i][j] = embed(RootOfUnity::zeta(m, a * ((j + alpha) / m) * i), M);
            LY[i][j] = embed(RootOfUnity::zeta(m, a * ((j + beta) / m) * i), M);
            RX[i][j] = pow(embed(RootOfUnity::zeta(m, a * alpha), M) * embed(mu1, M), -j);
            RY[i][j] = pow(embed(RootOfUnity::zeta(m, a * beta), M) * embed(mu2, M), -j);
        }
    std::vector<SpeciesSpec> sp{
        SpeciesSpec{make_elt(G, {alpha}), "X", std::vector<RootOfUnity>(N, RootOfUnity::one(M))},
        SpeciesSpec{make_elt(G, {beta}), "Y", std::vector<RootOfUnity>(N, RootOfUnity::one(M))}};
    MajidStructure built = MajidStructure::from_tables(phi, sp, {LX, LY}, {RX, RY});
    for (size_t s = 0; s < 2; ++s) {
        std::vector<RootOfUnity> chi;
        for (const auto& f : enumerate(G)) chi.push_back(observed_chi(built, s, f));
        sp[s].chi = std::move(chi);
    }
    return MajidStructure::from_tables(phi, sp, {LX, LY}, {RX, RY});
}

// Library-route counterparts: chi extended from generator values.
inline MajidStructure general_rank2(long m, long n, long a, long b, long c, RootOfUnity l1,
                                    RootOfUnity l2, RootOfUnity e1, RootOfUnity e2) {
    Cocycle3 phi = make_rank2(m, n, a, b, c);
    AbGroup G = group_of(phi);
    long M = std::lcm(value_modulus(phi), std::lcm(std::lcm(l1.modulus, l2.modulus),
                                                   std::lcm(e1.modulus, e2.modulus)));
    GrpElt g = make_elt(G, {1, 0}), h = make_elt(G, {0, 1});
    return MajidStructure(
        phi, {SpeciesSpec{g, "X", extend_character(phi, g, {l1, l2}, M)},
              SpeciesSpec{h, "Y", extend_character(phi, h, {e1, e2}, M)}});
}

inline MajidStructure general_rank1(long m, long a, long alpha, long beta, RootOfUnity mu1,
                                    RootOfUnity mu2) {
    Cocycle3 phi = make_rank1(m, a);
    AbGroup G = group_of(phi);
    long M = std::lcm(value_modulus(phi), std::lcm(mu1.modulus, mu2.modulus));
    GrpElt gx = make_elt(G, {alpha}), gy = make_elt(G, {beta});
    return MajidStructure(phi, {SpeciesSpec{gx, "X", extend_character(phi, gx, {mu1}, M)},
                                SpeciesSpec{gy, "Y", extend_character(phi, gy, {mu2}, M)}});
}

}  // namespace majiq::testing
