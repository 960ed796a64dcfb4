#pragma once

// Enumeration and machine verification of the finite families of graded
// structures this library models: solution sets of the two existence
// congruences, the admissible scalar quadruples/pairs for two-generator
// planes, and the fixed lists of records in dimensions p^3 and p^4.
//
// A ClassRecord stores exactly what a printed presentation carries: the
// group, the associator parameters, the group-like attached to each
// skew-primitive generator, the relation scalar per group generator, the
// claimed nilpotency orders and total dimension. verify_record rebuilds the
// arrow-space structure from that data alone and replays every claim.

#include <majiq/majid.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace majiq {

// ---------------------------------------------------------------------------
// Existence congruences. Solutions are canonical residues; each congruence
// only depends on x, y through the residues used below.

struct CongruenceSolutionSet {
    long x_modulus = 1;
    long y_modulus = 1;
    std::vector<std::pair<long, long>> solutions;  // lexicographic
};

// m x + n y + (m+1) b == 0 mod mn, canonical over (x mod n, y mod m)
inline CongruenceSolutionSet solve_congruence_A(long m, long n, long b) {
    if (m < 1 || n < 1) throw std::invalid_argument("solve_congruence_A: need m, n >= 1");
    CongruenceSolutionSet out{n, m, {}};
    long mn = m * n;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < m; ++y)
            if (positive_mod(m * x + n * y + (m + 1) * b, mn) == 0) out.solutions.push_back({x, y});
    return out;
}

// m (beta x + alpha y + 2 a alpha beta) + 2 a alpha beta == 0 mod m^2,
// canonical over (x mod m, y mod m)
inline CongruenceSolutionSet solve_congruence_B(long m, long alpha, long beta, long a) {
    if (m < 1) throw std::invalid_argument("solve_congruence_B: need m >= 1");
    CongruenceSolutionSet out{m, m, {}};
    long mm = m * m;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            if (positive_mod(m * (beta * x + alpha * y + 2 * a * alpha * beta) +
                                 2 * a * alpha * beta,
                             mm) == 0)
                out.solutions.push_back({x, y});
    return out;
}

// ---------------------------------------------------------------------------
// Admissible scalar tuples for the two-generator planes.

struct PlaneParamsRank2 {
    long m, n, a, b, c;
    RootOfUnity l1, l2, e1, e2;  // class-g species: (l1, l2); class-h species: (e1, e2)
};

struct PlaneParamsRank1 {
    long m, a, alpha, beta;
    RootOfUnity mu1, mu2;
};

// {l1 : l1^m = zeta_m^a, l1 != 1} x {e2 : e2^n = zeta_n^c, e2 != 1} x A,
// with l2 = zeta_n^x and e1 = zeta_m^y zeta_mn^b.
inline std::vector<PlaneParamsRank2> build_A_tilde(long m, long n, long a, long b, long c) {
    Rank2Cocycle r2 = std::get<Rank2Cocycle>(make_rank2(m, n, a, b, c));
    std::vector<PlaneParamsRank2> out;
    CongruenceSolutionSet A = solve_congruence_A(m, n, r2.b);
    for (long k1 = 0; k1 < m; ++k1) {
        RootOfUnity l1 = RootOfUnity::zeta(m * m, r2.a + m * k1);
        if (l1.is_one()) continue;
        for (long k2 = 0; k2 < n; ++k2) {
            RootOfUnity e2 = RootOfUnity::zeta(n * n, r2.c + n * k2);
            if (e2.is_one()) continue;
            for (auto [x, y] : A.solutions)
                out.push_back(PlaneParamsRank2{m, n, r2.a, r2.b, r2.c, l1,
                                               RootOfUnity::zeta(n, x),
                                               RootOfUnity::zeta(m * n, n * y + r2.b), e2});
        }
    }
    return out;
}

// {(mu1, mu2) : mu_i = zeta_{m^2}^{a alpha} zeta_m^x etc., mu1^{m+alpha} != 1,
//  mu2^{m+beta} != 1, (x,y) in B}
inline std::vector<PlaneParamsRank1> build_B_tilde(long m, long alpha, long beta, long a) {
    if (alpha <= 0 || alpha >= m || beta <= 0 || beta >= m)
        throw std::invalid_argument("build_B_tilde: classes must lie in (0, m)");
    std::vector<PlaneParamsRank1> out;
    CongruenceSolutionSet B = solve_congruence_B(m, alpha, beta, a);
    for (auto [x, y] : B.solutions) {
        RootOfUnity mu1 = RootOfUnity::zeta(m * m, a * alpha + m * x);
        RootOfUnity mu2 = RootOfUnity::zeta(m * m, a * beta + m * y);
        if (pow(mu1, m + alpha).is_one() || pow(mu2, m + beta).is_one()) continue;
        out.push_back(PlaneParamsRank1{m, positive_mod(a, m), alpha, beta, mu1, mu2});
    }
    return out;
}

// Quotient compatibility of a rank-2 plane with an extra relation g^s = h^t:
// zeta_m^{a(s-1)} l1^s == l2^t  and  zeta_g^{b(s-1)} e1^s == zeta_n^{c(t-1)} e2^t
// where zeta_g has order gcd(m, n).
inline bool quotient_compatible(const PlaneParamsRank2& P, long s, long t) {
    if (s <= 0 || s >= P.m || t <= 0 || t >= P.n)
        throw std::invalid_argument("quotient_compatible: need 0 < s < m and 0 < t < n");
    long M = std::lcm(std::lcm(P.m * P.m, P.n * P.n), P.m * P.n);
    long g = std::gcd(P.m, P.n);
    bool first = embed(RootOfUnity::zeta(P.m, P.a * (s - 1)), M) * pow(embed(P.l1, M), s) ==
                 pow(embed(P.l2, M), t);
    bool second = embed(RootOfUnity::zeta(g, P.b * (s - 1)), M) * pow(embed(P.e1, M), s) ==
                  embed(RootOfUnity::zeta(P.n, P.c * (t - 1)), M) * pow(embed(P.e2, M), t);
    return first && second;
}

// ---------------------------------------------------------------------------
// Classification records.

struct SpeciesData {
    std::string name;                 // generator symbol, "X" or "Y"
    GrpElt cls;                       // group-like in the coproduct of the generator
    std::vector<RootOfUnity> sigma;   // relation scalar per group generator:
                                      //   gen * X = sigma * X * gen
    long N = 0;                       // claimed nilpotency order
};

struct ClassRecord {
    std::string family;               // "p3.1".."p3.3", "p4.1".."p4.9",
                                      // "plane.rank2", "plane.rank1"
    AbGroup group = AbGroup({1});
    Cocycle3 cocycle;
    std::vector<std::string> gen_names;
    std::vector<SpeciesData> species;
    std::optional<RootOfUnity> q;     // X*Y = q * Y*X when two species
    long dim = 0;                     // claimed total dimension
    std::string note;                 // optional free-form caveat
    bool representative_only = true;  // parameter-indexed; twist-equivalent records
                                      // are not merged
    std::vector<std::pair<std::string, long>> params;  // generating parameters, for audit
};

namespace detail {

inline GrpElt generator(const AbGroup& G, size_t j) {
    GrpElt g = identity(G);
    g.c.at(j) = 1;
    return g;
}

}  // namespace detail

// Common modulus for rebuilding a record's structure.
inline long record_modulus(const ClassRecord& rec) {
    long M = value_modulus(rec.cocycle);
    for (const auto& s : rec.species)
        for (const auto& v : s.sigma) M = std::lcm(M, v.modulus);
    if (rec.q) M = std::lcm(M, rec.q->modulus);
    return M;
}

// Rebuild the arrow-space structure from the printed data alone: each
// generator's chi value is recovered from the relation scalar, then extended
// over the group.
inline MajidStructure build_structure(const ClassRecord& rec) {
    const AbGroup& G = rec.group;
    long M = record_modulus(rec);
    std::vector<SpeciesSpec> specs;
    for (const auto& s : rec.species) {
        if (s.sigma.size() != G.rank())
            throw std::invalid_argument("build_structure: one relation scalar per generator");
        std::vector<RootOfUnity> gen_values;
        for (size_t j = 0; j < G.rank(); ++j)
            gen_values.push_back(embed(
                chi_from_relation_scalar(rec.cocycle, s.cls, detail::generator(G, j), s.sigma[j]),
                M));
        specs.push_back(SpeciesSpec{s.cls, s.name, extend_character(rec.cocycle, s.cls, gen_values, M)});
    }
    return MajidStructure(rec.cocycle, std::move(specs));
}

// Presentations for the two-generator planes. Throws when a nilpotency
// scalar equals 1, since then no finite-dimensional record exists.
inline ClassRecord make_presentation(const PlaneParamsRank2& P) {
    AbGroup G({P.m, P.n});
    long M = std::lcm(std::lcm(P.m * P.m, P.n * P.n), P.m * P.n);
    RootOfUnity n1s = embed(RootOfUnity::zeta(P.m, P.a), M) * embed(P.l1, M);
    RootOfUnity n2s = embed(RootOfUnity::zeta(P.n, P.c), M) * embed(P.e2, M);
    if (n1s.is_one() || n2s.is_one())
        throw std::invalid_argument("make_presentation: unit nilpotency scalar, no finite record");
    ClassRecord rec;
    rec.family = "plane.rank2";
    rec.group = G;
    rec.cocycle = make_rank2(P.m, P.n, P.a, P.b, P.c);
    rec.gen_names = {"g", "h"};
    rec.species = {
        SpeciesData{"X", make_elt(G, {1, 0}), {n1s, embed(P.l2, M)}, n1s.order()},
        SpeciesData{"Y", make_elt(G, {0, 1}),
                    {embed(RootOfUnity::zeta(P.n, P.b), M) * embed(P.e1, M), n2s}, n2s.order()}};
    rec.q = inv(embed(P.l2, M));
    rec.dim = P.m * P.n * n1s.order() * n2s.order();
    rec.params = {{"m", P.m},           {"n", P.n},           {"a", P.a},
                  {"b", P.b},           {"c", P.c},           {"l1_exp", P.l1.exponent},
                  {"l1_mod", P.l1.modulus}, {"l2_exp", P.l2.exponent}, {"l2_mod", P.l2.modulus},
                  {"e1_exp", P.e1.exponent}, {"e1_mod", P.e1.modulus}, {"e2_exp", P.e2.exponent},
                  {"e2_mod", P.e2.modulus}};
    return rec;
}

inline ClassRecord make_presentation(const PlaneParamsRank1& P) {
    AbGroup G({P.m});
    long M = P.m * P.m;
    auto zm = [&](long e) { return embed(RootOfUnity::zeta(P.m, e), M); };
    RootOfUnity n1s = zm(P.a * P.alpha * P.alpha) * pow(embed(P.mu1, M), P.alpha);
    RootOfUnity n2s = zm(P.a * P.beta * P.beta) * pow(embed(P.mu2, M), P.beta);
    if (n1s.is_one() || n2s.is_one())
        throw std::invalid_argument("make_presentation: unit nilpotency scalar, no finite record");
    ClassRecord rec;
    rec.family = "plane.rank1";
    rec.group = G;
    rec.cocycle = make_rank1(P.m, P.a);
    rec.gen_names = {"e"};
    rec.species = {
        SpeciesData{"X", make_elt(G, {P.alpha}), {zm(P.a * P.alpha) * embed(P.mu1, M)},
                    n1s.order()},
        SpeciesData{"Y", make_elt(G, {P.beta}), {zm(P.a * P.beta) * embed(P.mu2, M)},
                    n2s.order()}};
    rec.q = zm(P.a * P.alpha * P.beta) * pow(embed(P.mu2, M), P.alpha);
    rec.dim = P.m * n1s.order() * n2s.order();
    rec.params = {{"m", P.m},
                  {"a", P.a},
                  {"alpha", P.alpha},
                  {"beta", P.beta},
                  {"mu1_exp", P.mu1.exponent},
                  {"mu1_mod", P.mu1.modulus},
                  {"mu2_exp", P.mu2.exponent},
                  {"mu2_mod", P.mu2.modulus}};
    return rec;
}

// ---------------------------------------------------------------------------
// The fixed lists in dimensions p^3 and p^4. Records are emitted verbatim by
// parameter range, families in order, parameters lexicographic; no
// equivalence-class deduplication is attempted.

namespace detail {

inline void require_prime(long p) {
    if (p < 2) throw std::invalid_argument("classification lists: p must be a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("classification lists: p must be a prime");
}

inline ClassRecord one_species_record(std::string family, AbGroup G, Cocycle3 phi,
                                      std::vector<std::string> gens, GrpElt cls,
                                      std::vector<RootOfUnity> sigma, long N, long dim,
                                      std::string note = "") {
    ClassRecord rec;
    rec.family = std::move(family);
    rec.group = std::move(G);
    rec.cocycle = std::move(phi);
    rec.gen_names = std::move(gens);
    rec.species = {SpeciesData{"X", std::move(cls), std::move(sigma), N}};
    rec.dim = dim;
    rec.note = std::move(note);
    return rec;
}

}  // namespace detail

inline std::vector<ClassRecord> list_p3(long p) {
    detail::require_prime(p);
    std::vector<ClassRecord> out;
    // family 1: cyclic group of order p, relation scalar of order p^2
    {
        AbGroup G({p});
        for (long a = 1; a < p; ++a) {
            Cocycle3 phi = make_rank1(p, a);
            for (long r = 0; r < p; ++r) {
                out.push_back(detail::one_species_record(
                    "p3.1", G, phi, {"g"}, make_elt(G, {1}),
                    {RootOfUnity::zeta(p * p, r * p + a)}, p * p, p * p * p));
                out.back().params = {{"a", a}, {"r", r}};
            }
        }
    }
    // family 2: elementary abelian of rank 2, first cocycle slot zero
    {
        AbGroup G({p, p});
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                if (b == 0 && c == 0) continue;
                Cocycle3 phi = make_rank2(p, p, 0, b, c);
                for (long u = 1; u < p; ++u)
                    for (long v = 0; v < p; ++v) {
                        out.push_back(detail::one_species_record(
                            "p3.2", G, phi, {"g", "h"}, make_elt(G, {1, 0}),
                            {RootOfUnity::zeta(p, u), RootOfUnity::zeta(p, v)}, p, p * p * p));
                        out.back().params = {{"b", b}, {"c", c}, {"u", u}, {"v", v}};
                    }
            }
    }
    // family 3: cyclic of order p^2, arrows attached to the p-th power
    {
        AbGroup G({p * p});
        for (long t = 1; t < p; ++t) {
            Cocycle3 phi = make_rank1(p * p, t * p);
            for (long alpha = 1; alpha < p * p; ++alpha) {
                if (alpha % p == 0) continue;
                out.push_back(detail::one_species_record(
                    "p3.3", G, phi, {"g"}, make_elt(G, {p}),
                    {RootOfUnity::zeta(p * p, alpha)}, p, p * p * p));
                out.back().params = {{"t", t}, {"alpha", alpha}};
            }
        }
    }
    return out;
}

inline std::vector<ClassRecord> list_p4(long p) {
    detail::require_prime(p);
    std::vector<ClassRecord> out;
    const long p2 = p * p, p3 = p * p * p, p4 = p * p * p * p;
    // family 1: two skew-commuting species over the rank-2 elementary group
    {
        AbGroup G({p, p});
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                if (b == 0 && c == 0) continue;
                Cocycle3 phi = make_rank2(p, p, 0, b, c);
                for (long alpha = 1; alpha < p; ++alpha)
                    for (long beta = 1; beta < p; ++beta)
                        for (long gamma = 0; gamma < p; ++gamma)
                            for (long eta = 0; eta < p; ++eta) {
                                ClassRecord rec;
                                rec.family = "p4.1";
                                rec.group = G;
                                rec.cocycle = phi;
                                rec.gen_names = {"g", "h"};
                                rec.species = {
                                    SpeciesData{"X", make_elt(G, {1, 0}),
                                                {RootOfUnity::zeta(p, alpha),
                                                 RootOfUnity::zeta(p, gamma)},
                                                p},
                                    SpeciesData{"Y", make_elt(G, {beta, 0}),
                                                {RootOfUnity::zeta(p, -alpha * beta),
                                                 RootOfUnity::zeta(p, eta)},
                                                p}};
                                rec.q = RootOfUnity::zeta(p, -alpha * beta);
                                rec.dim = p4;
                                rec.params = {{"b", b},         {"c", c},     {"alpha", alpha},
                                              {"beta", beta},   {"gamma", gamma},
                                              {"eta", eta}};
                                out.push_back(std::move(rec));
                            }
            }
    }
    // family 2: one species of nilpotency order p^2 over the rank-2 group
    {
        AbGroup G({p, p});
        for (long a = 1; a < p; ++a)
            for (long b = 0; b < p; ++b)
                for (long c = 0; c < p; ++c) {
                    Cocycle3 phi = make_rank2(p, p, a, b, c);
                    for (long alpha = 0; alpha < p; ++alpha)
                        for (long beta = 0; beta < p; ++beta) {
                            out.push_back(detail::one_species_record(
                                "p4.2", G, phi, {"g", "h"}, make_elt(G, {1, 0}),
                                {RootOfUnity::zeta(p2, alpha * p + a), RootOfUnity::zeta(p, beta)},
                                p2, p4));
                            out.back().params = {
                                {"a", a}, {"b", b}, {"c", c}, {"alpha", alpha}, {"beta", beta}};
                        }
                }
    }
    // family 3: cyclic of order p^2, unit-power class, order-p^2 species
    {
        AbGroup G({p2});
        for (long a = 1; a < p2; ++a) {
            if (a % p == 0) continue;
            Cocycle3 phi = make_rank1(p2, a);
            for (long alpha = 0; alpha < p2; ++alpha) {
                out.push_back(detail::one_species_record(
                    "p4.3", G, phi, {"g"}, make_elt(G, {p}),
                    {RootOfUnity::zeta(p3, alpha * p + a)}, p2, p4));
                out.back().params = {{"a", a}, {"alpha", alpha}};
            }
        }
    }
    // family 4: cyclic of order p^2, two parallel species on the p-th power
    {
        AbGroup G({p2});
        for (long t = 1; t < p; ++t) {
            Cocycle3 phi = make_rank1(p2, t * p);
            for (long alpha = 1; alpha < p2; ++alpha) {
                if (alpha % p == 0) continue;
                for (long beta = 0; beta < p; ++beta) {
                    ClassRecord rec;
                    rec.family = "p4.4";
                    rec.group = G;
                    rec.cocycle = phi;
                    rec.gen_names = {"g"};
                    rec.species = {
                        SpeciesData{"X", make_elt(G, {p}), {RootOfUnity::zeta(p2, alpha)}, p},
                        SpeciesData{"Y", make_elt(G, {p}),
                                    {RootOfUnity::zeta(p2, beta * p - alpha)}, p}};
                    rec.q = RootOfUnity::zeta(p, -alpha);
                    rec.dim = p4;
                    rec.note = "second coproduct term read as tensor with Y";
                    rec.params = {{"t", t}, {"alpha", alpha}, {"beta", beta}};
                    out.push_back(std::move(rec));
                }
            }
        }
    }
    // families 5-7 share the group Z(p^2) x Z(p)
    {
        AbGroup G({p2, p});
        // family 5: class (1,0), scalar of order p
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                if (b == 0 && c == 0) continue;
                Cocycle3 phi = make_rank2(p2, p, 0, b, c);
                for (long alpha = 1; alpha < p; ++alpha)
                    for (long beta = 0; beta < p; ++beta) {
                        out.push_back(detail::one_species_record(
                            "p4.5", G, phi, {"g", "h"}, make_elt(G, {1, 0}),
                            {RootOfUnity::zeta(p, alpha), RootOfUnity::zeta(p, beta)}, p, p4));
                        out.back().params = {{"b", b}, {"c", c}, {"alpha", alpha}, {"beta", beta}};
                    }
            }
        // family 6: class (p,0), zero first cocycle slot
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                if (b == 0 && c == 0) continue;
                Cocycle3 phi = make_rank2(p2, p, 0, b, c);
                for (long alpha = 1; alpha < p2; ++alpha) {
                    if (alpha % p == 0) continue;
                    for (long beta = 0; beta < p; ++beta) {
                        out.push_back(detail::one_species_record(
                            "p4.6", G, phi, {"g", "h"}, make_elt(G, {p, 0}),
                            {RootOfUnity::zeta(p2, alpha), RootOfUnity::zeta(p, beta)}, p, p4));
                        out.back().params = {{"b", b}, {"c", c}, {"alpha", alpha}, {"beta", beta}};
                    }
                }
            }
        // family 7: class (p,0), first cocycle slot a multiple of p
        for (long t = 1; t < p; ++t)
            for (long b = 0; b < p; ++b)
                for (long c = 0; c < p; ++c) {
                    Cocycle3 phi = make_rank2(p2, p, t * p, b, c);
                    for (long alpha = 1; alpha < p2; ++alpha) {
                        if (alpha % p == 0) continue;
                        for (long beta = 0; beta < p; ++beta) {
                            out.push_back(detail::one_species_record(
                                "p4.7", G, phi, {"g", "h"}, make_elt(G, {p, 0}),
                                {RootOfUnity::zeta(p2, alpha), RootOfUnity::zeta(p, beta)}, p,
                                p4));
                            out.back().params = {
                                {"t", t}, {"b", b}, {"c", c}, {"alpha", alpha}, {"beta", beta}};
                        }
                    }
                }
        // family 8: class (0,1), third cocycle slot zero
        for (long a = 0; a < p2; ++a)
            for (long b = 0; b < p; ++b) {
                if (a == 0 && b == 0) continue;
                Cocycle3 phi = make_rank2(p2, p, a, b, 0);
                for (long alpha = 0; alpha < p2; ++alpha) {
                    out.push_back(detail::one_species_record(
                        "p4.8", G, phi, {"g", "h"}, make_elt(G, {0, 1}),
                        {RootOfUnity::zeta(p3, alpha * p + b), RootOfUnity::zeta(p, 1)}, p, p4));
                    out.back().params = {{"a", a}, {"b", b}, {"alpha", alpha}};
                }
            }
    }
    // family 9: elementary abelian of rank 3
    {
        AbGroup G({p, p, p});
        std::array<long, 7> a{};
        std::array<long, 6> idx{};
        while (true) {
            for (int i = 0; i < 6; ++i) a[i + 1] = idx[i];
            bool allzero = true;
            for (int i = 1; i < 7; ++i)
                if (a[i] != 0) allzero = false;
            if (!allzero) {
                Cocycle3 phi = make_rank3(p, a);
                for (long alpha = 1; alpha < p; ++alpha)
                    for (long beta = 0; beta < p; ++beta)
                        for (long gamma = 0; gamma < p; ++gamma) {
                            out.push_back(detail::one_species_record(
                                "p4.9", G, phi, {"e", "f", "g"}, make_elt(G, {1, 0, 0}),
                                {RootOfUnity::zeta(p, alpha), RootOfUnity::zeta(p, beta),
                                 RootOfUnity::zeta(p, gamma)},
                                p, p4));
                            out.back().params = {{"a2", a[1]},   {"a3", a[2]}, {"a4", a[3]},
                                                 {"a5", a[4]},   {"a6", a[5]}, {"a7", a[6]},
                                                 {"alpha", alpha}, {"beta", beta},
                                                 {"gamma", gamma}};
                        }
            }
            int i = 5;
            while (i >= 0 && idx[i] == p - 1) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Replaying a record's claims against the reconstructed structure.

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

inline VerifyReport verify_record(const ClassRecord& rec, long max_levels = 64) {
    VerifyReport rep;
    const AbGroup& G = rec.group;
    if (group_of(rec.cocycle) != G) {
        rep.fail("group does not match the associator parameters");
        return rep;
    }
    long M = record_modulus(rec);

    // 1. each printed relation scalar must induce a projective character
    bool characters_ok = true;
    for (const auto& s : rec.species) {
        std::vector<RootOfUnity> gen_values;
        for (size_t j = 0; j < G.rank(); ++j)
            gen_values.push_back(embed(
                chi_from_relation_scalar(rec.cocycle, s.cls, detail::generator(G, j), s.sigma[j]),
                M));
        auto chi = extend_character(rec.cocycle, s.cls, gen_values, M);
        std::string why;
        if (!character_is_projective(rec.cocycle, s.cls, chi, M, &why)) {
            rep.fail("no projective character for species " + s.name + ": " + why);
            characters_ok = false;
        }
    }
    if (!characters_ok) return rep;

    MajidStructure S = build_structure(rec);

    // 2. the reconstructed actions satisfy the compatibility identities
    {
        std::string why;
        if (!check_bimodule_axioms(S, &why)) rep.fail("bimodule axioms: " + why);
    }

    // 3. the structure reproduces the printed relation scalars
    for (size_t si = 0; si < rec.species.size(); ++si)
        for (size_t j = 0; j < G.rank(); ++j) {
            RootOfUnity got = relation_scalar(S, si, detail::generator(G, j));
            RootOfUnity want = embed(rec.species[si].sigma[j], S.modulus());
            if (got != want)
                rep.fail("relation scalar of " + rec.species[si].name + " at generator " +
                         rec.gen_names[j] + ": stated " + root_to_literal(want) + ", got " +
                         root_to_literal(got));
        }

    // 4. nilpotency orders, including sharpness of the vanishing power
    for (size_t si = 0; si < rec.species.size(); ++si) {
        long N = rec.species[si].N;
        auto order = nilpotency_order(S, si);
        if (!order) {
            rep.fail("species " + rec.species[si].name + " has no vanishing power");
            continue;
        }
        if (*order != N) {
            rep.fail("nilpotency order of " + rec.species[si].name + ": stated " +
                     std::to_string(N) + ", got " + std::to_string(*order));
            continue;
        }
        if (!left_power(S, si, N).empty())
            rep.fail("power " + std::to_string(N) + " of " + rec.species[si].name +
                     " does not vanish");
        if (left_power(S, si, N - 1).empty())
            rep.fail("power " + std::to_string(N - 1) + " of " + rec.species[si].name +
                     " vanishes early");
    }

    // 5. two species must skew-commute with the stated factor
    if (rec.species.size() == 2) {
        SkewCommutation sk = skew_commutation(S, 0, 1);
        if (!sk.proportional)
            rep.fail("the two species are not skew-commutative");
        else if (rec.q && sk.q != embed(*rec.q, S.modulus()))
            rep.fail("skew factor: stated " + root_to_literal(embed(*rec.q, S.modulus())) +
                     ", got " + root_to_literal(sk.q));
    }

    // 6. the generated subalgebra has exactly the claimed dimension
    if (rep.ok) {
        SubalgebraResult sub = subalgebra_dimension(S, max_levels);
        if (!sub.complete)
            rep.fail("dimension closure did not terminate within the level cap");
        else if (sub.dimension != rec.dim)
            rep.fail("dimension: stated " + std::to_string(rec.dim) + ", got " +
                     std::to_string(sub.dimension));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Human-readable presentation of a record.

inline std::string class_expr(const ClassRecord& rec, const GrpElt& x) {
    std::string out;
    for (size_t j = 0; j < x.c.size(); ++j) {
        if (x.c[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += rec.gen_names[j];
        if (x.c[j] != 1) out += "^" + std::to_string(x.c[j]);
    }
    return out.empty() ? "1" : out;
}

inline std::string scalar_prefix(const RootOfUnity& r) {
    return r.is_one() ? "" : root_to_literal(r) + " * ";
}

inline std::vector<std::string> relation_strings(const ClassRecord& rec) {
    std::vector<std::string> out;
    const AbGroup& G = rec.group;
    for (size_t j = 0; j < G.rank(); ++j)
        out.push_back(rec.gen_names[j] + "^" + std::to_string(G.factors[j]) + " = 1");
    for (size_t i = 0; i < G.rank(); ++i)
        for (size_t j = i + 1; j < G.rank(); ++j)
            out.push_back(rec.gen_names[i] + "*" + rec.gen_names[j] + " = " + rec.gen_names[j] +
                          "*" + rec.gen_names[i]);
    for (const auto& s : rec.species)
        for (size_t j = 0; j < G.rank(); ++j)
            out.push_back(rec.gen_names[j] + "*" + s.name + " = " + scalar_prefix(s.sigma[j]) +
                          s.name + "*" + rec.gen_names[j]);
    if (rec.species.size() == 2 && rec.q)
        out.push_back(rec.species[0].name + "*" + rec.species[1].name + " = " +
                      scalar_prefix(*rec.q) + rec.species[1].name + "*" + rec.species[0].name);
    for (const auto& s : rec.species)
        out.push_back(s.name + "^[" + std::to_string(s.N) + "] = 0");
    for (const auto& s : rec.species)
        out.push_back("Delta(" + s.name + ") = " + s.name + "(x)1 + " + class_expr(rec, s.cls) +
                      "(x)" + s.name);
    return out;
}

}  // namespace majiq
