#pragma once

// Normalized 3-cocycle representatives on finite abelian groups of rank 1-3,
// their induced 2-cocycles, and generic cocycle checkers.
//
// Values are RootOfUnity over the "value modulus" of the family:
//   rank 1 on Z(m)            -> mu_m
//   rank 2 on Z(m)xZ(n)       -> mu_lcm(m,n)
//   rank 3 on Z(p)^3          -> mu_p
// All floor terms act on canonical coordinates, so they are plain integer
// divisions of non-negative numbers.

#include <majiq/cyclotomic.hpp>
#include <majiq/group.hpp>

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

namespace majiq {

struct Rank1Cocycle {
    long m;  // group Z(m)
    long a;  // in [0, m)
};

struct Rank2Cocycle {
    long m, n;     // group Z(m)xZ(n)
    long a, b, c;  // a in [0,m), b in [0,gcd(m,n)), c in [0,n)
};

struct Rank3Cocycle {
    long p;                  // group Z(p)^3
    std::array<long, 7> a;   // each in [0, p)
};

using Cocycle3 = std::variant<Rank1Cocycle, Rank2Cocycle, Rank3Cocycle>;

inline Cocycle3 make_rank1(long m, long a) {
    if (m < 1) throw std::invalid_argument("make_rank1: order must be positive");
    return Rank1Cocycle{m, positive_mod(a, m)};
}

inline Cocycle3 make_rank2(long m, long n, long a, long b, long c) {
    if (m < 1 || n < 1) throw std::invalid_argument("make_rank2: orders must be positive");
    long g = std::gcd(m, n);
    return Rank2Cocycle{m, n, positive_mod(a, m), positive_mod(b, g), positive_mod(c, n)};
}

inline Cocycle3 make_rank3(long p, std::array<long, 7> a) {
    if (p < 1) throw std::invalid_argument("make_rank3: order must be positive");
    for (auto& x : a) x = positive_mod(x, p);
    return Rank3Cocycle{p, a};
}

inline AbGroup group_of(const Cocycle3& phi) {
    return std::visit(
        [](const auto& c) -> AbGroup {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Rank1Cocycle>) return AbGroup({c.m});
            else if constexpr (std::is_same_v<T, Rank2Cocycle>) return AbGroup({c.m, c.n});
            else return AbGroup({c.p, c.p, c.p});
        },
        phi);
}

inline long value_modulus(const Cocycle3& phi) {
    return std::visit(
        [](const auto& c) -> long {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Rank1Cocycle>) return c.m;
            else if constexpr (std::is_same_v<T, Rank2Cocycle>) return std::lcm(c.m, c.n);
            else return c.p;
        },
        phi);
}

namespace detail {

inline long floor_sum(long u, long v, long m) { return (u + v) / m; }  // u,v in [0,m)

}  // namespace detail

inline RootOfUnity eval3_root(const Cocycle3& phi, const GrpElt& x, const GrpElt& y,
                              const GrpElt& z) {
    return std::visit(
        [&](const auto& c) -> RootOfUnity {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Rank1Cocycle>) {
                if (x.c.size() != 1 || y.c.size() != 1 || z.c.size() != 1)
                    throw std::invalid_argument("eval3_root: rank-1 cocycle expects Z(m) elements");
                long i = positive_mod(x.c[0], c.m);
                long j = positive_mod(y.c[0], c.m);
                long k = positive_mod(z.c[0], c.m);
                return RootOfUnity::zeta(c.m, c.a * detail::floor_sum(j, k, c.m) % c.m * i);
            } else if constexpr (std::is_same_v<T, Rank2Cocycle>) {
                if (x.c.size() != 2 || y.c.size() != 2 || z.c.size() != 2)
                    throw std::invalid_argument("eval3_root: rank-2 cocycle expects Z(m)xZ(n) elements");
                long i = positive_mod(x.c[0], c.m), j = positive_mod(x.c[1], c.n);
                long s = positive_mod(y.c[0], c.m), t = positive_mod(y.c[1], c.n);
                long k = positive_mod(z.c[0], c.m), l = positive_mod(z.c[1], c.n);
                long L = std::lcm(c.m, c.n);
                long fg = detail::floor_sum(s, k, c.m);  // g-part carry of the last two slots
                long fh = detail::floor_sum(t, l, c.n);  // h-part carry
                RootOfUnity r = embed(RootOfUnity::zeta(c.m, c.a * fg % c.m * i), L);
                r = r * embed(RootOfUnity::zeta(c.n, c.b * fg % c.n * j), L);
                r = r * embed(RootOfUnity::zeta(c.n, c.c * fh % c.n * j), L);
                return r;
            } else {
                if (x.c.size() != 3 || y.c.size() != 3 || z.c.size() != 3)
                    throw std::invalid_argument("eval3_root: rank-3 cocycle expects Z(p)^3 elements");
                long p = c.p;
                std::array<long, 3> i{}, j{}, k{};
                for (int t = 0; t < 3; ++t) {
                    i[t] = positive_mod(x.c[t], p);
                    j[t] = positive_mod(y.c[t], p);
                    k[t] = positive_mod(z.c[t], p);
                }
                long e = 0;
                for (int t = 0; t < 3; ++t) e += c.a[t] * i[t] % p * detail::floor_sum(j[t], k[t], p);
                e += c.a[3] * i[1] % p * detail::floor_sum(j[0], k[0], p);
                e += c.a[4] * i[2] % p * detail::floor_sum(j[0], k[0], p);
                e += c.a[5] * i[2] % p * detail::floor_sum(j[1], k[1], p);
                e += c.a[6] * (k[0] * j[1] % p) % p * i[2];
                return RootOfUnity::zeta(p, e);
            }
        },
        phi);
}

inline CycNum eval3(const Cocycle3& phi, const GrpElt& x, const GrpElt& y, const GrpElt& z,
                    long ambient) {
    return to_cyc(eval3_root(phi, x, y, z), ambient);
}

// ---------------------------------------------------------------------------
// Generic checkers over an arbitrary RootOfUnity-valued function; mutation
// tests wrap these callables, so keep them templated rather than fixed to the
// representative families above.

template <typename F3>
bool check_3cocycle(const AbGroup& G, F3&& phi, std::string* why = nullptr) {
    auto all = enumerate(G);
    for (const auto& x : all)
        for (const auto& y : all)
            if (!phi(identity(G), x, y).is_one() || !phi(x, identity(G), y).is_one() ||
                !phi(x, y, identity(G)).is_one()) {
                if (why) *why = "normalization fails at (" + to_string(x) + "," + to_string(y) + ")";
                return false;
            }
    for (const auto& w : all)
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    RootOfUnity lhs =
                        phi(x, y, z) * phi(w, mul(G, x, y), z) * phi(w, x, y);
                    RootOfUnity rhs = phi(mul(G, w, x), y, z) * phi(w, x, mul(G, y, z));
                    if (lhs != rhs) {
                        if (why)
                            *why = "cocycle identity fails at (" + to_string(w) + "," +
                                   to_string(x) + "," + to_string(y) + "," + to_string(z) + ")";
                        return false;
                    }
                }
    return true;
}

template <typename F2>
bool check_2cocycle(const AbGroup& G, F2&& sigma, std::string* why = nullptr) {
    auto all = enumerate(G);
    for (const auto& x : all)
        if (!sigma(identity(G), x).is_one() || !sigma(x, identity(G)).is_one()) {
            if (why) *why = "normalization fails at " + to_string(x);
            return false;
        }
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                RootOfUnity lhs = sigma(y, z) * sigma(x, mul(G, y, z));
                RootOfUnity rhs = sigma(x, y) * sigma(mul(G, x, y), z);
                if (lhs != rhs) {
                    if (why)
                        *why = "2-cocycle identity fails at (" + to_string(x) + "," +
                               to_string(y) + "," + to_string(z) + ")";
                    return false;
                }
            }
    return true;
}

inline bool check_3cocycle(const Cocycle3& phi, std::string* why = nullptr) {
    return check_3cocycle(
        group_of(phi),
        [&](const GrpElt& x, const GrpElt& y, const GrpElt& z) { return eval3_root(phi, x, y, z); },
        why);
}

// The rank-3 exponent is linear in the seven parameters. Checking that each
// parameter's exponent template satisfies the (additive) cocycle identity and
// normalization certifies every parameter tuple over Z(p)^3 at once, which
// keeps the p = 3 sweep tractable.
inline bool certify_rank3_templates(long p, std::string* why = nullptr) {
    AbGroup G({p, p, p});
    auto all = enumerate(G);
    auto templates = [&](const GrpElt& x, const GrpElt& y, const GrpElt& z) {
        std::array<long, 7> t{};
        for (int l = 0; l < 3; ++l) t[l] = x.c[l] * detail::floor_sum(y.c[l], z.c[l], p) % p;
        t[3] = x.c[1] * detail::floor_sum(y.c[0], z.c[0], p) % p;
        t[4] = x.c[2] * detail::floor_sum(y.c[0], z.c[0], p) % p;
        t[5] = x.c[2] * detail::floor_sum(y.c[1], z.c[1], p) % p;
        t[6] = z.c[0] * y.c[1] % p * x.c[2] % p;
        return t;
    };
    auto id = identity(G);
    for (const auto& x : all)
        for (const auto& y : all)
            for (auto probe : {templates(id, x, y), templates(x, id, y), templates(x, y, id)})
                for (long v : probe)
                    if (v % p != 0) {
                        if (why)
                            *why = "template normalization fails at (" + to_string(x) + "," +
                                   to_string(y) + ")";
                        return false;
                    }
    for (const auto& w : all)
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    auto t1 = templates(x, y, z);
                    auto t2 = templates(w, mul(G, x, y), z);
                    auto t3 = templates(w, x, y);
                    auto t4 = templates(mul(G, w, x), y, z);
                    auto t5 = templates(w, x, mul(G, y, z));
                    for (int l = 0; l < 7; ++l)
                        if (positive_mod(t1[l] + t2[l] + t3[l] - t4[l] - t5[l], p) != 0) {
                            if (why)
                                *why = "template " + std::to_string(l + 1) + " fails at (" +
                                       to_string(w) + "," + to_string(x) + "," + to_string(y) +
                                       "," + to_string(z) + ")";
                            return false;
                        }
                }
    return true;
}

// ---------------------------------------------------------------------------
// The 2-cocycle induced on G by a 3-cocycle and a base element sigma.

inline RootOfUnity phi_tilde(const Cocycle3& phi, const GrpElt& e, const GrpElt& f,
                             const GrpElt& sigma) {
    AbGroup G = group_of(phi);
    GrpElt ef = mul(G, e, f);
    GrpElt fi = inv(G, f);
    GrpElt ei = inv(G, e);
    RootOfUnity num = eval3_root(phi, e, f, sigma) * eval3_root(phi, ef, fi, ei) *
                      eval3_root(phi, e, mul(G, f, sigma), fi);
    RootOfUnity den = eval3_root(phi, mul(G, ef, sigma), fi, ei) * eval3_root(phi, e, f, fi);
    return num * inv(den);
}

// Closed forms for the induced 2-cocycle in ranks 1 and 2; the rank-3 family
// is handled through phi_tilde only.
inline RootOfUnity phi_tilde_explicit(const Cocycle3& phi, const GrpElt& e, const GrpElt& f,
                                      const GrpElt& sigma) {
    if (std::holds_alternative<Rank1Cocycle>(phi)) {
        const auto& c = std::get<Rank1Cocycle>(phi);
        long m = c.m;
        long i = positive_mod(e.c.at(0), m);
        long j = positive_mod(f.c.at(0), m);
        long k = positive_mod(sigma.c.at(0), m);
        long fl = detail::floor_sum(positive_mod(m - i, m), positive_mod(m - j, m), m);
        return RootOfUnity::zeta(m, -(c.a * fl % m) * k);
    }
    if (std::holds_alternative<Rank2Cocycle>(phi)) {
        const auto& c = std::get<Rank2Cocycle>(phi);
        long m = c.m, n = c.n, L = std::lcm(m, n);
        long i = positive_mod(e.c.at(0), m), j = positive_mod(e.c.at(1), n);
        long s = positive_mod(f.c.at(0), m), t = positive_mod(f.c.at(1), n);
        long k = positive_mod(sigma.c.at(0), m), l = positive_mod(sigma.c.at(1), n);
        long fg = detail::floor_sum(positive_mod(m - i, m), positive_mod(m - s, m), m);
        long fh = detail::floor_sum(positive_mod(n - j, n), positive_mod(n - t, n), n);
        RootOfUnity r = embed(RootOfUnity::zeta(m, -(c.a * fg % m) * k), L);
        r = r * embed(RootOfUnity::zeta(n, -(c.b * fg % n) * l), L);
        r = r * embed(RootOfUnity::zeta(n, -(c.c * fh % n) * l), L);
        return r;
    }
    throw std::invalid_argument("phi_tilde_explicit: no closed form for the rank-3 family");
}

// Left-nested star power of a group element t inside the twisted group
// algebra attached to (phi, sigma): returns the scalar s with t^{*i} = s t^i.
inline RootOfUnity twisted_power_scalar(const Cocycle3& phi, const GrpElt& sigma, const GrpElt& t,
                                        long i) {
    if (i < 0) throw std::invalid_argument("twisted_power_scalar: negative power");
    AbGroup G = group_of(phi);
    RootOfUnity s = RootOfUnity::one(value_modulus(phi));
    GrpElt acc = t;
    for (long j = 1; j < i; ++j) {
        s = s * phi_tilde(phi, acc, t, sigma);
        acc = mul(G, acc, t);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Text form: rank1(m;a) / rank2(m,n;a,b,c) / rank3(p;a1,...,a7).

inline std::string to_string(const Cocycle3& phi) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Rank1Cocycle>) {
                return "rank1(" + std::to_string(c.m) + ";" + std::to_string(c.a) + ")";
            } else if constexpr (std::is_same_v<T, Rank2Cocycle>) {
                return "rank2(" + std::to_string(c.m) + "," + std::to_string(c.n) + ";" +
                       std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                       std::to_string(c.c) + ")";
            } else {
                std::string s = "rank3(" + std::to_string(c.p) + ";";
                for (int t = 0; t < 7; ++t) s += (t ? "," : "") + std::to_string(c.a[t]);
                return s + ")";
            }
        },
        phi);
}

inline Cocycle3 cocycle_from_string(const std::string& text) {
    auto fail = [&]() -> Cocycle3 {
        throw std::invalid_argument("cocycle_from_string: malformed cocycle '" + text + "'");
    };
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    size_t open = s.find('(');
    size_t semi = s.find(';');
    size_t close = s.rfind(')');
    if (open == std::string::npos || semi == std::string::npos || close != s.size() - 1 ||
        !(open < semi && semi < close))
        return fail();
    std::string head = s.substr(0, open);
    auto parse_list = [&](const std::string& body) {
        std::vector<long> out;
        size_t start = 0;
        while (start <= body.size()) {
            size_t comma = body.find(',', start);
            std::string item = body.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing junk");
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return out;
    };
    try {
        auto orders = parse_list(s.substr(open + 1, semi - open - 1));
        auto params = parse_list(s.substr(semi + 1, close - semi - 1));
        if (head == "rank1" && orders.size() == 1 && params.size() == 1)
            return make_rank1(orders[0], params[0]);
        if (head == "rank2" && orders.size() == 2 && params.size() == 3)
            return make_rank2(orders[0], orders[1], params[0], params[1], params[2]);
        if (head == "rank3" && orders.size() == 1 && params.size() == 7) {
            std::array<long, 7> a{};
            std::copy(params.begin(), params.end(), a.begin());
            return make_rank3(orders[0], a);
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    return fail();
}

}  // namespace majiq
