#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), no floating point anywhere.
// A CycNum over ambient order N holds phi(N) rational coefficients: the
// canonical residue mod the N-th cyclotomic polynomial. Two values over the
// same ambient order are equal iff their coefficient vectors are equal.
//
// RootOfUnity is the multiplicative companion: a known power of zeta_N kept
// as an exponent mod N. Products and inverses are integer arithmetic; the
// conversion to CycNum and the discrete log back are exact. Checker loops
// run on RootOfUnity, field arithmetic (sums, elimination) on CycNum.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majiq {

using Rational = mpq_class;
using BigInt = mpz_class;

inline long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Integer polynomial, coefficients ordered low to high, trailing zeros trimmed.
struct IntPoly {
    std::vector<BigInt> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }
};

namespace detail {

inline void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// exact division by a monic divisor; throws if a remainder is left
inline std::vector<BigInt> poly_div_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    if (b.empty() || b.back() != 1)
        throw std::invalid_argument("poly_div_exact: divisor must be monic");
    if (a.size() < b.size()) {
        trim(a);
        if (!a.empty()) throw std::invalid_argument("poly_div_exact: not divisible");
        return {};
    }
    std::vector<BigInt> q(a.size() - b.size() + 1);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        BigInt f = a[i + b.size() - 1];
        q[i] = f;
        if (f == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::invalid_argument("poly_div_exact: not divisible");
    return q;
}

}  // namespace detail

// N-th cyclotomic polynomial by the divisor product definition, memoized.
inline const IntPoly& cyclotomic_poly(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    static std::map<long, IntPoly> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // compute recursively without re-locking
    struct Rec {
        std::map<long, IntPoly>& cache;
        const IntPoly& get(long n) {
            auto i = cache.find(n);
            if (i != cache.end()) return i->second;
            std::vector<BigInt> p(n + 1);
            p[0] = -1;
            p[n] = 1;  // x^n - 1
            for (long d = 1; d < n; ++d)
                if (n % d == 0) p = detail::poly_div_exact(std::move(p), get(d).coeffs);
            return cache.emplace(n, IntPoly{std::move(p)}).first->second;
        }
    } rec{cache};
    return rec.get(N);
}

namespace detail {

// Per-ambient-order context: reduction rows for x^k mod Phi_N and the table
// of all N powers of zeta_N in canonical form.
struct FieldCtx {
    long N = 1;
    long phi = 1;
    std::vector<BigInt> cyclo;                 // monic, length phi+1
    std::vector<std::vector<Rational>> red;    // red[i] = x^{phi+i} mod Phi_N, 0 <= i <= phi-2
    std::vector<std::vector<Rational>> zpow;   // zpow[e] = zeta_N^e, 0 <= e < N
};

inline const FieldCtx& field(long N) {
    if (N < 1) throw std::invalid_argument("field: ambient order must be positive");
    static std::map<long, std::unique_ptr<FieldCtx>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<FieldCtx>();
    ctx->N = N;
    ctx->cyclo = cyclotomic_poly(N).coeffs;
    ctx->phi = static_cast<long>(ctx->cyclo.size()) - 1;
    const long phi = ctx->phi;

    // x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
    std::vector<Rational> top(phi);
    for (long j = 0; j < phi; ++j) top[j] = Rational(-ctx->cyclo[j]);

    auto mul_x = [&](const std::vector<Rational>& v) {
        std::vector<Rational> w(phi);
        for (long j = phi - 1; j >= 1; --j) w[j] = v[j - 1];
        w[0] = 0;
        const Rational& carry = v[phi - 1];
        if (carry != 0)
            for (long j = 0; j < phi; ++j) w[j] += carry * top[j];
        return w;
    };

    if (phi >= 2) {
        ctx->red.reserve(phi - 1);
        ctx->red.push_back(top);
        for (long i = 1; i <= phi - 2; ++i) ctx->red.push_back(mul_x(ctx->red.back()));
    } else {
        ctx->red.push_back(top);  // unused for products, kept for zpow seeding
    }

    ctx->zpow.reserve(N);
    std::vector<Rational> v(phi);
    v[0] = 1;
    for (long e = 0; e < N; ++e) {
        ctx->zpow.push_back(v);
        v = mul_x(v);
    }
    return *cache.emplace(N, std::move(ctx)).first->second;
}

}  // namespace detail

inline long euler_phi(long N) { return detail::field(N).phi; }

class CycNum {
public:
    CycNum() : n_(1), c_(1) {}

    static CycNum zero(long N) { return CycNum(N, std::vector<Rational>(detail::field(N).phi)); }

    static CycNum one(long N) { return from_rational(N, 1); }

    static CycNum from_rational(long N, Rational r) {
        auto v = std::vector<Rational>(detail::field(N).phi);
        v[0] = std::move(r);
        return CycNum(N, std::move(v));
    }

    // zeta_N^e in canonical form
    static CycNum root(long N, long e) {
        return CycNum(N, detail::field(N).zpow[positive_mod(e, N)]);
    }

    static CycNum from_coeffs(long N, std::vector<Rational> c) {
        const auto& F = detail::field(N);
        if (static_cast<long>(c.size()) != F.phi)
            throw std::invalid_argument("CycNum: coefficient vector must have length phi(N)");
        return CycNum(N, std::move(c));
    }

    long ambient_order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        std::vector<Rational> r(a.c_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return CycNum(a.n_, std::move(r));
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        std::vector<Rational> r(a.c_);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return CycNum(a.n_, std::move(r));
    }

    CycNum operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return CycNum(n_, std::move(r));
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        const auto& F = detail::field(a.n_);
        const long phi = F.phi;
        std::vector<Rational> conv(2 * phi - 1);
        for (long i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rational> r(conv.begin(), conv.begin() + phi);
        for (long i = 0; i <= phi - 2; ++i) {
            const Rational& f = conv[phi + i];
            if (f == 0) continue;
            const auto& row = F.red[i];
            for (long j = 0; j < phi; ++j)
                if (row[j] != 0) r[j] += f * row[j];
        }
        return CycNum(a.n_, std::move(r));
    }

    friend CycNum operator*(const CycNum& a, const Rational& s) {
        std::vector<Rational> r(a.c_);
        for (auto& x : r) x *= s;
        return CycNum(a.n_, std::move(r));
    }

    friend CycNum operator*(const Rational& s, const CycNum& a) { return a * s; }

    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        check_same(a, b);
        return a.c_ == b.c_;
    }

    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

private:
    CycNum(long N, std::vector<Rational> c) : n_(N), c_(std::move(c)) {}

    static void check_same(const CycNum& a, const CycNum& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("CycNum: ambient order mismatch (" +
                                        std::to_string(a.n_) + " vs " + std::to_string(b.n_) + ")");
    }

    long n_;
    std::vector<Rational> c_;
};

namespace detail {

// polynomial helpers over Rational for the extended Euclid inverse
inline void rtrim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline std::vector<Rational> rpoly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        a.pop_back();
        rtrim(a);
    }
    return a;
}

inline std::vector<Rational> rpoly_quot(std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        q[a.size() - b.size()] = f;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        a.pop_back();
        rtrim(a);
    }
    return q;
}

inline std::vector<Rational> rpoly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    rtrim(r);
    return r;
}

inline std::vector<Rational> rpoly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rtrim(a);
    return a;
}

}  // namespace detail

// Field inverse by extended Euclid against Phi_N (irreducible, so any nonzero
// residue is a unit).
inline CycNum inverse(const CycNum& a) {
    if (a.is_zero()) throw std::domain_error("inverse: division by zero");
    const auto& F = detail::field(a.ambient_order());
    std::vector<Rational> r0(F.cyclo.begin(), F.cyclo.end());  // Phi_N
    std::vector<Rational> r1(a.coeffs());
    detail::rtrim(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};  // s tracks the coefficient of a
    while (!r1.empty()) {
        auto q = detail::rpoly_quot(r0, r1);
        auto r2 = detail::rpoly_sub(r0, detail::rpoly_mul(q, r1));
        auto s2 = detail::rpoly_sub(s0, detail::rpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant), s0 * a == r0 mod Phi_N
    if (r0.size() != 1)
        throw std::logic_error("inverse: cyclotomic polynomial was not irreducible over the input");
    Rational g = r0[0];
    auto u = detail::rpoly_rem(std::move(s0), std::vector<Rational>(F.cyclo.begin(), F.cyclo.end()));
    u.resize(F.phi);
    for (auto& x : u) x /= g;
    return CycNum::from_coeffs(a.ambient_order(), std::move(u));
}

inline CycNum pow(const CycNum& a, long k) {
    if (k < 0) return pow(inverse(a), -k);
    CycNum acc = CycNum::one(a.ambient_order());
    CycNum base = a;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

// Re-express over a larger ambient order M (old order must divide M).
inline CycNum to_ambient(const CycNum& a, long M) {
    long N = a.ambient_order();
    if (N == M) return a;
    if (M % N != 0)
        throw std::invalid_argument("to_ambient: current order must divide the target order");
    long step = M / N;
    CycNum r = CycNum::zero(M);
    for (long i = 0; i < static_cast<long>(a.coeffs().size()); ++i) {
        const Rational& ci = a.coeffs()[i];
        if (ci == 0) continue;
        r += CycNum::root(M, i * step) * ci;
    }
    return r;
}

// ---------------------------------------------------------------------------
// RootOfUnity: zeta_modulus^exponent as pure exponent data.

struct RootOfUnity {
    long modulus = 1;
    long exponent = 0;  // canonical, in [0, modulus)

    static RootOfUnity one(long N) { return {N, 0}; }

    static RootOfUnity zeta(long N, long e) { return {N, positive_mod(e, N)}; }

    long order() const { return modulus / std::gcd(modulus, exponent); }

    bool is_one() const { return exponent == 0; }

    friend RootOfUnity operator*(RootOfUnity a, RootOfUnity b) {
        if (a.modulus != b.modulus)
            throw std::invalid_argument("RootOfUnity: modulus mismatch");
        return {a.modulus, positive_mod(a.exponent + b.exponent, a.modulus)};
    }

    friend bool operator==(RootOfUnity a, RootOfUnity b) {
        if (a.modulus != b.modulus)
            throw std::invalid_argument("RootOfUnity: modulus mismatch");
        return a.exponent == b.exponent;
    }

    friend bool operator!=(RootOfUnity a, RootOfUnity b) { return !(a == b); }
};

inline RootOfUnity inv(RootOfUnity a) {
    return {a.modulus, positive_mod(-a.exponent, a.modulus)};
}

inline RootOfUnity pow(RootOfUnity a, long k) {
    // exponent*k can overflow only for absurd k; reduce k mod modulus first
    long kr = positive_mod(k, a.modulus);
    return {a.modulus, positive_mod(a.exponent * kr, a.modulus)};
}

// embed into a larger modulus (current must divide target)
inline RootOfUnity embed(RootOfUnity a, long M) {
    if (M % a.modulus != 0)
        throw std::invalid_argument("RootOfUnity: modulus must divide the embedding target");
    return {M, a.exponent * (M / a.modulus)};
}

inline CycNum to_cyc(RootOfUnity a) { return CycNum::root(a.modulus, a.exponent); }

inline CycNum to_cyc(RootOfUnity a, long ambient) { return to_cyc(embed(a, ambient)); }

// discrete log against the power table; empty when the value is not a power
// of zeta_N (in Q(zeta_N) the N-th roots of unity are exactly those powers)
inline std::optional<RootOfUnity> root_from_cyc(const CycNum& a) {
    const auto& F = detail::field(a.ambient_order());
    for (long e = 0; e < F.N; ++e)
        if (a.coeffs() == F.zpow[e]) return RootOfUnity{F.N, e};
    return std::nullopt;
}

// zeta_k^e expressed in Q(zeta_N); requires k | N
inline CycNum embed_root(long k, long e, long N) {
    if (k < 1 || N < 1) throw std::invalid_argument("embed_root: orders must be positive");
    if (N % k != 0)
        throw std::invalid_argument("embed_root: root order " + std::to_string(k) +
                                    " does not divide ambient order " + std::to_string(N));
    return CycNum::root(N, positive_mod(e, k) * (N / k));
}

// multiplicative order of a root of unity given as a CycNum
inline long mult_order(const CycNum& a) {
    auto r = root_from_cyc(a);
    if (!r)
        throw std::domain_error("mult_order: value is not a root of unity in its ambient field");
    return r->order();
}

// ---------------------------------------------------------------------------
// q-combinatorics over exact scalars.

// [l]_h = 1 + h + ... + h^{l-1}; [0]_h = 0
inline CycNum q_integer(long l, const CycNum& h) {
    if (l < 0) throw std::invalid_argument("q_integer: negative index");
    CycNum s = CycNum::zero(h.ambient_order());
    CycNum p = CycNum::one(h.ambient_order());
    for (long j = 0; j < l; ++j) {
        s += p;
        p = p * h;
    }
    return s;
}

// [l]_h! = [1]_h [2]_h ... [l]_h; empty product for l = 0
inline CycNum q_factorial(long l, const CycNum& h) {
    if (l < 0) throw std::invalid_argument("q_factorial: negative index");
    CycNum r = CycNum::one(h.ambient_order());
    CycNum s = CycNum::zero(h.ambient_order());  // running q-integer
    CycNum p = CycNum::one(h.ambient_order());   // running power of h
    for (long j = 1; j <= l; ++j) {
        s += p;
        p = p * h;
        r = r * s;
    }
    return r;
}

// Gaussian binomial via the division-free q-Pascal recurrence
//   C(n,k) = C(n-1,k-1) + h^k C(n-1,k)
inline CycNum gauss_binomial(long n, long k, const CycNum& h) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("gauss_binomial: need 0 <= k <= n");
    const long N = h.ambient_order();
    std::vector<CycNum> row{CycNum::one(N)};  // row for n = 0
    for (long m = 1; m <= n; ++m) {
        std::vector<CycNum> next(std::min(m, k) + 1, CycNum::zero(N));
        CycNum hk = CycNum::one(N);
        for (long j = 0; j <= std::min(m, k); ++j) {
            const CycNum* upper = (j < static_cast<long>(row.size())) ? &row[j] : nullptr;
            const CycNum* diag = (j >= 1) ? &row[j - 1] : nullptr;
            CycNum v = CycNum::zero(N);
            if (diag) v += *diag;
            if (upper) v += hk * *upper;
            next[j] = std::move(v);
            hk = hk * h;  // h^{j+1} for the next column
        }
        row = std::move(next);
    }
    return row[k];
}

// ---------------------------------------------------------------------------
// Text form: [N; c0, c1, ...] with every coefficient as p/q.

inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const CycNum& a) {
    std::string s = "[" + std::to_string(a.ambient_order()) + ";";
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        s += (i == 0 ? " " : ", ");
        s += to_string(a.coeffs()[i]);
    }
    s += "]";
    return s;
}

inline CycNum cyc_from_string(const std::string& text) {
    auto fail = [&]() -> CycNum {
        throw std::invalid_argument("cyc_from_string: malformed literal '" + text + "'");
    };
    size_t open = text.find('[');
    size_t semi = text.find(';');
    size_t close = text.rfind(']');
    if (open == std::string::npos || semi == std::string::npos || close == std::string::npos ||
        !(open < semi && semi < close))
        return fail();
    long N = 0;
    try {
        N = std::stol(text.substr(open + 1, semi - open - 1));
    } catch (...) {
        return fail();
    }
    if (N < 1) return fail();
    std::vector<Rational> coeffs;
    std::string body = text.substr(semi + 1, close - semi - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) return fail();
        item = item.substr(b, e - b + 1);
        try {
            Rational r(item);  // accepts "p" and "p/q"
            r.canonicalize();
            coeffs.push_back(std::move(r));
        } catch (...) {
            return fail();
        }
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(N)) return fail();
    return CycNum::from_coeffs(N, std::move(coeffs));
}

// zeta(k)^e literals; printing normalizes to the root's actual order
inline std::string root_to_literal(RootOfUnity r) {
    long g = std::gcd(r.modulus, r.exponent);
    long d = r.modulus / g;
    long e = (r.exponent == 0) ? 0 : r.exponent / g;
    return "zeta(" + std::to_string(d) + ")^" + std::to_string(e);
}

inline RootOfUnity root_from_literal(const std::string& text) {
    auto fail = [&]() -> RootOfUnity {
        throw std::invalid_argument("root_from_literal: malformed literal '" + text + "'");
    };
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) return fail();
    std::string s = text.substr(b, e - b + 1);
    if (s.rfind("zeta(", 0) != 0) return fail();
    size_t close = s.find(')');
    if (close == std::string::npos) return fail();
    long k = 0;
    try {
        k = std::stol(s.substr(5, close - 5));
    } catch (...) {
        return fail();
    }
    if (k < 1) return fail();
    long expo = 1;
    if (close + 1 < s.size()) {
        if (s[close + 1] != '^') return fail();
        try {
            size_t used = 0;
            expo = std::stol(s.substr(close + 2), &used);
            if (used != s.size() - close - 2) return fail();
        } catch (...) {
            return fail();
        }
    }
    return RootOfUnity::zeta(k, expo);
}

}  // namespace majiq
