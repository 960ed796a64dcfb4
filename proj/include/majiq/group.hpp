#pragma once

// Finite abelian groups presented as a product of cyclic factors
// Z(m1) x ... x Z(mk), elements as coordinate vectors reduced mod each factor.

#include <majiq/cyclotomic.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace majiq {

struct AbGroup {
    std::vector<long> factors;

    explicit AbGroup(std::vector<long> fs) : factors(std::move(fs)) {
        if (factors.empty()) throw std::invalid_argument("AbGroup: need at least one factor");
        for (long m : factors)
            if (m < 1) throw std::invalid_argument("AbGroup: factors must be positive");
    }

    size_t rank() const { return factors.size(); }

    long order() const {
        long n = 1;
        for (long m : factors) n *= m;
        return n;
    }

    long exponent() const {
        long e = 1;
        for (long m : factors) e = std::lcm(e, m);
        return e;
    }

    bool operator==(const AbGroup& o) const { return factors == o.factors; }
    bool operator!=(const AbGroup& o) const { return !(*this == o); }
};

struct GrpElt {
    std::vector<long> c;

    bool operator==(const GrpElt& o) const { return c == o.c; }
    bool operator!=(const GrpElt& o) const { return c != o.c; }
    bool operator<(const GrpElt& o) const { return c < o.c; }
};

inline void check_member(const AbGroup& G, const GrpElt& a) {
    if (a.c.size() != G.rank())
        throw std::invalid_argument("GrpElt: coordinate count does not match the group rank");
}

inline GrpElt identity(const AbGroup& G) { return GrpElt{std::vector<long>(G.rank(), 0)}; }

inline GrpElt make_elt(const AbGroup& G, std::vector<long> coords) {
    GrpElt a{std::move(coords)};
    check_member(G, a);
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = positive_mod(a.c[i], G.factors[i]);
    return a;
}

inline GrpElt mul(const AbGroup& G, const GrpElt& a, const GrpElt& b) {
    check_member(G, a);
    check_member(G, b);
    GrpElt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = positive_mod(r.c[i] + b.c[i], G.factors[i]);
    return r;
}

inline GrpElt inv(const AbGroup& G, const GrpElt& a) {
    check_member(G, a);
    GrpElt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = positive_mod(-r.c[i], G.factors[i]);
    return r;
}

inline GrpElt gpow(const AbGroup& G, const GrpElt& a, long k) {
    check_member(G, a);
    GrpElt r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = positive_mod(positive_mod(k, G.factors[i]) * r.c[i], G.factors[i]);
    return r;
}

inline long element_order(const AbGroup& G, const GrpElt& a) {
    check_member(G, a);
    long ord = 1;
    for (size_t i = 0; i < a.c.size(); ++i)
        ord = std::lcm(ord, G.factors[i] / std::gcd(G.factors[i], a.c[i]));
    return ord;
}

inline bool is_identity(const GrpElt& a) {
    for (long x : a.c)
        if (x != 0) return false;
    return true;
}

// Enumeration order: last coordinate varies fastest, so the list is sorted
// by the natural lexicographic order on coordinate vectors.
inline long index_of(const AbGroup& G, const GrpElt& a) {
    check_member(G, a);
    long idx = 0;
    for (size_t i = 0; i < a.c.size(); ++i) idx = idx * G.factors[i] + a.c[i];
    return idx;
}

inline GrpElt element_at(const AbGroup& G, long idx) {
    if (idx < 0 || idx >= G.order()) throw std::out_of_range("element_at: index out of range");
    std::vector<long> c(G.rank());
    for (size_t i = G.rank(); i-- > 0;) {
        c[i] = idx % G.factors[i];
        idx /= G.factors[i];
    }
    return GrpElt{std::move(c)};
}

inline std::vector<GrpElt> enumerate(const AbGroup& G) {
    std::vector<GrpElt> out;
    out.reserve(G.order());
    for (long i = 0; i < G.order(); ++i) out.push_back(element_at(G, i));
    return out;
}

// ---------------------------------------------------------------------------
// Text forms: groups as Z(m)xZ(n), elements as (i,j).

inline std::string to_string(const AbGroup& G) {
    std::string s;
    for (size_t i = 0; i < G.factors.size(); ++i) {
        if (i) s += "x";
        s += "Z(" + std::to_string(G.factors[i]) + ")";
    }
    return s;
}

inline AbGroup group_from_string(const std::string& text) {
    auto fail = [&]() -> AbGroup {
        throw std::invalid_argument("group_from_string: malformed group '" + text + "'");
    };
    std::vector<long> factors;
    size_t pos = 0;
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    while (pos < s.size()) {
        if (s.compare(pos, 2, "Z(") != 0) return fail();
        size_t close = s.find(')', pos);
        if (close == std::string::npos) return fail();
        try {
            size_t used = 0;
            long m = std::stol(s.substr(pos + 2, close - pos - 2), &used);
            if (used != close - pos - 2) return fail();
            factors.push_back(m);
        } catch (...) {
            return fail();
        }
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != 'x') return fail();
            ++pos;
            if (pos == s.size()) return fail();
        }
    }
    if (factors.empty()) return fail();
    return AbGroup(std::move(factors));
}

inline std::string to_string(const GrpElt& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + ")";
}

inline GrpElt elt_from_string(const AbGroup& G, const std::string& text) {
    auto fail = [&]() -> GrpElt {
        throw std::invalid_argument("elt_from_string: malformed element '" + text + "'");
    };
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return fail();
    std::vector<long> coords;
    std::string body = s.substr(1, s.size() - 2);
    size_t start = 0;
    while (true) {
        size_t comma = body.find(',', start);
        std::string item = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        try {
            size_t used = 0;
            coords.push_back(std::stol(item, &used));
            if (used != item.size()) return fail();
        } catch (...) {
            return fail();
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coords.size() != G.rank()) return fail();
    return make_elt(G, std::move(coords));
}

}  // namespace majiq
