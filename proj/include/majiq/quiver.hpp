#pragma once

// Covering quivers of abelian groups: one arrow x -> ux per vertex x and
// arrow kind u. An arrow kind is a group element (its "class") plus a name;
// parallel arrows are distinct kinds sharing the same class. Paths are a
// start vertex plus the kind sequence in traversal order (kinds[0] first).
// Linear combinations of paths with exact coefficients form PathVec.

#include <majiq/cyclotomic.hpp>
#include <majiq/group.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majiq {

struct ArrowKind {
    GrpElt cls;
    std::string name;
};

struct HopfQuiver {
    AbGroup group;
    std::vector<ArrowKind> kinds;
};

struct Arrow {
    GrpElt source;
    size_t kind;
};

struct Path {
    GrpElt start;
    std::vector<size_t> kinds;

    long length() const { return static_cast<long>(kinds.size()); }

    bool operator==(const Path& o) const { return start == o.start && kinds == o.kinds; }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        if (start != o.start) return start < o.start;
        return kinds < o.kinds;
    }
};

inline HopfQuiver make_quiver(AbGroup G, std::vector<ArrowKind> kinds) {
    for (auto& k : kinds) {
        check_member(G, k.cls);
        k.cls = make_elt(G, k.cls.c);
        if (k.name.empty() || !std::isalpha(static_cast<unsigned char>(k.name[0])))
            throw std::invalid_argument("make_quiver: kind names must start with a letter");
        for (char ch : k.name)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw std::invalid_argument("make_quiver: kind name '" + k.name +
                                            "' has unsupported characters");
    }
    for (size_t i = 0; i < kinds.size(); ++i)
        for (size_t j = i + 1; j < kinds.size(); ++j)
            if (kinds[i].name == kinds[j].name)
                throw std::invalid_argument("make_quiver: duplicate kind name '" + kinds[i].name +
                                            "'");
    return HopfQuiver{std::move(G), std::move(kinds)};
}

inline size_t kind_index(const HopfQuiver& q, const std::string& name) {
    for (size_t i = 0; i < q.kinds.size(); ++i)
        if (q.kinds[i].name == name) return i;
    throw std::invalid_argument("kind_index: no arrow kind named '" + name + "'");
}

inline GrpElt target(const HopfQuiver& q, const Arrow& a) {
    return mul(q.group, a.source, q.kinds.at(a.kind).cls);
}

inline Path vertex_path(const GrpElt& v) { return Path{v, {}}; }

inline Path arrow_path(const Arrow& a) { return Path{a.source, {a.kind}}; }

inline GrpElt end_vertex(const HopfQuiver& q, const Path& p) {
    GrpElt v = p.start;
    for (size_t k : p.kinds) v = mul(q.group, v, q.kinds.at(k).cls);
    return v;
}

inline Path append(const HopfQuiver& q, Path p, size_t kind) {
    if (kind >= q.kinds.size()) throw std::out_of_range("append: arrow kind out of range");
    p.kinds.push_back(kind);
    return p;
}

// arrow at position i (1-based, traversal order) of a path
inline Arrow arrow_at(const HopfQuiver& q, const Path& p, long i) {
    if (i < 1 || i > p.length()) throw std::out_of_range("arrow_at: position out of range");
    GrpElt v = p.start;
    for (long j = 0; j + 1 < i; ++j) v = mul(q.group, v, q.kinds.at(p.kinds[j]).cls);
    return Arrow{v, p.kinds[i - 1]};
}

inline std::vector<Path> enumerate_paths(const HopfQuiver& q, long length) {
    if (length < 0) throw std::invalid_argument("enumerate_paths: negative length");
    std::vector<Path> out;
    for (const auto& v : enumerate(q.group)) out.push_back(vertex_path(v));
    for (long l = 0; l < length; ++l) {
        std::vector<Path> next;
        next.reserve(out.size() * q.kinds.size());
        for (const auto& p : out)
            for (size_t k = 0; k < q.kinds.size(); ++k) next.push_back(append(q, p, k));
        out = std::move(next);
    }
    return out;
}

// Coproduct of a path in the path coalgebra: all two-block cuts, later block
// on the left. For an arrow this is target (x) arrow + arrow (x) source.
inline std::vector<std::pair<Path, Path>> coproduct(const HopfQuiver& q, const Path& p) {
    std::vector<std::pair<Path, Path>> out;
    const long l = p.length();
    out.reserve(l + 1);
    for (long k = 0; k <= l; ++k) {
        Path right{p.start, {p.kinds.begin(), p.kinds.begin() + k}};
        Path left{end_vertex(q, right), {p.kinds.begin() + k, p.kinds.end()}};
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact linear combinations of paths.

using PathVec = std::map<Path, CycNum>;

inline void add_term(PathVec& v, const Path& p, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = v.find(p);
    if (it == v.end()) {
        v.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

inline PathVec scale(const PathVec& v, const CycNum& c) {
    PathVec out;
    for (const auto& [p, x] : v) add_term(out, p, x * c);
    return out;
}

inline PathVec add(const PathVec& a, const PathVec& b) {
    PathVec out = a;
    for (const auto& [p, x] : b) add_term(out, p, x);
    return out;
}

// ---------------------------------------------------------------------------
// Text forms. Paths render as "(0,0) -X-> (1,0) -Y-> (1,1)".

inline std::string to_string(const HopfQuiver& q, const Path& p) {
    std::string s = to_string(p.start);
    GrpElt v = p.start;
    for (size_t k : p.kinds) {
        v = mul(q.group, v, q.kinds.at(k).cls);
        s += " -" + q.kinds.at(k).name + "-> " + to_string(v);
    }
    return s;
}

inline Path path_from_string(const HopfQuiver& q, const std::string& text) {
    auto fail = [&](const std::string& what) -> Path {
        throw std::invalid_argument("path_from_string: " + what + " in '" + text + "'");
    };
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.size() % 2 != 1) return fail("expected vertex/arrow alternation");
    GrpElt v = elt_from_string(q.group, tokens[0]);
    Path p = vertex_path(v);
    for (size_t i = 1; i < tokens.size(); i += 2) {
        const std::string& a = tokens[i];
        if (a.size() < 4 || a.front() != '-' || a.compare(a.size() - 2, 2, "->") != 0)
            return fail("malformed arrow token '" + a + "'");
        size_t k = kind_index(q, a.substr(1, a.size() - 3));
        v = mul(q.group, v, q.kinds[k].cls);
        GrpElt stated = elt_from_string(q.group, tokens[i + 1]);
        if (stated != v)
            return fail("arrow target " + to_string(stated) + " does not match " + to_string(v));
        p.kinds.push_back(k);
    }
    return p;
}

inline std::string to_string(const HopfQuiver& q, const PathVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : v) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + " * " + to_string(q, p);
    }
    return s;
}

}  // namespace majiq
