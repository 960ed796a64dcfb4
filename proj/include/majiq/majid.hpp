#pragma once

// Bimodule structures on the arrow space of a covering quiver, compatible
// with a 3-cocycle associator, plus the induced graded multiplication on
// paths (quantum shuffle). One "species" is a G-orbit of arrows x -> xu
// together with a projective character chi of G; chi determines how vertices
// act on the species from the right, while the left action is forced by the
// cocycle once the basis is normalized to X_x = x . X_1.
//
// Tables built here are exact roots of unity over one common modulus, so
// every checker below is a finite exact computation.

#include <majiq/cocycle.hpp>
#include <majiq/cyclotomic.hpp>
#include <majiq/group.hpp>
#include <majiq/quiver.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majiq {

struct SpeciesSpec {
    GrpElt cls;                    // u: arrows run x -> xu
    std::string name;
    std::vector<RootOfUnity> chi;  // indexed by index_of(G, f)
};

// chi(e) chi(f) == phi~_u(e,f) chi(ef) for all pairs, and chi(1) == 1
inline bool character_is_projective(const Cocycle3& phi, const GrpElt& u,
                                    const std::vector<RootOfUnity>& chi, long modulus,
                                    std::string* why = nullptr) {
    AbGroup G = group_of(phi);
    if (chi.size() != static_cast<size_t>(G.order()))
        throw std::invalid_argument("character_is_projective: need one value per group element");
    auto at = [&](const GrpElt& x) { return embed(chi[index_of(G, x)], modulus); };
    if (!at(identity(G)).is_one()) {
        if (why) *why = "chi(1) != 1";
        return false;
    }
    for (const auto& e : enumerate(G))
        for (const auto& f : enumerate(G)) {
            RootOfUnity lhs = at(e) * at(f);
            RootOfUnity rhs = embed(phi_tilde(phi, e, f, u), modulus) * at(mul(G, e, f));
            if (lhs != rhs) {
                if (why)
                    *why = "projective identity fails at (" + to_string(e) + "," + to_string(f) +
                           ")";
                return false;
            }
        }
    return true;
}

// Extend generator values to all of G along the chain that decrements the
// last nonzero coordinate: chi(x' g_j) = chi(x') chi(g_j) / phi~_u(x', g_j).
// The result is a projective character iff the generator values admit one.
inline std::vector<RootOfUnity> extend_character(const Cocycle3& phi, const GrpElt& u,
                                                 const std::vector<RootOfUnity>& gen_values,
                                                 long modulus) {
    AbGroup G = group_of(phi);
    if (gen_values.size() != G.rank())
        throw std::invalid_argument("extend_character: need one value per group generator");
    std::vector<RootOfUnity> chi(G.order(), RootOfUnity::one(modulus));
    for (long idx = 1; idx < G.order(); ++idx) {
        GrpElt x = element_at(G, idx);
        size_t j = 0;
        for (size_t t = 0; t < x.c.size(); ++t)
            if (x.c[t] != 0) j = t;
        GrpElt prev = x;
        prev.c[j] -= 1;
        GrpElt gen = identity(G);
        gen.c[j] = 1;
        RootOfUnity v = chi[index_of(G, prev)] * embed(gen_values[j], modulus) *
                        inv(embed(phi_tilde(phi, prev, gen, u), modulus));
        chi[idx] = v;
    }
    return chi;
}

// Closed-form admissibility of generator values (rank 1 and 2 families).
// These are deliberately independent of extend_character/character_is_projective;
// tests assert the two routes agree.
inline bool rank2_condition_first_class(const Rank2Cocycle& c, RootOfUnity v1, RootOfUnity v2) {
    long M = std::lcm(std::lcm(v1.modulus, v2.modulus), std::lcm(c.m, c.n));
    return pow(embed(v1, M), c.m) == embed(RootOfUnity::zeta(c.m, c.a), M) &&
           pow(embed(v2, M), c.n).is_one();
}

inline bool rank2_condition_second_class(const Rank2Cocycle& c, RootOfUnity v1, RootOfUnity v2) {
    long M = std::lcm(std::lcm(v1.modulus, v2.modulus), std::lcm(c.m, c.n));
    return pow(embed(v1, M), c.m) == embed(RootOfUnity::zeta(c.n, c.b), M) &&
           pow(embed(v2, M), c.n) == embed(RootOfUnity::zeta(c.n, c.c), M);
}

inline bool rank1_condition(const Rank1Cocycle& c, long alpha, RootOfUnity mu) {
    long M = std::lcm(mu.modulus, c.m);
    return pow(embed(mu, M), c.m) == embed(RootOfUnity::zeta(c.m, c.a * positive_mod(alpha, c.m)), M);
}

class MajidStructure {
public:
    MajidStructure(Cocycle3 phi, std::vector<SpeciesSpec> species)
        : phi_(std::move(phi)), quiver_(make_quiver(group_of(phi_), {})),
          species_(std::move(species)) {
        init_quiver_and_modulus();
        const AbGroup& G = quiver_.group;
        const long n = G.order();
        auto all = enumerate(G);
        left_.assign(species_.size(), {});
        right_.assign(species_.size(), {});
        for (size_t s = 0; s < species_.size(); ++s) {
            const GrpElt& u = species_[s].cls;
            auto& L = left_[s];
            auto& R = right_[s];
            L.assign(n, std::vector<RootOfUnity>(n, RootOfUnity::one(mod_)));
            R.assign(n, std::vector<RootOfUnity>(n, RootOfUnity::one(mod_)));
            // f . X_x = phi(f, x, u) X_{fx}
            for (long fi = 0; fi < n; ++fi)
                for (long xi = 0; xi < n; ++xi)
                    L[fi][xi] = embed(eval3_root(phi_, all[fi], all[xi], u), mod_);
            // X_x . f = chi(f^-1) [phi(f^-1,u,f)/phi(f^-1,f,u)] [phi(x,f,u)/phi(x,u,f)] X_{xf}
            for (long fi = 0; fi < n; ++fi) {
                GrpElt f = all[fi];
                GrpElt finv = inv(G, f);
                RootOfUnity base = embed(species_[s].chi[index_of(G, finv)], mod_) *
                                   embed(eval3_root(phi_, finv, u, f), mod_) *
                                   inv(embed(eval3_root(phi_, finv, f, u), mod_));
                for (long xi = 0; xi < n; ++xi) {
                    GrpElt x = all[xi];
                    R[xi][fi] = base * embed(eval3_root(phi_, x, f, u), mod_) *
                                inv(embed(eval3_root(phi_, x, u, f), mod_));
                }
            }
        }
    }

    // Bypass the construction formulas and install tables directly; used to
    // probe the checkers with deliberately broken structures.
    static MajidStructure from_tables(Cocycle3 phi, std::vector<SpeciesSpec> species,
                                      std::vector<std::vector<std::vector<RootOfUnity>>> left,
                                      std::vector<std::vector<std::vector<RootOfUnity>>> right) {
        MajidStructure m(std::move(phi), std::move(species));
        const size_t n = static_cast<size_t>(m.group().order());
        if (left.size() != m.species_.size() || right.size() != m.species_.size())
            throw std::invalid_argument("from_tables: one table pair per species required");
        long M = m.mod_;
        for (const auto* tab : {&left, &right})
            for (const auto& per : *tab) {
                if (per.size() != n) throw std::invalid_argument("from_tables: table shape mismatch");
                for (const auto& row : per) {
                    if (row.size() != n)
                        throw std::invalid_argument("from_tables: table shape mismatch");
                    for (const auto& v : row) M = std::lcm(M, v.modulus);
                }
            }
        m.mod_ = M;
        m.left_ = std::move(left);
        m.right_ = std::move(right);
        for (auto* tab : {&m.left_, &m.right_})
            for (auto& per : *tab)
                for (auto& row : per)
                    for (auto& v : row) v = embed(v, M);
        for (auto& s : m.species_)
            for (auto& v : s.chi) v = embed(v, M);
        return m;
    }

    const Cocycle3& cocycle() const { return phi_; }
    const HopfQuiver& quiver() const { return quiver_; }
    const AbGroup& group() const { return quiver_.group; }
    long modulus() const { return mod_; }
    size_t species_count() const { return species_.size(); }
    const SpeciesSpec& species(size_t s) const { return species_.at(s); }

    RootOfUnity left_scalar(const GrpElt& f, const Arrow& a) const {
        return left_.at(a.kind)[index_of(group(), f)][index_of(group(), a.source)];
    }

    Arrow left_moved(const GrpElt& f, const Arrow& a) const {
        return Arrow{mul(group(), f, a.source), a.kind};
    }

    RootOfUnity right_scalar(const Arrow& a, const GrpElt& f) const {
        return right_.at(a.kind)[index_of(group(), a.source)][index_of(group(), f)];
    }

    Arrow right_moved(const Arrow& a, const GrpElt& f) const {
        return Arrow{mul(group(), a.source, f), a.kind};
    }

private:
    void init_quiver_and_modulus() {
        AbGroup G = group_of(phi_);
        std::vector<ArrowKind> kinds;
        mod_ = value_modulus(phi_);
        for (auto& s : species_) {
            check_member(G, s.cls);
            s.cls = make_elt(G, s.cls.c);
            kinds.push_back(ArrowKind{s.cls, s.name});
            if (s.chi.size() != static_cast<size_t>(G.order()))
                throw std::invalid_argument(
                    "MajidStructure: species '" + s.name + "' needs one chi value per group element");
            for (const auto& v : s.chi) mod_ = std::lcm(mod_, v.modulus);
        }
        quiver_ = make_quiver(G, std::move(kinds));
        for (auto& s : species_)
            for (auto& v : s.chi) v = embed(v, mod_);
    }

    Cocycle3 phi_;
    HopfQuiver quiver_;
    long mod_ = 1;
    std::vector<SpeciesSpec> species_;
    std::vector<std::vector<std::vector<RootOfUnity>>> left_, right_;
};

// ---------------------------------------------------------------------------
// Axiom checker: unit conditions plus the three compatibility equalities on
// every (species, e, f, x) combination. An arrow X_x has left degree xu and
// right degree x.

inline bool check_bimodule_axioms(const MajidStructure& M, std::string* why = nullptr) {
    const AbGroup& G = M.group();
    auto all = enumerate(G);
    auto fail = [&](const std::string& what) {
        if (why) *why = what;
        return false;
    };
    for (size_t s = 0; s < M.species_count(); ++s) {
        const GrpElt& u = M.species(s).cls;
        const Cocycle3& phi = M.cocycle();
        const long mod = M.modulus();
        auto Phi = [&](const GrpElt& a, const GrpElt& b, const GrpElt& c) {
            return embed(eval3_root(phi, a, b, c), mod);
        };
        for (const auto& x : all) {
            Arrow ax{x, s};
            if (!M.left_scalar(identity(G), ax).is_one())
                return fail("unit acts nontrivially on the left of " + to_string(x));
            if (!M.right_scalar(ax, identity(G)).is_one())
                return fail("unit acts nontrivially on the right of " + to_string(x));
        }
        for (const auto& e : all)
            for (const auto& f : all)
                for (const auto& x : all) {
                    Arrow ax{x, s};
                    GrpElt xu = mul(G, x, u);
                    // e.(f.X_x) = [phi(e,f,xu)/phi(e,f,x)] (ef).X_x
                    {
                        RootOfUnity lhs = M.left_scalar(f, ax) * M.left_scalar(e, M.left_moved(f, ax));
                        RootOfUnity rhs =
                            Phi(e, f, xu) * inv(Phi(e, f, x)) * M.left_scalar(mul(G, e, f), ax);
                        if (lhs != rhs)
                            return fail("left compatibility fails for species '" +
                                        M.species(s).name + "' at (" + to_string(e) + "," +
                                        to_string(f) + "," + to_string(x) + ")");
                    }
                    // (X_x.e).f = [phi(x,e,f)/phi(xu,e,f)] X_x.(ef)
                    {
                        RootOfUnity lhs =
                            M.right_scalar(ax, e) * M.right_scalar(M.right_moved(ax, e), f);
                        RootOfUnity rhs =
                            Phi(x, e, f) * inv(Phi(xu, e, f)) * M.right_scalar(ax, mul(G, e, f));
                        if (lhs != rhs)
                            return fail("right compatibility fails for species '" +
                                        M.species(s).name + "' at (" + to_string(e) + "," +
                                        to_string(f) + "," + to_string(x) + ")");
                    }
                    // (e.X_x).f = [phi(e,x,f)/phi(e,xu,f)] e.(X_x.f)
                    {
                        RootOfUnity lhs =
                            M.left_scalar(e, ax) * M.right_scalar(M.left_moved(e, ax), f);
                        RootOfUnity rhs = Phi(e, x, f) * inv(Phi(e, xu, f)) *
                                          M.right_scalar(ax, f) *
                                          M.left_scalar(e, M.right_moved(ax, f));
                        if (lhs != rhs)
                            return fail("mixed compatibility fails for species '" +
                                        M.species(s).name + "' at (" + to_string(e) + "," +
                                        to_string(f) + "," + to_string(x) + ")");
                    }
                }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quantum shuffle product on paths. The product of two basis paths is a sum
// over interleavings; in each interleaving a slot holds an arrow of one
// factor acted on by the current vertex of the other (left action when the
// arrow comes from the right factor, right action when from the left).

namespace detail {

template <typename Emit>
inline void for_each_interleaving(long n, long la, Emit&& emit) {
    // iterate all subsets of {0..n-1} of size la in lexicographic order
    std::vector<long> pos(la);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<bool> sel(n, false);
    while (true) {
        std::fill(sel.begin(), sel.end(), false);
        for (long p : pos) sel[p] = true;
        emit(sel);
        long i = la - 1;
        while (i >= 0 && pos[i] == n - la + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (long j = i + 1; j < la; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace detail

inline PathVec shuffle(const MajidStructure& M, const Path& alpha, const Path& beta) {
    const AbGroup& G = M.group();
    const HopfQuiver& q = M.quiver();
    const long la = alpha.length(), lb = beta.length(), n = la + lb;
    PathVec out;
    detail::for_each_interleaving(n, la, [&](const std::vector<bool>& sel) {
        RootOfUnity scalar = RootOfUnity::one(M.modulus());
        GrpElt va = alpha.start, vb = beta.start;
        size_t ai = 0, bi = 0;
        Path term{mul(G, alpha.start, beta.start), {}};
        for (long i = 0; i < n; ++i) {
            if (sel[i]) {
                Arrow a{va, alpha.kinds[ai]};
                scalar = scalar * M.right_scalar(a, vb);
                term.kinds.push_back(a.kind);
                va = mul(G, va, q.kinds[a.kind].cls);
                ++ai;
            } else {
                Arrow b{vb, beta.kinds[bi]};
                scalar = scalar * M.left_scalar(va, b);
                term.kinds.push_back(b.kind);
                vb = mul(G, vb, q.kinds[b.kind].cls);
                ++bi;
            }
        }
        add_term(out, term, to_cyc(scalar));
    });
    return out;
}

inline PathVec single(const MajidStructure& M, const Path& p) {
    PathVec out;
    add_term(out, p, CycNum::one(M.modulus()));
    return out;
}

inline PathVec shuffle(const MajidStructure& M, const PathVec& a, const PathVec& b) {
    PathVec out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            PathVec t = shuffle(M, pa, pb);
            for (const auto& [p, c] : t) add_term(out, p, c * ca * cb);
        }
    return out;
}

// Left-nested power (...((XX)X)...)X of the species arrow at the unit vertex.
inline PathVec left_power(const MajidStructure& M, size_t species, long l) {
    if (l < 0) throw std::invalid_argument("left_power: negative power");
    PathVec acc;
    add_term(acc, vertex_path(identity(M.group())), CycNum::one(M.modulus()));
    Path x = arrow_path(Arrow{identity(M.group()), species});
    PathVec xv;
    add_term(xv, x, CycNum::one(M.modulus()));
    for (long i = 0; i < l; ++i) acc = shuffle(M, acc, xv);
    return acc;
}

// Right translation of a species by its own class carries an x-independent
// scalar; the left-nested powers collapse to q-factorials of it.
inline RootOfUnity power_base(const MajidStructure& M, size_t species) {
    const GrpElt& u = M.species(species).cls;
    return M.right_scalar(Arrow{identity(M.group()), species}, u);
}

// l!_rho times the straight path of l arrows of the species starting at 1
inline PathVec closed_form_power(const MajidStructure& M, size_t species, long l) {
    if (l < 0) throw std::invalid_argument("closed_form_power: negative power");
    CycNum coeff = q_factorial(l, to_cyc(power_base(M, species)));
    Path p{identity(M.group()), std::vector<size_t>(l, species)};
    PathVec out;
    add_term(out, p, coeff);
    return out;
}

// Smallest l with X^{left-nested l} = 0, or nullopt when no power vanishes.
inline std::optional<long> nilpotency_order(const MajidStructure& M, size_t species) {
    RootOfUnity rho = power_base(M, species);
    if (rho.is_one()) return std::nullopt;
    return rho.order();
}

// The scalar sigma_t of the degree-one relation  t * X = sigma_t X * t.
inline RootOfUnity relation_scalar(const MajidStructure& M, size_t species, const GrpElt& t) {
    return inv(M.right_scalar(Arrow{identity(M.group()), species}, t));
}

// Inverse direction: recover chi(t) from a printed relation scalar.
inline RootOfUnity chi_from_relation_scalar(const Cocycle3& phi, const GrpElt& u, const GrpElt& t,
                                            RootOfUnity sigma) {
    AbGroup G = group_of(phi);
    long M = std::lcm(sigma.modulus, value_modulus(phi));
    GrpElt ti = inv(G, t);
    return embed(phi_tilde(phi, t, ti, u), M) * embed(sigma, M) *
           embed(eval3_root(phi, ti, u, t), M) * inv(embed(eval3_root(phi, ti, t, u), M));
}

// ---------------------------------------------------------------------------
// Commutation of two distinct species: X * Y and Y * X are supported on the
// same two paths; they are proportional iff the cross right-translation
// scalars are mutually inverse, and then X * Y = q Y * X with q as below.

struct SkewCommutation {
    bool proportional;
    RootOfUnity q;       // meaningful when proportional
    RootOfUnity rho_xy;  // right translation of X by the class of Y
    RootOfUnity rho_yx;  // right translation of Y by the class of X
};

inline SkewCommutation skew_commutation(const MajidStructure& M, size_t sx, size_t sy) {
    if (sx == sy) throw std::invalid_argument("skew_commutation: need two distinct species");
    RootOfUnity rho_xy = M.right_scalar(Arrow{identity(M.group()), sx}, M.species(sy).cls);
    RootOfUnity rho_yx = M.right_scalar(Arrow{identity(M.group()), sy}, M.species(sx).cls);
    bool prop = (rho_xy * rho_yx).is_one();
    return SkewCommutation{prop, rho_xy, rho_xy, rho_yx};
}

// ---------------------------------------------------------------------------
// Quasi-associativity of the shuffle product on basis paths:
//   phi(t(a),t(b),t(c)) (a*b)*c == phi(s(a),s(b),s(c)) a*(b*c).

inline bool check_majid_axiom(const MajidStructure& M, long max_total_len, long max_factor_len,
                              std::string* why = nullptr) {
    const HopfQuiver& q = M.quiver();
    std::vector<std::vector<Path>> by_len;
    for (long l = 0; l <= max_factor_len; ++l) by_len.push_back(enumerate_paths(q, l));
    for (long la = 0; la <= max_factor_len; ++la)
        for (long lb = 0; lb <= max_factor_len; ++lb)
            for (long lc = 0; lc <= max_factor_len; ++lc) {
                if (la + lb + lc > max_total_len) continue;
                for (const auto& a : by_len[la])
                    for (const auto& b : by_len[lb])
                        for (const auto& c : by_len[lc]) {
                            CycNum ft = eval3(M.cocycle(), end_vertex(q, a), end_vertex(q, b),
                                              end_vertex(q, c), M.modulus());
                            CycNum fs =
                                eval3(M.cocycle(), a.start, b.start, c.start, M.modulus());
                            PathVec lhs = scale(shuffle(M, shuffle(M, a, b), single(M, c)), ft);
                            PathVec rhs = scale(shuffle(M, single(M, a), shuffle(M, b, c)), fs);
                            if (lhs != rhs) {
                                if (why)
                                    *why = "associativity fails at (" + to_string(q, a) + ") (" +
                                           to_string(q, b) + ") (" + to_string(q, c) + ")";
                                return false;
                            }
                        }
            }
    return true;
}

// ---------------------------------------------------------------------------
// Exact row reduction over path vectors; pivots are the smallest paths in
// the map order, so ranks are deterministic.

class RowSpace {
public:
    // absorb v; returns true when v was independent of the rows so far
    bool insert(PathVec v) {
        while (!v.empty()) {
            auto lead = v.begin();
            auto hit = pivot_.find(lead->first);
            if (hit == pivot_.end()) {
                CycNum scale_by = inverse(lead->second);
                PathVec row;
                for (const auto& [p, c] : v) add_term(row, p, c * scale_by);
                pivot_.emplace(row.begin()->first, rows_.size());
                rows_.push_back(std::move(row));
                return true;
            }
            const PathVec& row = rows_[hit->second];
            CycNum factor = lead->second;
            for (const auto& [p, c] : row) add_term(v, p, -(c * factor));
        }
        return false;
    }

    long dim() const { return static_cast<long>(rows_.size()); }
    const std::vector<PathVec>& rows() const { return rows_; }

private:
    std::vector<PathVec> rows_;
    std::map<Path, size_t> pivot_;
};

struct SubalgebraResult {
    bool complete = false;         // an empty level was reached before the cap
    long dimension = 0;            // sum of level ranks; meaningful when complete
    std::vector<long> level_dims;  // rank per degree, starting at degree 0
};

// Dimension of the graded subalgebra generated by all vertices and the
// species arrows at the unit vertex. Degree d is spanned by left-nested
// products; each level is built from the previous one by one arrow multiply
// and then closed under right vertex translation.
inline SubalgebraResult subalgebra_dimension(const MajidStructure& M, long max_levels = 64) {
    SubalgebraResult res;
    const AbGroup& G = M.group();
    auto vertices = enumerate(G);

    RowSpace level;
    for (const auto& v : vertices) level.insert(single(M, vertex_path(v)));
    res.level_dims.push_back(level.dim());
    res.dimension = level.dim();

    for (long d = 1; d <= max_levels; ++d) {
        RowSpace next;
        for (const auto& row : level.rows())
            for (size_t s = 0; s < M.species_count(); ++s)
                next.insert(shuffle(M, row, single(M, arrow_path(Arrow{identity(G), s}))));
        for (size_t i = 0; i < static_cast<size_t>(next.dim()); ++i)
            for (const auto& w : vertices)
                next.insert(shuffle(M, next.rows()[i], single(M, vertex_path(w))));
        if (next.dim() == 0) {
            res.complete = true;
            return res;
        }
        res.level_dims.push_back(next.dim());
        res.dimension += next.dim();
        level = std::move(next);
    }
    return res;  // cap reached, res.complete stays false
}

}  // namespace majiq
