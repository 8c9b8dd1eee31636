#ifndef TCI_CONE_HPP
#define TCI_CONE_HPP

#include <set>

#include "tci/abelian.hpp"
#include "tci/smith.hpp"

namespace tci {

namespace detail {

// Integer adjugate-based rays of the simplicial cone {x : B x >= 0}, B square
// nonsingular: ray j satisfies B r_j = |det B| e_j.
inline std::vector<IVec> simplicial_dual_basis(const IMat& B) {
    int d = B.rows;
    QMat m(d, 2 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = Rat(B(i, j));
        m(i, d + i) = 1;
    }
    if (int(rref(m).size()) != d) throw GuardError("simplicial_dual_basis: singular matrix");
    std::vector<IVec> rays(d);
    for (int j = 0; j < d; ++j) {
        QVec col(d);
        for (int i = 0; i < d; ++i) col[i] = m(i, d + j);  // column j of B^{-1}
        rays[j] = primitive(col);
    }
    return rays;
}

}  // namespace detail

/**
 * Double description: extreme rays of { x in Q^d : A x >= 0 }.
 * Pre: the cone is pointed, i.e. ker A = 0 (throws GuardError otherwise).
 * Output rays are primitive and lexicographically sorted.
 */
inline std::vector<IVec> dual_rays(const IMat& A) {
    int d = A.cols, m = A.rows;
    if (d == 0) return {};
    // greedy full-rank start subset
    std::vector<int> start;
    std::vector<IVec> rows;
    for (int i = 0; i < m && int(start.size()) < d; ++i) {
        rows.push_back(A.row(i));
        if (rank_of_vectors(rows) == int(start.size()) + 1) start.push_back(i);
        else rows.pop_back();
    }
    if (int(start.size()) != d) throw GuardError("dual_rays: cone is not pointed");

    IMat B(d, d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) B(k, j) = A(start[k], j);
    std::vector<IVec> rays = detail::simplicial_dual_basis(B);

    std::vector<char> processed(m, 0);
    for (int i : start) processed[i] = 1;

    struct RayRec {
        IVec r;
        std::vector<char> tight;  // over all m rows, only processed entries meaningful
    };
    auto tight_row = [&](const IVec& r) {
        std::vector<char> t(m, 0);
        for (int i = 0; i < m; ++i)
            if (processed[i] && dot(A.row(i), r) == 0) t[i] = 1;
        return t;
    };
    std::vector<RayRec> R;
    for (auto& r : rays) R.push_back({r, {}});

    for (int c = 0; c < m; ++c) {
        if (processed[c]) continue;
        processed[c] = 1;
        IVec a = A.row(c);
        std::vector<Int> val(R.size());
        bool any_neg = false;
        for (size_t k = 0; k < R.size(); ++k) {
            val[k] = dot(a, R[k].r);
            if (val[k] < 0) any_neg = true;
        }
        if (!any_neg) continue;
        for (auto& rec : R) rec.tight = tight_row(rec.r);  // refresh before adjacency
        std::vector<RayRec> next;
        std::vector<size_t> pos, neg;
        for (size_t k = 0; k < R.size(); ++k) {
            if (val[k] >= 0) next.push_back(R[k]);
            if (val[k] > 0) pos.push_back(k);
            else if (val[k] < 0) neg.push_back(k);
        }
        for (size_t p : pos)
            for (size_t q : neg) {
                // combinatorial adjacency: no third ray tight on the common set
                std::vector<char> common(m, 0);
                for (int i = 0; i < m; ++i) common[i] = R[p].tight[i] & R[q].tight[i];
                bool adjacent = true;
                for (size_t k = 0; k < R.size() && adjacent; ++k) {
                    if (k == p || k == q) continue;
                    bool covers = true;
                    for (int i = 0; i < m && covers; ++i)
                        if (common[i] && !R[k].tight[i]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                IVec nr = primitive(val[p] * R[q].r - val[q] * R[p].r);
                next.push_back({nr, {}});
            }
        R = std::move(next);
    }
    std::vector<IVec> out;
    out.reserve(R.size());
    for (auto& rec : R) out.push_back(rec.r);
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * Pointed rational polyhedral cone, canonical data: primitive extreme rays
 * (sorted), inward facet normals, equations cutting out the linear span.
 */
struct Cone {
    int ambient = 0;
    int dim = 0;
    std::vector<IVec> rays;       // primitive, lex sorted; empty for the zero cone
    std::vector<IVec> facets;     // ambient representatives of inward facet normals
    std::vector<IVec> equations;  // basis of span(cone)^perp

    bool operator==(const Cone& o) const { return ambient == o.ambient && rays == o.rays; }
    bool operator<(const Cone& o) const { return rays < o.rays; }

    bool contains(const IVec& x) const {
        for (const IVec& e : equations)
            if (dot(e, x) != 0) return false;
        for (const IVec& f : facets)
            if (dot(f, x) < 0) return false;
        return true;
    }
    bool contains(const Cone& c) const {
        if (c.rays.empty()) return true;
        for (const IVec& r : c.rays)
            if (!contains(r)) return false;
        return true;
    }

    // Sum of the primitive extreme rays: a relative interior point (0 for the zero cone).
    IVec relint_point() const {
        IVec p(ambient, Int(0));
        for (const IVec& r : rays) p = p + r;
        return p;
    }

    bool is_simplicial() const { return int(rays.size()) == dim; }

    // Index of the sublattice spanned by the rays inside the saturated span lattice.
    // Pre: simplicial. 1 means the cone is regular.
    Int multiplicity() const {
        if (!is_simplicial()) throw MathError("multiplicity: cone is not simplicial");
        if (rays.empty()) return 1;
        SmithForm f = smith_normal_form(IMat::from_columns(rays));
        Int m = 1;
        for (const Int& d : f.invariants) m *= d;
        return m;
    }
};

/** Build a pointed cone from (not necessarily extreme) generators. */
inline Cone make_cone(int ambient, const std::vector<IVec>& gens) {
    Cone c;
    c.ambient = ambient;
    std::vector<IVec> gs;
    for (const IVec& g : gens) {
        if (int(g.size()) != ambient) throw MathError("make_cone: bad generator length");
        if (!is_zero(g)) gs.push_back(primitive(g));
    }
    if (gs.empty()) {
        c.dim = 0;
        c.equations = IMat::identity(ambient).columns();
        return c;
    }
    IMat G = IMat::from_columns(gs);
    IMat Gt = G.transposed();
    c.equations = kernel_basis(Gt);

    // saturated coordinates on span(G): x -> first d entries of U x
    SmithForm sat = smith_normal_form(G);
    int d = sat.rank;
    c.dim = d;
    IMat cut(d, ambient);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < ambient; ++j) cut(i, j) = sat.U(i, j);
    std::vector<IVec> gs_span;
    for (const IVec& g : gs) gs_span.push_back(cut * g);

    // facets of the span-coordinate cone = extreme rays of its dual
    std::vector<IVec> facets_span = dual_rays(IMat::from_rows(gs_span));
    if (rank_of_vectors(facets_span) != d)
        throw MathError("make_cone: cone is not pointed");
    for (const IVec& f : facets_span) c.facets.push_back(primitive(f * cut));

    // extreme generators: tight facets of rank d-1
    std::set<IVec> extreme;
    for (const IVec& g : gs) {
        std::vector<IVec> tight;
        for (const IVec& f : c.facets)
            if (dot(f, g) == 0) tight.push_back(f);
        if (rank_of_vectors(tight) == d - 1) extreme.insert(g);
    }
    c.rays.assign(extreme.begin(), extreme.end());
    std::sort(c.rays.begin(), c.rays.end(), lex_less);
    return c;
}

/** Intersection of two pointed cones in the same ambient space. */
inline Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw MathError("intersect: ambient mismatch");
    int n = a.ambient;
    std::vector<IVec> ineqs;
    for (auto* c : {&a, &b}) {
        for (const IVec& f : c->facets) ineqs.push_back(f);
        for (const IVec& e : c->equations) {
            ineqs.push_back(e);
            ineqs.push_back(-e);
        }
    }
    if (ineqs.empty()) {
        // both cones are full spaces only possible when pointedness fails; n == 0
        return make_cone(n, {});
    }
    std::vector<IVec> rays = dual_rays(IMat::from_rows(ineqs));
    return make_cone(n, rays);
}

// The unique face of `c` containing `x` in its relative interior.
// Pre: c.contains(x).
inline Cone face_containing(const Cone& c, const IVec& x) {
    if (!c.contains(x)) throw MathError("face_containing: point outside cone");
    std::vector<IVec> sub;
    for (const IVec& r : c.rays) {
        bool keep = true;
        for (const IVec& f : c.facets)
            if (dot(f, x) == 0 && dot(f, r) != 0) { keep = false; break; }
        if (keep) sub.push_back(r);
    }
    return make_cone(c.ambient, sub);
}

inline bool is_face_of(const Cone& face, const Cone& c) {
    if (face.ambient != c.ambient) return false;
    if (face.rays.empty()) return true;  // the zero cone is a face of every pointed cone
    for (const IVec& r : face.rays)
        if (!c.contains(r)) return false;
    return face == face_containing(c, face.relint_point());
}

/** All faces, the cone itself and the zero cone included. Sorted canonically. */
inline std::vector<Cone> faces(const Cone& c) {
    // every proper face is an intersection of facets: close the facet ray-sets
    // under intersection
    std::set<std::vector<int>> sets;
    int nr = int(c.rays.size());
    std::vector<std::vector<int>> facet_sets;
    for (const IVec& f : c.facets) {
        std::vector<int> s;
        for (int i = 0; i < nr; ++i)
            if (dot(f, c.rays[i]) == 0) s.push_back(i);
        facet_sets.push_back(s);
        sets.insert(s);
    }
    std::vector<int> all(nr);
    for (int i = 0; i < nr; ++i) all[i] = i;
    sets.insert(all);
    for (;;) {
        std::set<std::vector<int>> grown = sets;
        for (const auto& s : sets)
            for (const auto& f : facet_sets) {
                std::vector<int> inter;
                std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                      std::back_inserter(inter));
                grown.insert(inter);
            }
        if (grown.size() == sets.size()) break;
        sets = std::move(grown);
    }
    sets.insert({});  // zero cone
    std::vector<Cone> out;
    for (const auto& s : sets) {
        std::vector<IVec> gens;
        for (int i : s) gens.push_back(c.rays[i]);
        out.push_back(make_cone(c.ambient, gens));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * Supporting integral linear form of minimal level: the smallest iota >= 1
 * such that some integral m has <m, ray> = -iota for every extreme ray;
 * returns (iota, m). Nullopt when no rational solution exists.
 */
struct IntegralLevel {
    Int iota;
    IVec m;
};

inline std::optional<IntegralLevel> minimal_integral_level(const Cone& c) {
    if (c.rays.empty()) return IntegralLevel{1, IVec(c.ambient, Int(0))};
    IMat M = IMat::from_rows(c.rays);  // M u = -iota * 1
    SmithForm f = smith_normal_form(M);
    IVec ones(M.rows, Int(1));
    IVec cvec = f.U * ones;
    Int iota = 1;
    for (int k = 0; k < M.rows; ++k) {
        if (k < f.rank) {
            Int d = f.S(k, k);
            Int g = gcd(d, cvec[k]);
            iota = lcm(iota, d / g);
        } else if (cvec[k] != 0) {
            return std::nullopt;
        }
    }
    auto m = solve_integer(M, (-iota) * ones);
    if (!m) throw GuardError("minimal_integral_level: solvable system failed to solve");
    return IntegralLevel{iota, *m};
}

/**
 * Rational linear form u with <u, ray> = -1 on all extreme rays; unique on
 * the span. Errors when the system is inconsistent (not Q-Gorenstein).
 */
struct SupportForm {
    QVec u;      // one valid ambient representative
    Int index;   // minimal iota with iota*u integral for some valid choice
};

inline SupportForm gorenstein_form(const Cone& c) {
    auto lvl = minimal_integral_level(c);
    if (!lvl)
        throw MathError("gorenstein_form: rays admit no common supporting level");
    SupportForm s;
    s.index = lvl->iota;
    s.u.resize(c.ambient);
    for (int i = 0; i < c.ambient; ++i) s.u[i] = Rat(lvl->m[i]) / Rat(lvl->iota);
    return s;
}

}  // namespace tci

#endif
