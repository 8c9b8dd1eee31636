#ifndef TCI_POLYTOPE_HPP
#define TCI_POLYTOPE_HPP

#include "tci/cone.hpp"

namespace tci {

// <a, x> + b >= 0 (or = 0 when used as an equation)
struct AffineForm {
    IVec a;
    Int b;
    Rat eval(const QVec& x) const { return dot(a, x) + Rat(b); }
    Int eval(const IVec& x) const { return dot(a, x) + b; }
};

/**
 * Bounded rational polytope. Canonical data: lex-sorted vertex list.
 * Inequalities are valid and include every facet; equations cut out the
 * affine hull.
 */
struct Polytope {
    int ambient = 0;
    int dim = 0;
    std::vector<QVec> vertices;
    std::vector<AffineForm> ineqs;
    std::vector<AffineForm> eqs;

    bool operator==(const Polytope& o) const {
        return ambient == o.ambient && vertices == o.vertices;
    }

    bool contains(const QVec& x) const {
        for (const AffineForm& e : eqs)
            if (e.eval(x) != 0) return false;
        for (const AffineForm& f : ineqs)
            if (f.eval(x) < 0) return false;
        return true;
    }
    bool contains(const IVec& x) const { return contains(to_qvec(x)); }
};

/** Convex hull of finitely many rational points (at least one). */
inline Polytope convex_hull(int ambient, const std::vector<QVec>& pts) {
    if (pts.empty()) throw MathError("convex_hull: no points");
    std::vector<IVec> gens;
    for (const QVec& p : pts) {
        if (int(p.size()) != ambient) throw MathError("convex_hull: bad point length");
        Int d = 1;
        for (const Rat& c : p) d = lcm(d, denominator(c));
        IVec g(ambient + 1);
        g[0] = d;
        for (int i = 0; i < ambient; ++i) g[i + 1] = numerator(Rat(d) * p[i]);
        gens.push_back(g);
    }
    Cone c = make_cone(ambient + 1, gens);
    Polytope P;
    P.ambient = ambient;
    P.dim = c.dim - 1;
    for (const IVec& r : c.rays) {
        if (r[0] <= 0) throw GuardError("convex_hull: homogenization ray at height <= 0");
        QVec v(ambient);
        for (int i = 0; i < ambient; ++i) v[i] = Rat(r[i + 1]) / Rat(r[0]);
        P.vertices.push_back(v);
    }
    std::sort(P.vertices.begin(), P.vertices.end(), lex_less);
    for (const IVec& f : c.facets) {
        AffineForm af;
        af.b = f[0];
        af.a.assign(f.begin() + 1, f.end());
        P.ineqs.push_back(af);
    }
    for (const IVec& e : c.equations) {
        AffineForm af;
        af.b = e[0];
        af.a.assign(e.begin() + 1, e.end());
        P.eqs.push_back(af);
    }
    return P;
}

inline Polytope convex_hull(int ambient, const std::vector<IVec>& pts) {
    std::vector<QVec> qs;
    for (const IVec& p : pts) qs.push_back(to_qvec(p));
    return convex_hull(ambient, qs);
}

/**
 * Solution set of the affine inequalities, which must be bounded.
 * Returns nullopt when it is empty; throws MathError when unbounded.
 */
inline std::optional<Polytope> polytope_from_halfspaces(int ambient,
                                                        const std::vector<AffineForm>& hs) {
    // directions along which every form is constant would make a nonempty
    // solution set unbounded: split them off first
    IMat A(int(hs.size()), ambient);
    for (size_t i = 0; i < hs.size(); ++i)
        for (int j = 0; j < ambient; ++j) A(int(i), j) = hs[i].a[j];
    std::vector<IVec> invariant_dirs = kernel_basis(A);
    if (!invariant_dirs.empty()) {
        QuotientMap q = quotient_by_sublattice(IMat::from_columns(invariant_dirs));
        std::vector<AffineForm> reduced;
        for (const AffineForm& h : hs)
            reduced.push_back({h.a * q.section, h.b});
        auto sub = polytope_from_halfspaces(q.proj.rows, reduced);
        if (!sub) return std::nullopt;
        throw MathError("polytope_from_halfspaces: unbounded solution set");
    }

    std::vector<IVec> rows;
    IVec top(ambient + 1, Int(0));
    top[0] = 1;
    rows.push_back(top);
    for (const AffineForm& h : hs) {
        IVec r(ambient + 1);
        r[0] = h.b;
        for (int j = 0; j < ambient; ++j) r[j + 1] = h.a[j];
        rows.push_back(r);
    }
    std::vector<IVec> rays = dual_rays(IMat::from_rows(rows));
    std::vector<QVec> verts;
    bool recession = false;
    for (const IVec& r : rays) {
        if (r[0] == 0) { recession = true; continue; }
        QVec v(ambient);
        for (int i = 0; i < ambient; ++i) v[i] = Rat(r[i + 1]) / Rat(r[0]);
        verts.push_back(v);
    }
    if (verts.empty()) return std::nullopt;
    if (recession) throw MathError("polytope_from_halfspaces: unbounded solution set");
    return convex_hull(ambient, verts);
}

/** All points of Z^ambient in P; relative-interior points only when asked. */
inline std::vector<IVec> lattice_points(const Polytope& P, bool rel_interior = false) {
    int n = P.ambient;
    IMat E(int(P.eqs.size()), n);
    IVec c(int(P.eqs.size()));
    for (size_t i = 0; i < P.eqs.size(); ++i) {
        for (int j = 0; j < n; ++j) E(int(i), j) = P.eqs[i].a[j];
        c[int(i)] = -P.eqs[i].b;
    }
    IVec p0(n, Int(0));
    if (!P.eqs.empty()) {
        auto sol = solve_integer(E, c);
        if (!sol) return {};  // affine hull meets no lattice point
        p0 = *sol;
    }
    std::vector<IVec> K = kernel_basis(E);
    int w = int(K.size());
    IMat Km = IMat::from_columns(K);

    // bounding box in the affine lattice coordinates
    std::vector<Int> lo(w), hi(w);
    bool first = true;
    for (const QVec& v : P.vertices) {
        QVec rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = v[i] - Rat(p0[i]);
        std::optional<QVec> t = QVec{};
        if (w > 0) {
            t = solve_rational(Km, rhs);
            if (!t) throw GuardError("lattice_points: vertex outside direction span");
        }
        for (int j = 0; j < w; ++j) {
            Int f = floor_rat((*t)[j]), g = ceil_rat((*t)[j]);
            if (first) { lo[j] = f; hi[j] = g; }
            else {
                if (f < lo[j]) lo[j] = f;
                if (g > hi[j]) hi[j] = g;
            }
        }
        first = false;
    }

    std::vector<IVec> out;
    IVec t(w);
    for (int j = 0; j < w; ++j) t[j] = lo[j];
    for (;;) {
        IVec x = p0;
        for (int j = 0; j < w; ++j)
            for (int i = 0; i < n; ++i) x[i] += Km(i, j) * t[j];
        bool ok = true;
        for (const AffineForm& f : P.ineqs) {
            Int v = f.eval(x);
            if (v < 0 || (rel_interior && v == 0)) { ok = false; break; }
        }
        if (ok) out.push_back(x);
        int j = 0;
        while (j < w && t[j] == hi[j]) { t[j] = lo[j]; ++j; }
        if (j == w) break;
        t[j] += 1;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline Int lattice_point_count(const Polytope& P, bool rel_interior = false) {
    return Int(lattice_points(P, rel_interior).size());
}

/** Face of P minimizing the linear form u. */
inline Polytope face_at(const Polytope& P, const IVec& u) {
    Rat best;
    bool first = true;
    for (const QVec& v : P.vertices) {
        Rat val = dot(u, v);
        if (first || val < best) { best = val; first = false; }
    }
    std::vector<QVec> argmin;
    for (const QVec& v : P.vertices)
        if (dot(u, v) == best) argmin.push_back(v);
    return convex_hull(P.ambient, argmin);
}

inline Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.ambient != Q.ambient) throw MathError("minkowski_sum: ambient mismatch");
    std::vector<QVec> sums;
    for (const QVec& p : P.vertices)
        for (const QVec& q : Q.vertices) sums.push_back(p + q);
    return convex_hull(P.ambient, sums);
}

inline Polytope translate(const Polytope& P, const QVec& v) {
    std::vector<QVec> pts;
    for (const QVec& p : P.vertices) pts.push_back(p + v);
    return convex_hull(P.ambient, pts);
}

inline Polytope dilate(const Polytope& P, const Rat& k) {
    if (k < 0) throw MathError("dilate: negative factor");
    if (k == 0) return convex_hull(P.ambient, std::vector<QVec>{QVec(P.ambient, Rat(0))});
    std::vector<QVec> pts;
    for (const QVec& p : P.vertices) pts.push_back(k * p);
    return convex_hull(P.ambient, pts);
}

/** Face of a polytope, recorded by indices into the parent vertex list. */
struct PolytopeFace {
    std::vector<int> vertex_ids;  // sorted
    int dim = 0;
    IVec support;  // integer form whose argmin over the parent is exactly this face
};

inline Polytope face_polytope(const Polytope& P, const PolytopeFace& F) {
    std::vector<QVec> pts;
    for (int i : F.vertex_ids) pts.push_back(P.vertices[i]);
    return convex_hull(P.ambient, pts);
}

/**
 * Face lattice, the improper face included, the empty face excluded.
 * Every face is an intersection of facet vertex sets; closing the facet
 * sets under intersection therefore reaches all of them.
 */
inline std::vector<PolytopeFace> all_faces(const Polytope& P) {
    int nv = int(P.vertices.size());
    std::vector<std::vector<int>> tight;  // per inequality
    for (const AffineForm& h : P.ineqs) {
        std::vector<int> t;
        for (int i = 0; i < nv; ++i)
            if (h.eval(P.vertices[i]) == 0) t.push_back(i);
        tight.push_back(t);
    }
    std::vector<int> full(nv);
    for (int i = 0; i < nv; ++i) full[i] = i;
    std::set<std::vector<int>> seen{full};
    std::vector<std::vector<int>> work{full};
    while (!work.empty()) {
        std::vector<int> s = work.back();
        work.pop_back();
        for (const std::vector<int>& t : tight) {
            std::vector<int> meet;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(meet));
            if (!meet.empty() && seen.insert(meet).second) work.push_back(meet);
        }
    }
    std::vector<PolytopeFace> out;
    for (const std::vector<int>& s : seen) {
        PolytopeFace f;
        f.vertex_ids = s;
        std::vector<IVec> dirs;
        for (size_t k = 1; k < s.size(); ++k) {
            QVec d = P.vertices[s[k]] - P.vertices[s[0]];
            if (!is_zero(d)) dirs.push_back(primitive(d));
        }
        f.dim = rank_of_vectors(dirs);
        f.support = IVec(P.ambient, Int(0));
        for (size_t h = 0; h < P.ineqs.size(); ++h) {
            bool contains_all = std::includes(tight[h].begin(), tight[h].end(),
                                              s.begin(), s.end());
            if (contains_all) f.support = f.support + P.ineqs[h].a;
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    return out;
}

/** Is F a face of B? The improper face counts; the empty polytope cannot occur. */
inline bool is_face(const Polytope& B, const Polytope& F) {
    if (B.ambient != F.ambient) throw MathError("is_face: ambient mismatch");
    for (const QVec& v : F.vertices)
        if (!B.contains(v)) return false;
    std::vector<const AffineForm*> tight;
    for (const AffineForm& h : B.ineqs) {
        bool all_zero = true;
        for (const QVec& v : F.vertices)
            if (h.eval(v) != 0) { all_zero = false; break; }
        if (all_zero) tight.push_back(&h);
    }
    std::vector<QVec> candidate;
    for (const QVec& v : B.vertices) {
        bool on_all = true;
        for (const AffineForm* h : tight)
            if (h->eval(v) != 0) { on_all = false; break; }
        if (on_all) candidate.push_back(v);
    }
    return convex_hull(B.ambient, candidate) == F;
}

/** Minkowski sum of a list, keeping the summands for face decomposition. */
struct MinkowskiSum {
    Polytope sum;
    std::vector<Polytope> summands;
};

inline MinkowskiSum minkowski_sum(const std::vector<Polytope>& parts) {
    if (parts.empty()) throw MathError("minkowski_sum: empty summand list");
    Polytope acc = parts[0];
    for (size_t j = 1; j < parts.size(); ++j) acc = minkowski_sum(acc, parts[j]);
    return {acc, parts};
}

/**
 * The unique tuple of summand faces adding up to the given face of the sum.
 * Any form minimized exactly on the face selects the same tuple.
 */
inline std::vector<Polytope> face_decomposition(const MinkowskiSum& ms, const Polytope& face) {
    if (!is_face(ms.sum, face)) throw MathError("face_decomposition: not a face of the sum");
    IVec u(ms.sum.ambient, Int(0));
    for (const AffineForm& h : ms.sum.ineqs) {
        bool tight = true;
        for (const QVec& v : face.vertices)
            if (h.eval(v) != 0) { tight = false; break; }
        if (tight) u = u + h.a;
    }
    std::vector<Polytope> out;
    for (const Polytope& p : ms.summands) out.push_back(face_at(p, u));
    Polytope re = out[0];
    for (size_t j = 1; j < out.size(); ++j) re = minkowski_sum(re, out[j]);
    if (!(re == face)) throw GuardError("face_decomposition: tuple does not reassemble the face");
    return out;
}

}  // namespace tci

#endif
