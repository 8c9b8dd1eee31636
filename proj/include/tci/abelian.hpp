#ifndef TCI_ABELIAN_HPP
#define TCI_ABELIAN_HPP

#include <functional>
#include <map>
#include <sstream>

#include "tci/smith.hpp"

namespace tci {

/**
 * Finitely generated abelian group in invariant factor form,
 * Z^free_rank x Z/t_1 x ... x Z/t_q with t_1 | t_2 | ..., all t_k >= 2.
 */
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    AbelianGroup() = default;
    AbelianGroup(int fr, std::vector<Int> t) : free_rank(fr), torsion(std::move(t)) {
        for (size_t k = 0; k < torsion.size(); ++k) {
            if (torsion[k] < 2) throw MathError("AbelianGroup: invariant factors must be >= 2");
            if (k > 0 && torsion[k] % torsion[k - 1] != 0)
                throw MathError("AbelianGroup: invariant factors must form a divisibility chain");
        }
    }

    int torsion_rank() const { return int(torsion.size()); }
    bool is_free() const { return torsion.empty(); }
    Int torsion_order() const {
        Int p = 1;
        for (const Int& t : torsion) p *= t;
        return p;
    }
    bool operator==(const AbelianGroup& o) const = default;

    std::string str() const {
        std::ostringstream os;
        if (free_rank == 0 && torsion.empty()) return "0";
        bool first = true;
        if (free_rank == 1) { os << "Z"; first = false; }
        else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
        for (const Int& t : torsion) {
            if (!first) os << " x ";
            os << "Z/" << t.str();
            first = false;
        }
        return os.str();
    }
};

/** Element of an AbelianGroup: free coordinates plus reduced torsion residues. */
struct GroupElement {
    IVec free;  // length free_rank
    IVec tors;  // length torsion_rank, entries in [0, t_k)

    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const {
        if (int c = lex_cmp(free, o.free); c != 0) return c < 0;
        return lex_cmp(tors, o.tors) < 0;
    }
    bool is_zero() const { return tci::is_zero(free) && tci::is_zero(tors); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < free.size(); ++i) os << (i ? ", " : "") << free[i].str();
        for (size_t k = 0; k < tors.size(); ++k)
            os << (free.empty() && k == 0 ? "" : ", ") << tors[k].str() << "~";
        os << ")";
        return os.str();
    }
};

inline GroupElement make_element(const AbelianGroup& g, IVec free, IVec tors) {
    if (int(free.size()) != g.free_rank || int(tors.size()) != g.torsion_rank())
        throw MathError("make_element: coordinate count mismatch");
    for (int k = 0; k < g.torsion_rank(); ++k) tors[k] = imod(tors[k], g.torsion[k]);
    return GroupElement{std::move(free), std::move(tors)};
}

inline GroupElement zero_element(const AbelianGroup& g) {
    return GroupElement{IVec(g.free_rank, Int(0)), IVec(g.torsion_rank(), Int(0))};
}

inline GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    GroupElement r{a.free + b.free, a.tors + b.tors};
    for (int k = 0; k < g.torsion_rank(); ++k) r.tors[k] = imod(r.tors[k], g.torsion[k]);
    return r;
}

inline GroupElement negate(const AbelianGroup& g, const GroupElement& a) {
    GroupElement r{-a.free, -a.tors};
    for (int k = 0; k < g.torsion_rank(); ++k) r.tors[k] = imod(r.tors[k], g.torsion[k]);
    return r;
}

inline GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return add(g, a, negate(g, b));
}

inline GroupElement scale(const AbelianGroup& g, const Int& c, const GroupElement& a) {
    GroupElement r{c * a.free, c * a.tors};
    for (int k = 0; k < g.torsion_rank(); ++k) r.tors[k] = imod(r.tors[k], g.torsion[k]);
    return r;
}

/** Homomorphism Z^m -> G given by the images of the unit vectors. */
struct DegreeMap {
    AbelianGroup group;
    std::vector<GroupElement> images;

    int columns() const { return int(images.size()); }

    GroupElement operator()(const IVec& v) const {
        if (v.size() != images.size()) throw MathError("DegreeMap: arity mismatch");
        GroupElement r = zero_element(group);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) r = add(group, r, scale(group, v[i], images[i]));
        return r;
    }
};

/** Cokernel Z^rows / im(M) with the projection of the unit vectors. */
struct CokernelPresentation {
    AbelianGroup group;
    DegreeMap projection;  // e_i -> class of e_i, i < rows(M)
};

inline CokernelPresentation cokernel_presentation(const IMat& M) {
    SmithForm f = smith_normal_form(M);
    int n = M.rows;
    // y = U x; torsion coordinates are the y_k with d_k >= 2, free ones have k >= rank
    std::vector<int> tors_rows;
    std::vector<Int> torsion;
    for (int k = 0; k < f.rank; ++k)
        if (f.S(k, k) >= 2) {
            tors_rows.push_back(k);
            torsion.push_back(f.S(k, k));
        }
    CokernelPresentation out;
    out.group = AbelianGroup(n - f.rank, torsion);
    out.projection.group = out.group;
    for (int i = 0; i < n; ++i) {
        IVec y = f.U.col(i);
        IVec fr(y.begin() + f.rank, y.end());
        IVec tv;
        tv.reserve(tors_rows.size());
        for (size_t k = 0; k < tors_rows.size(); ++k)
            tv.push_back(imod(y[tors_rows[k]], torsion[k]));
        out.projection.images.push_back(GroupElement{std::move(fr), std::move(tv)});
    }
    return out;
}

/**
 * Largest q >= 1 with g = q*h solvable for some h in G.
 * Pre: g has a nonzero free part (otherwise no largest q exists).
 */
inline Int divisibility_order(const AbelianGroup& g, const GroupElement& e) {
    if (e.is_zero()) throw MathError("divisibility_order: zero element");
    Int d = gcd_all(e.free);
    if (d == 0)
        throw MathError("divisibility_order: element is pure torsion, order unbounded");
    std::vector<Int> divs = divisors(d);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const Int& q = *it;
        bool ok = true;
        for (int k = 0; k < g.torsion_rank() && ok; ++k)
            if (e.tors[k] % gcd(q, g.torsion[k]) != 0) ok = false;
        if (ok) return q;
    }
    return 1;  // unreachable, q = 1 always solves
}

// Integral lift of an element: free coords followed by torsion residues.
inline IVec lift(const GroupElement& e) {
    IVec v = e.free;
    v.insert(v.end(), e.tors.begin(), e.tors.end());
    return v;
}

/** True when the given elements generate G. */
inline bool generates(const AbelianGroup& g, const std::vector<GroupElement>& elems) {
    int rows = g.free_rank + g.torsion_rank();
    IMat m(rows, int(elems.size()) + g.torsion_rank());
    for (size_t j = 0; j < elems.size(); ++j) {
        IVec v = lift(elems[j]);
        for (int i = 0; i < rows; ++i) m(i, int(j)) = v[i];
    }
    for (int k = 0; k < g.torsion_rank(); ++k)
        m(g.free_rank + k, int(elems.size()) + k) = g.torsion[k];
    SmithForm f = smith_normal_form(m);
    if (f.rank != rows) return false;
    for (const Int& d : f.invariants)
        if (d != 1) return false;
    return true;
}

/**
 * All automorphisms of the torsion part T = Z/t_1 x ... x Z/t_q, as q x q
 * matrices A with A(l,k) in [0, t_l): e_k maps to the k-th column.
 * Well-definedness requires t_l/t_k | A(l,k) whenever t_k < t_l.
 * Exponential in |T|; intended for the small groups of the classification.
 */
inline std::vector<IMat> torsion_automorphisms(const AbelianGroup& g) {
    int q = g.torsion_rank();
    std::vector<IMat> out;
    if (q == 0) {
        out.push_back(IMat::identity(0));
        return out;
    }
    // enumerate valid columns per generator index
    std::vector<std::vector<IVec>> col_choices(q);
    for (int k = 0; k < q; ++k) {
        std::vector<IVec> cols;
        IVec cur(q, Int(0));
        std::function<void(int)> rec = [&](int l) {
            if (l == q) { cols.push_back(cur); return; }
            Int step = (g.torsion[l] % g.torsion[k] == 0 && g.torsion[l] > g.torsion[k])
                           ? g.torsion[l] / g.torsion[k]
                           : Int(1);
            // t_l <= t_k (divisibility chain) gives step 1, else multiples of t_l/t_k
            for (Int v = 0; v < g.torsion[l]; v += step) {
                cur[l] = v;
                rec(l + 1);
            }
            cur[l] = 0;
        };
        rec(0);
        col_choices[k] = std::move(cols);
    }
    AbelianGroup tonly(0, g.torsion);
    std::vector<IVec> pick(q);
    std::function<void(int)> rec = [&](int k) {
        if (k == q) {
            std::vector<GroupElement> cols;
            for (int j = 0; j < q; ++j) cols.push_back(GroupElement{IVec{}, pick[j]});
            if (!generates(tonly, cols)) return;
            IMat a(q, q);
            for (int j = 0; j < q; ++j)
                for (int l = 0; l < q; ++l) a(l, j) = pick[j][l];
            out.push_back(a);
            return;
        }
        for (const IVec& c : col_choices[k]) {
            pick[k] = c;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

// All residue tuples of the torsion part, lexicographically ordered.
inline std::vector<IVec> all_torsion_elements(const AbelianGroup& g) {
    std::vector<IVec> out;
    IVec cur(g.torsion_rank(), Int(0));
    std::function<void(int)> rec = [&](int k) {
        if (k == g.torsion_rank()) { out.push_back(cur); return; }
        for (Int v = 0; v < g.torsion[k]; ++v) {
            cur[k] = v;
            rec(k + 1);
        }
        cur[k] = 0;
    };
    rec(0);
    return out;
}

// Apply a torsion automorphism matrix to residues.
inline IVec apply_torsion_matrix(const AbelianGroup& g, const IMat& a, const IVec& tors) {
    int q = g.torsion_rank();
    IVec r(q, Int(0));
    for (int l = 0; l < q; ++l) {
        for (int k = 0; k < q; ++k) r[l] += a(l, k) * tors[k];
        r[l] = imod(r[l], g.torsion[l]);
    }
    return r;
}

}  // namespace tci

#endif
