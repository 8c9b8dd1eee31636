#ifndef TCI_FAN_HPP
#define TCI_FAN_HPP

#include <map>

#include "tci/abelian.hpp"
#include "tci/polytope.hpp"

namespace tci {

/**
 * Fan given by its rays (primitive, fixed input order) and maximal cones as
 * sorted ray index sets. Rays not used by any maximal cone are permitted so
 * that subfans can share the ambient indexing.
 */
struct Fan {
    int ambient = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> max_cones;
    std::vector<Cone> cones;  // parallel to max_cones

    IMat ray_matrix() const { return IMat::from_columns(rays); }
};

/** Build and validate: extreme listed generators, pairwise face intersections. */
inline Fan make_fan(int ambient, const std::vector<IVec>& rays,
                    const std::vector<std::vector<int>>& max_cones) {
    Fan f;
    f.ambient = ambient;
    for (const IVec& r : rays) {
        if (int(r.size()) != ambient || is_zero(r))
            throw MathError("make_fan: rays must be nonzero ambient vectors");
        if (r != primitive(r)) throw MathError("make_fan: rays must be primitive");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) throw MathError("make_fan: duplicate ray");
    f.rays = rays;
    for (std::vector<int> idx : max_cones) {
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        std::vector<IVec> gens;
        for (int i : idx) {
            if (i < 0 || i >= int(rays.size())) throw MathError("make_fan: ray index out of range");
            gens.push_back(rays[i]);
        }
        Cone c = make_cone(ambient, gens);
        if (int(c.rays.size()) != int(gens.size()))
            throw MathError("make_fan: cone generators must be extreme");
        f.max_cones.push_back(idx);
        f.cones.push_back(c);
    }
    for (size_t i = 0; i < f.cones.size(); ++i)
        for (size_t j = i + 1; j < f.cones.size(); ++j) {
            Cone meet = intersect(f.cones[i], f.cones[j]);
            if (meet == f.cones[i] || meet == f.cones[j])
                throw MathError("make_fan: maximal cone contained in another");
            if (!is_face_of(meet, f.cones[i]) || !is_face_of(meet, f.cones[j]))
                throw MathError("make_fan: cones do not meet in a common face");
        }
    return f;
}

/** Every cone of the fan, faces included, deduplicated and sorted. */
inline std::vector<Cone> all_cones(const Fan& f) {
    std::set<Cone> out;
    for (const Cone& c : f.cones)
        for (const Cone& face : faces(c)) out.insert(face);
    if (f.cones.empty()) out.insert(make_cone(f.ambient, {}));
    return std::vector<Cone>(out.begin(), out.end());
}

/** Complete = supports all of the ambient space. */
inline bool is_complete(const Fan& f) {
    if (f.ambient == 0) return true;
    if (f.cones.empty()) return false;
    std::map<Cone, int> ridge_count;
    for (const Cone& c : f.cones) {
        if (c.dim != f.ambient) return false;
        for (const Cone& face : faces(c))
            if (face.dim == f.ambient - 1) ++ridge_count[face];
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

/**
 * Dimension of the common vanishing locus of the monomials
 * prod_{i notin sigma} z_i inside the full coordinate space.
 */
inline int irrelevant_locus_dimension(const Fan& f) {
    int R = int(f.rays.size());
    // smallest index set contained in no maximal cone
    for (int k = 1; k <= R; ++k) {
        std::vector<int> pick;
        std::function<bool(int)> rec = [&](int from) -> bool {
            if (int(pick.size()) == k) {
                for (const auto& mc : f.max_cones) {
                    bool inside = true;
                    for (int i : pick)
                        if (!std::binary_search(mc.begin(), mc.end(), i)) { inside = false; break; }
                    if (inside) return false;
                }
                return true;
            }
            for (int i = from; i < R; ++i) {
                pick.push_back(i);
                if (rec(i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(0)) return R - k;
    }
    return -1;  // every index set lies in a cone: the locus is empty
}

/** Divisor class group with the classes of the coordinate divisors. */
struct CoxData {
    AbelianGroup cl;
    std::vector<GroupElement> weights;   // one per ray
    CokernelPresentation pres;           // projection from the ray index lattice
};

inline CoxData cox_data(const std::vector<IVec>& rays) {
    if (rays.empty()) throw MathError("cox_data: no rays");
    IMat P = IMat::from_columns(rays);
    if (rank(P) != P.rows)
        throw MathError("cox_data: rays do not span the ambient space");
    CokernelPresentation pres = cokernel_presentation(P.transposed());
    CoxData d{pres.group, {}, pres};
    int R = int(rays.size());
    for (int i = 0; i < R; ++i) {
        IVec e(R, Int(0));
        e[i] = 1;
        d.weights.push_back(pres.projection(e));
    }
    return d;
}

inline CoxData cox_data(const Fan& f) { return cox_data(f.rays); }

/**
 * Polytope of sections for coefficients a: all u with <u, ray_i> >= -a_i.
 * Nullopt when empty.
 */
inline std::optional<Polytope> divisorial_polytope(const std::vector<IVec>& rays,
                                                   const IVec& a) {
    if (rays.size() != a.size()) throw MathError("divisorial_polytope: size mismatch");
    if (rays.empty()) throw MathError("divisorial_polytope: no rays");
    int n = int(rays[0].size());
    std::vector<AffineForm> hs;
    for (size_t i = 0; i < rays.size(); ++i) hs.push_back({rays[i], a[i]});
    return polytope_from_halfspaces(n, hs);
}

/** One cone of a quasifan: halfspaces plus spanning generators. */
struct QuasiCone {
    std::vector<IVec> hrep;   // the cone is the set where every row is >= 0
    std::vector<IVec> gens;   // rays of a pointed complement plus +-lineality
    int dim = 0;

    bool contains(const IVec& x) const {
        for (const IVec& h : hrep)
            if (dot(h, x) < 0) return false;
        return true;
    }
};

/**
 * Quasifan: cones sharing a common lineality space. Cones are face-closed;
 * maximal lists the indices of the maximal ones. covering = the support is
 * the whole space.
 */
struct Quasifan {
    int ambient = 0;
    std::vector<IVec> lineality;   // basis, empty for a fan
    std::vector<QuasiCone> cones;
    std::vector<int> maximal;
    bool covering = false;
};

/**
 * Cone of forms attaining their minimum over B exactly on the given face.
 * Its lineality is the space of forms constant on B, for every face.
 */
inline QuasiCone normal_cone(const Polytope& B, const PolytopeFace& F) {
    int n = B.ambient;
    std::set<IVec, LexLess> rows;
    for (int vi : F.vertex_ids)
        for (const QVec& w : B.vertices) {
            QVec d = w - B.vertices[vi];
            if (!is_zero(d)) rows.insert(primitive(d));
        }
    QuasiCone c;
    c.hrep.assign(rows.begin(), rows.end());
    IMat D = c.hrep.empty() ? IMat(0, n) : IMat::from_rows(c.hrep);
    std::vector<IVec> lin = kernel_basis(D);
    if (lin.empty()) {
        c.gens = dual_rays(D);
    } else {
        QuotientMap qm = quotient_by_sublattice(IMat::from_columns(lin));
        int m = qm.proj.rows;
        if (m > 0) {
            std::vector<IVec> qrows;
            for (const IVec& r : c.hrep) qrows.push_back(r * qm.section);
            for (const IVec& rq : dual_rays(IMat::from_rows(qrows)))
                c.gens.push_back(qm.section * rq);
        }
        for (const IVec& l : lin) {
            c.gens.push_back(l);
            c.gens.push_back(-l);
        }
    }
    c.dim = rank_of_vectors(c.gens);
    return c;
}

/** Normal quasifan: one cone per face, u |-> argmin <u, .> convention. */
inline Quasifan normal_quasifan(const Polytope& B) {
    Quasifan q;
    q.ambient = B.ambient;
    q.covering = true;
    std::vector<IVec> dirs;
    for (const QVec& v : B.vertices) {
        QVec d = v - B.vertices[0];
        if (!is_zero(d)) dirs.push_back(primitive(d));
    }
    IMat D = dirs.empty() ? IMat(0, B.ambient) : IMat::from_rows(dirs);
    q.lineality = kernel_basis(D);
    for (const PolytopeFace& F : all_faces(B)) {
        if (F.dim == 0) q.maximal.push_back(int(q.cones.size()));
        q.cones.push_back(normal_cone(B, F));
    }
    return q;
}

/** The fan's cones as a quasifan with trivial lineality. */
inline Quasifan as_quasifan(const Fan& f) {
    Quasifan q;
    q.ambient = f.ambient;
    q.covering = is_complete(f);
    std::vector<Cone> cs = all_cones(f);
    std::set<Cone> maxset(f.cones.begin(), f.cones.end());
    for (const Cone& c : cs) {
        QuasiCone qc;
        qc.gens = c.rays;
        qc.dim = c.dim;
        qc.hrep = c.facets;
        for (const IVec& e : c.equations) {
            qc.hrep.push_back(e);
            qc.hrep.push_back(-e);
        }
        if (maxset.count(c)) q.maximal.push_back(int(q.cones.size()));
        q.cones.push_back(qc);
    }
    return q;
}

/**
 * Does the first quasifan refine the second: every cone of the first inside
 * some cone of the second, with equal supports. Only covering coarse
 * quasifans are handled.
 */
inline bool refines(const Quasifan& fine, const Quasifan& coarse) {
    if (!coarse.covering) throw GuardError("refines: only covering quasifans supported");
    if (fine.ambient != coarse.ambient) throw MathError("refines: ambient mismatch");
    if (!fine.covering) return false;
    for (int k : fine.maximal) {
        const QuasiCone& c = fine.cones[k];
        bool found = false;
        for (int l : coarse.maximal) {
            bool inside = true;
            for (const IVec& g : c.gens)
                if (!coarse.cones[l].contains(g)) { inside = false; break; }
            if (inside) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

/** Does the fan refine the quasifan. Only covering quasifans are handled. */
inline bool refines(const Fan& f, const Quasifan& q) {
    if (!q.covering) throw GuardError("refines: only covering quasifans supported");
    if (f.ambient != q.ambient) throw MathError("refines: ambient mismatch");
    if (!is_complete(f)) return false;
    for (const Cone& c : f.cones) {
        bool found = false;
        for (int l : q.maximal) {
            bool inside = true;
            for (const IVec& r : c.rays)
                if (!q.cones[l].contains(r)) { inside = false; break; }
            if (inside) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

/** Completeness and simpliciality in one report. */
struct FanReport {
    bool complete = false;
    bool simplicial = false;
};

inline FanReport validate_fan(const Fan& f) {
    FanReport r;
    r.complete = is_complete(f);
    r.simplicial = true;
    for (const Cone& c : f.cones)
        if (!c.is_simplicial()) { r.simplicial = false; break; }
    return r;
}

}  // namespace tci

#endif
