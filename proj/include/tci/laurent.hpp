#ifndef TCI_LAURENT_HPP
#define TCI_LAURENT_HPP

#include "tci/fan.hpp"

namespace tci {

/**
 * Laurent polynomial with exact rational or indeterminate ("generic")
 * coefficients. A missing optional marks a coefficient that is treated as a
 * generic nonzero scalar; explicit coefficients are nonzero. Inputs carry at
 * least one term; an empty term map can only arise as the zero result of a
 * restriction and is rejected by the constructors below.
 */
struct LaurentPolynomial {
    int vars = 0;
    std::map<IVec, std::optional<Rat>, LexLess> terms;

    bool is_zero() const { return terms.empty(); }
    bool all_generic() const {
        for (const auto& [e, c] : terms)
            if (c) return false;
        return true;
    }
    bool any_explicit() const { return !all_generic(); }

    std::vector<IVec> support() const {
        std::vector<IVec> s;
        for (const auto& [e, c] : terms) s.push_back(e);
        return s;
    }

    std::string str(const std::string& var = "T") const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (!first) os << " + ";
            first = false;
            if (c) os << "(" << to_string(*c) << ")";
            else os << "#";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << var << (i + 1);
                if (e[i] != 1) os << "^" << e[i].str();
            }
        }
        return os.str();
    }
};

inline LaurentPolynomial generic_poly(int vars, const std::vector<IVec>& support) {
    if (support.empty()) throw MathError("generic_poly: empty support");
    LaurentPolynomial f;
    f.vars = vars;
    for (const IVec& e : support) {
        if (int(e.size()) != vars) throw MathError("generic_poly: bad exponent length");
        f.terms[e] = std::nullopt;
    }
    return f;
}

inline LaurentPolynomial explicit_poly(int vars,
                                       const std::vector<std::pair<IVec, Rat>>& ts) {
    if (ts.empty()) throw MathError("explicit_poly: no terms");
    LaurentPolynomial f;
    f.vars = vars;
    for (const auto& [e, c] : ts) {
        if (int(e.size()) != vars) throw MathError("explicit_poly: bad exponent length");
        if (c == 0) throw MathError("explicit_poly: zero coefficient");
        if (f.terms.count(e)) throw MathError("explicit_poly: repeated exponent");
        f.terms[e] = c;
    }
    return f;
}

inline Polytope newton_polytope(const LaurentPolynomial& f) {
    if (f.terms.empty()) throw MathError("newton_polytope: zero polynomial");
    return convex_hull(f.vars, f.support());
}

/** Product; a term stays generic when any contribution to it is generic. */
inline LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.vars != g.vars) throw MathError("mul: variable count mismatch");
    LaurentPolynomial h;
    h.vars = f.vars;
    std::map<IVec, std::optional<Rat>, LexLess> acc;  // nullopt = generic contribution seen
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            IVec e = ef + eg;
            auto it = acc.find(e);
            if (!cf || !cg) {
                if (it == acc.end()) acc[e] = std::nullopt;
                else it->second = std::nullopt;
            } else {
                Rat add = *cf * *cg;
                if (it == acc.end()) acc[e] = add;
                else if (it->second) *it->second += add;
            }
        }
    for (auto& [e, c] : acc)
        if (!c || *c != 0) h.terms[e] = c;
    return h;
}

/** System of Laurent polynomials with its Newton polytopes and their sum. */
struct LaurentSystem {
    int vars = 0;
    std::vector<LaurentPolynomial> polys;
    std::vector<Polytope> newtons;
    MinkowskiSum total;
};

inline LaurentSystem make_system(std::vector<LaurentPolynomial> polys) {
    if (polys.empty()) throw MathError("make_system: empty system");
    LaurentSystem F;
    F.vars = polys[0].vars;
    for (const LaurentPolynomial& f : polys) {
        if (f.vars != F.vars) throw MathError("make_system: variable count mismatch");
        F.newtons.push_back(newton_polytope(f));
    }
    F.polys = std::move(polys);
    F.total = minkowski_sum(F.newtons);
    return F;
}

/** Is the fan complete and refining the normal quasifan of the Newton sum? */
inline bool is_adapted(const Fan& fan, const LaurentSystem& F) {
    if (fan.ambient != F.vars) throw MathError("is_adapted: ambient mismatch");
    return refines(fan, normal_quasifan(F.total.sum));
}

/**
 * System rewritten in the fan's ray coordinates: one polynomial per input,
 * all exponents nonnegative, each polynomial coprime to every variable,
 * together with the shift vectors and the divisor classes of the shifts.
 */
struct HomogenizedSystem {
    Fan fan;
    CoxData cox;
    std::vector<LaurentPolynomial> polys;
    std::vector<IVec> shifts;
    std::vector<GroupElement> degrees;

    int equations() const { return int(polys.size()); }
};

inline HomogenizedSystem homogenize(const LaurentSystem& F, const Fan& fan) {
    if (!is_adapted(fan, F))
        throw MathError(
            "homogenize: fan does not refine the normal fan of the Newton polytope sum");
    HomogenizedSystem H;
    H.fan = fan;
    H.cox = cox_data(fan);
    int r = int(fan.rays.size());
    for (const LaurentPolynomial& f : F.polys) {
        IVec a(r);
        for (int i = 0; i < r; ++i) {
            Int m;
            bool first = true;
            for (const auto& [e, c] : f.terms) {
                Int v = dot(e, fan.rays[i]);
                if (first || v < m) { m = v; first = false; }
            }
            a[i] = -m;
        }
        LaurentPolynomial g;
        g.vars = r;
        for (const auto& [e, c] : f.terms) {
            IVec E(r);
            for (int i = 0; i < r; ++i) E[i] = dot(e, fan.rays[i]) + a[i];
            g.terms[E] = c;
        }
        for (int i = 0; i < r; ++i) {
            bool hits_zero = false;
            for (const auto& [e, c] : g.terms)
                if (e[i] == 0) { hits_zero = true; break; }
            if (!hits_zero)
                throw GuardError("homogenize: polynomial shares a variable factor");
        }
        H.polys.push_back(std::move(g));
        H.degrees.push_back(H.cox.pres.projection(a));
        H.shifts.push_back(std::move(a));
    }
    return H;
}

/**
 * Set the variables of the listed rays to zero in every polynomial.
 * Zero polynomials (empty term maps) can occur in the result.
 */
inline std::vector<LaurentPolynomial> face_restriction(const HomogenizedSystem& H,
                                                       const std::vector<int>& rays) {
    for (int i : rays)
        if (i < 0 || i >= int(H.fan.rays.size()))
            throw MathError("face_restriction: ray index out of range");
    std::vector<LaurentPolynomial> out;
    for (const LaurentPolynomial& g : H.polys) {
        LaurentPolynomial h;
        h.vars = g.vars;
        for (const auto& [e, c] : g.terms) {
            bool keep = true;
            for (int i : rays)
                if (e[i] > 0) { keep = false; break; }
            if (keep) h.terms[e] = c;
        }
        out.push_back(std::move(h));
    }
    return out;
}

/** Terms of f with exponents on the given face of its Newton polytope. */
inline LaurentPolynomial face_polynomial(const LaurentPolynomial& f, const Polytope& face) {
    if (!is_face(newton_polytope(f), face))
        throw MathError("face_polynomial: not a face of the Newton polytope");
    LaurentPolynomial h;
    h.vars = f.vars;
    for (const auto& [e, c] : f.terms)
        if (face.contains(e)) h.terms[e] = c;
    return h;
}

}  // namespace tci

#endif
