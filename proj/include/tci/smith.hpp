#ifndef TCI_SMITH_HPP
#define TCI_SMITH_HPP

#include <optional>

#include "tci/matrix.hpp"

namespace tci {

/**
 * Smith normal form U * M * V = S with U, V unimodular and S diagonal,
 * S(0,0) | S(1,1) | ... >= 0. Uinv is maintained alongside U so callers can
 * read off saturations and quotient coordinates without inverting.
 */
struct SmithForm {
    IMat U, Uinv, S, V;
    int rank = 0;
    std::vector<Int> invariants;  // the positive diagonal entries, length == rank
};

namespace detail {

struct SmithOps {
    IMat& S;
    IMat& U;
    IMat& Uinv;
    IMat& V;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < S.cols; ++c) std::swap(S(i, c), S(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < S.rows; ++r) std::swap(S(r, i), S(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
    }
    // row i += c * row j   (hence Uinv col j -= c * col i)
    void row_add(int i, int j, const Int& c) {
        if (c == 0) return;
        for (int k = 0; k < S.cols; ++k) S(i, k) += c * S(j, k);
        for (int k = 0; k < U.cols; ++k) U(i, k) += c * U(j, k);
        for (int r = 0; r < Uinv.rows; ++r) Uinv(r, j) -= c * Uinv(r, i);
    }
    // col i += c * col j
    void col_add(int i, int j, const Int& c) {
        if (c == 0) return;
        for (int r = 0; r < S.rows; ++r) S(r, i) += c * S(r, j);
        for (int r = 0; r < V.rows; ++r) V(r, i) += c * V(r, j);
    }
    void row_negate(int i) {
        for (int k = 0; k < S.cols; ++k) S(i, k) = -S(i, k);
        for (int k = 0; k < U.cols; ++k) U(i, k) = -U(i, k);
        for (int r = 0; r < Uinv.rows; ++r) Uinv(r, i) = -Uinv(r, i);
    }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IMat& M) {
    SmithForm f;
    f.S = M;
    f.U = IMat::identity(M.rows);
    f.Uinv = IMat::identity(M.rows);
    f.V = IMat::identity(M.cols);
    detail::SmithOps ops{f.S, f.U, f.Uinv, f.V};
    IMat& S = f.S;
    int n = std::min(M.rows, M.cols);

    for (int t = 0; t < n; ++t) {
        bool done = false;
        while (!done) {
            // pivot: smallest nonzero absolute value in the trailing block
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < S.rows; ++i)
                for (int j = t; j < S.cols; ++j) {
                    if (S(i, j) == 0) continue;
                    Int v = abs(S(i, j));
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) { t = n; break; }  // trailing block is zero, done overall
            ops.row_swap(t, pi);
            ops.col_swap(t, pj);

            // euclidean clearing of row t and column t
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < S.rows; ++i) {
                    if (S(i, t) == 0) continue;
                    Int q = fdiv(S(i, t), S(t, t));
                    ops.row_add(i, t, -q);
                    if (S(i, t) != 0) { ops.row_swap(t, i); clean = false; }
                }
                if (!clean) continue;
                for (int j = t + 1; j < S.cols; ++j) {
                    if (S(t, j) == 0) continue;
                    Int q = fdiv(S(t, j), S(t, t));
                    ops.col_add(j, t, -q);
                    if (S(t, j) != 0) { ops.col_swap(t, j); clean = false; }
                }
                if (clean) break;
            }
            if (S(t, t) < 0) ops.row_negate(t);

            // pivot must divide the whole trailing block, else absorb and redo;
            // the pivot strictly shrinks each time, so this terminates
            done = true;
            for (int i = t + 1; i < S.rows && done; ++i)
                for (int j = t + 1; j < S.cols && done; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        ops.row_add(t, i, 1);
                        done = false;
                    }
        }
        if (t >= n) break;
    }

    for (int t = 0; t < n; ++t)
        if (S(t, t) != 0) {
            f.invariants.push_back(S(t, t));
            ++f.rank;
        }
    return f;
}

// Basis of the integer kernel { x in Z^c : M x = 0 } (saturated by construction).
inline std::vector<IVec> kernel_basis(const IMat& M) {
    SmithForm f = smith_normal_form(M);
    std::vector<IVec> basis;
    for (int j = f.rank; j < M.cols; ++j) basis.push_back(f.V.col(j));
    return basis;
}

// One integer solution of M x = b, or nullopt. Free coordinates are set to 0.
inline std::optional<IVec> solve_integer(const IMat& M, const IVec& b) {
    SmithForm f = smith_normal_form(M);
    IVec c = f.U * b;
    IVec y(M.cols, Int(0));
    for (int k = 0; k < M.rows; ++k) {
        if (k < f.rank) {
            if (c[k] % f.S(k, k) != 0) return std::nullopt;
            y[k] = c[k] / f.S(k, k);
        } else if (c[k] != 0) {
            return std::nullopt;
        }
    }
    return f.V * y;
}

// Basis of the saturation (span_Q of the columns of M) intersected with Z^rows.
inline std::vector<IVec> saturation_basis(const IMat& M) {
    SmithForm f = smith_normal_form(M);
    std::vector<IVec> basis;
    for (int k = 0; k < f.rank; ++k) basis.push_back(f.Uinv.col(k));
    return basis;
}

/**
 * Unimodular projection onto the quotient by a saturated sublattice.
 * Rows of `proj` map Z^n onto Z^{n-l} with kernel exactly span(L) cap Z^n
 * (L is the matrix whose columns span the sublattice; it must be saturated,
 * which holds for kernels and saturations).
 * `section` is an integral right inverse: proj * section = identity.
 */
struct QuotientMap {
    IMat proj;     // (n-l) x n
    IMat section;  // n x (n-l)
    int ambient = 0, quotient = 0;
};

inline QuotientMap quotient_by_sublattice(const IMat& L) {
    SmithForm f = smith_normal_form(L);
    for (const Int& d : f.invariants)
        if (d != 1) throw MathError("quotient_by_sublattice: sublattice is not saturated");
    int n = L.rows, l = f.rank;
    QuotientMap q;
    q.ambient = n;
    q.quotient = n - l;
    q.proj = IMat(n - l, n);
    for (int i = 0; i < n - l; ++i)
        for (int j = 0; j < n; ++j) q.proj(i, j) = f.U(l + i, j);
    q.section = IMat(n, n - l);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - l; ++j) q.section(i, j) = f.Uinv(i, l + j);
    return q;
}

}  // namespace tci

#endif
