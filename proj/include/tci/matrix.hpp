#ifndef TCI_MATRIX_HPP
#define TCI_MATRIX_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tci/arith.hpp"

namespace tci {

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}
inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline IVec operator*(const Int& c, const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}
inline IVec operator-(const IVec& v) { return Int(-1) * v; }

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline QVec operator*(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}
inline Rat dot(const IVec& a, const QVec& b) { return dot(b, a); }

inline QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// True when every coordinate is integral.
inline bool is_integral(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return denominator(x) == 1; });
}
inline IVec to_ivec(const QVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw MathError("to_ivec: non-integral coordinate");
        r[i] = numerator(v[i]);
    }
    return r;
}

// Divide by the gcd of the entries, keeping signs. Pre: v != 0.
inline IVec primitive(const IVec& v) {
    Int g = gcd_all(v);
    if (g == 0) throw MathError("primitive: zero vector");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Clear denominators and make primitive; sign pattern preserved. Pre: v != 0.
inline IVec primitive(const QVec& v) {
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, denominator(x));
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (den / denominator(v[i]));
    return primitive(w);
}

inline int lex_cmp(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}
inline int lex_cmp(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return int(a.size()) - int(b.size());
}

struct LexLess {
    bool operator()(const IVec& a, const IVec& b) const { return lex_cmp(a, b) < 0; }
    bool operator()(const QVec& a, const QVec& b) const { return lex_cmp(a, b) < 0; }
};
inline constexpr LexLess lex_less{};

/** Dense integer matrix, row major. Small sizes throughout (dims <= ~10). */
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
    IMat(std::initializer_list<std::initializer_list<Int>> rs) {
        rows = int(rs.size());
        cols = rows ? int(rs.begin()->size()) : 0;
        for (auto& r : rs) {
            if (int(r.size()) != cols) throw MathError("IMat: ragged initializer");
            for (auto& x : r) a.push_back(x);
        }
    }

    Int& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IMat from_columns(const std::vector<IVec>& cs) {
        if (cs.empty()) return IMat(0, 0);
        IMat m(int(cs[0].size()), int(cs.size()));
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < m.rows; ++i) m(i, j) = cs[j][i];
        return m;
    }
    static IMat from_rows(const std::vector<IVec>& rs) {
        if (rs.empty()) return IMat(0, 0);
        IMat m(int(rs.size()), int(rs[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }

    IVec row(int i) const {
        IVec r(cols);
        for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }
    IVec col(int j) const {
        IVec c(rows);
        for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<IVec> columns() const {
        std::vector<IVec> cs(cols);
        for (int j = 0; j < cols; ++j) cs[j] = col(j);
        return cs;
    }

    IMat transposed() const {
        IMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline IMat operator*(const IMat& A, const IMat& B) {
    if (A.cols != B.rows) throw MathError("matmul: shape mismatch");
    IMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& x = A(i, k);
            if (x == 0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += x * B(k, j);
        }
    return C;
}

inline IVec operator*(const IMat& A, const IVec& v) {
    if (int(v.size()) != A.cols) throw MathError("matvec: shape mismatch");
    IVec r(A.rows, Int(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r[i] += A(i, j) * v[j];
    return r;
}

// Row vector times matrix.
inline IVec operator*(const IVec& v, const IMat& A) {
    if (int(v.size()) != A.rows) throw MathError("vecmat: shape mismatch");
    IVec r(A.cols, Int(0));
    for (int j = 0; j < A.cols; ++j)
        for (int i = 0; i < A.rows; ++i) r[j] += v[i] * A(i, j);
    return r;
}

inline QVec operator*(const IMat& A, const QVec& v) {
    if (int(v.size()) != A.cols) throw MathError("matvec: shape mismatch");
    QVec r(A.rows, Rat(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r[i] += Rat(A(i, j)) * v[j];
    return r;
}

/** Rational Gaussian elimination helpers (exact). */
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;
    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
    explicit QMat(const IMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
        for (size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
    }
    Rat& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
};

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (int j = 0; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(const IMat& m) {
    QMat q(m);
    return int(rref(q).size());
}

inline int rank_of_vectors(const std::vector<IVec>& vs) {
    if (vs.empty()) return 0;
    return rank(IMat::from_rows(vs));
}

// Solve A x = b over the rationals; nullopt when inconsistent.
// When the solution is not unique an arbitrary (deterministic) one is returned.
inline std::optional<QVec> solve_rational(const IMat& A, const QVec& b) {
    QMat m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m(i, j) = Rat(A(i, j));
        m(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref(m);
    for (int k = int(piv.size()) - 1; k >= 0; --k)
        if (piv[k] == A.cols) return std::nullopt;  // pivot in augmented column
    QVec x(A.cols, Rat(0));
    for (size_t k = 0; k < piv.size(); ++k) {
        // row k has leading 1 in column piv[k]; free variables set to 0
        int r = int(k);
        Rat val = m(r, A.cols);
        for (int j = piv[k] + 1; j < A.cols; ++j) val -= m(r, j) * x[j];
        x[piv[k]] = val;
    }
    // Forward substitution above already accounts for free vars (all zero).
    return x;
}

// Basis of { x : A x = 0 } over the rationals.
inline std::vector<QVec> nullspace_rational(const IMat& A) {
    QMat m(A);
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(A.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(A.cols, Rat(0));
        v[f] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(int(k), f);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace tci

#endif
