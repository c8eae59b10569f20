#include "covhom/exactmat.hpp"

#include <sstream>
#include <stdexcept>

namespace covhom {

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZVec ZMat::row(std::size_t r) const {
    return ZVec(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

void ZMat::set_row(std::size_t r, const ZVec& v) {
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = v[j];
}

ZMat ZMat::transpose() const {
    ZMat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ZMat::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

std::string ZMat::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols; ++j) os << (*this)(i, j) << (j + 1 < cols ? " " : "");
        os << (i + 1 < rows ? ";\n" : "]");
    }
    return os.str();
}

ZMat operator*(const ZMat& x, const ZMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("ZMat mul: shape mismatch");
    ZMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

ZMat operator+(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("ZMat add: shape mismatch");
    ZMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

ZMat operator-(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("ZMat sub: shape mismatch");
    ZMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

ZVec mat_vec(const ZMat& m, const ZVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    ZVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) r[i] += m(i, j) * v[j];
    return r;
}

ZVec vec_mat(const ZVec& v, const ZMat& m) {
    if (m.rows != v.size()) throw std::invalid_argument("vec_mat: shape mismatch");
    ZVec r(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) r[j] += v[i] * m(i, j);
    }
    return r;
}

Int dot(const ZVec& x, const ZVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

QMat::QMat(const ZMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVec QMat::row(std::size_t r) const {
    return QVec(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

void QMat::set_row(std::size_t r, const QVec& v) {
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = v[j];
}

QMat QMat::transpose() const {
    QMat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool QMat::is_zero() const {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("QMat mul: shape mismatch");
    QMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    m.a.resize(r * m.cols);
    m.rows = r;
    return pivots;
}

QMat kernel(const QMat& m) {
    QMat e = m;
    std::vector<std::size_t> piv = rref(e);
    std::vector<bool> is_piv(m.cols, false);
    for (std::size_t c : piv) is_piv[c] = true;

    QMat k(m.cols - piv.size(), m.cols);
    std::size_t kr = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        k(kr, c) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) k(kr, piv[i]) = -e(i, c);
        ++kr;
    }
    rref(k);  // canonicalize
    return k;
}

Int det(ZMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Bareiss
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(QMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows;
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            d = -d;
        }
        d *= m(k, k);
        Rat inv = 1 / m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

namespace {

// Floor division (gmp truncates toward zero).
Int fdiv(const Int& x, const Int& y) {
    Int q = x / y, r = x - q * y;
    if (r != 0 && ((r < 0) != (y < 0))) --q;
    return q;
}

}  // namespace

ZMat hnf(ZMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        // Euclidean loop: shrink column c below row r to a single entry.
        for (;;) {
            std::size_t p = m.rows;
            for (std::size_t i = r; i < m.rows; ++i) {
                if (m(i, c) == 0) continue;
                if (p == m.rows || abs(m(i, c)) < abs(m(p, c))) p = i;
            }
            if (p == m.rows) break;  // column clear
            if (p != r)
                for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
            if (m(r, c) < 0)
                for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
            bool clear = true;
            for (std::size_t i = r + 1; i < m.rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q = fdiv(m(i, c), m(r, c));
                for (std::size_t j = 0; j < m.cols; ++j) m(i, j) -= q * m(r, j);
                if (m(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (m(r, c) == 0) continue;
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(m(i, c), m(r, c));
            if (q == 0) continue;
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    m.a.resize(r * m.cols);
    m.rows = r;
    return m;
}

namespace {

struct ColOps {
    ZMat col, colInv;
    explicit ColOps(std::size_t n) : col(ZMat::identity(n)), colInv(ZMat::identity(n)) {}
    void swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < col.rows; ++r) std::swap(col(r, i), col(r, j));
        for (std::size_t c = 0; c < colInv.cols; ++c) std::swap(colInv(i, c), colInv(j, c));
    }
    void negate(std::size_t i) {
        for (std::size_t r = 0; r < col.rows; ++r) col(r, i) = -col(r, i);
        for (std::size_t c = 0; c < colInv.cols; ++c) colInv(i, c) = -colInv(i, c);
    }
    // col_j += q * col_i   (and the matching inverse row op)
    void addmul(std::size_t j, const Int& q, std::size_t i) {
        for (std::size_t r = 0; r < col.rows; ++r) col(r, j) += q * col(r, i);
        for (std::size_t c = 0; c < colInv.cols; ++c) colInv(i, c) -= q * colInv(j, c);
    }
};

}  // namespace

SmithResult smith(ZMat b) {
    const std::size_t R = b.rows, C = b.cols;
    ColOps ops(C);
    std::size_t t = 0;
    const std::size_t tmax = std::min(R, C);
    while (t < tmax) {
        // smallest nonzero entry in the remaining block, row-order tiebreak
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (b(i, j) == 0) continue;
                if (pi == R || abs(b(i, j)) < abs(b(pi, pj))) { pi = i; pj = j; }
            }
        if (pi == R) break;  // all zero
        if (pi != t)
            for (std::size_t j = 0; j < C; ++j) std::swap(b(t, j), b(pi, j));
        if (pj != t) {
            for (std::size_t i = 0; i < R; ++i) std::swap(b(i, t), b(i, pj));
            ops.swap(t, pj);
        }
        if (b(t, t) < 0) {
            for (std::size_t i = 0; i < R; ++i) b(i, t) = -b(i, t);
            ops.negate(t);
        }
        bool again = false;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (b(i, t) == 0) continue;
            Int q = b(i, t) / b(t, t);
            for (std::size_t j = 0; j < C; ++j) b(i, j) -= q * b(t, j);
            if (b(i, t) != 0) again = true;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (b(t, j) == 0) continue;
            Int q = b(t, j) / b(t, t);
            for (std::size_t i = 0; i < R; ++i) b(i, j) -= q * b(i, t);
            ops.addmul(j, -q, t);
            if (b(t, j) != 0) again = true;
        }
        if (again) continue;  // remainders left, re-pick pivot
        // enforce pivot | submatrix, the classic row-merge trick
        bool fixed = false;
        for (std::size_t i = t + 1; i < R && !fixed; ++i)
            for (std::size_t j = t + 1; j < C && !fixed; ++j)
                if (b(i, j) % b(t, t) != 0) {
                    for (std::size_t jj = 0; jj < C; ++jj) b(t, jj) += b(i, jj);
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    SmithResult res;
    res.rank = t;
    res.diag.resize(tmax);
    for (std::size_t i = 0; i < t; ++i) res.diag[i] = b(i, i);
    res.col = std::move(ops.col);
    res.colInv = std::move(ops.colInv);
    return res;
}

std::vector<Int> solve_left_Z(const ZMat& basis, const ZVec& v, bool& ok) {
    // Solve x * basis = v by echelonizing [basis; v]-style bookkeeping:
    // run the HNF reduction of `basis` while carrying the transform, then
    // back-substitute v against the HNF rows.
    const std::size_t n = basis.rows;
    ZMat h(basis.rows, basis.cols + n);
    for (std::size_t i = 0; i < basis.rows; ++i) {
        for (std::size_t j = 0; j < basis.cols; ++j) h(i, j) = basis(i, j);
        h(i, basis.cols + i) = 1;
    }
    // HNF on the first `cols` columns only; transform rides along.
    std::size_t r = 0;
    for (std::size_t c = 0; c < basis.cols && r < h.rows; ++c) {
        for (;;) {
            std::size_t p = h.rows;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (h(i, c) == 0) continue;
                if (p == h.rows || abs(h(i, c)) < abs(h(p, c))) p = i;
            }
            if (p == h.rows) break;
            if (p != r)
                for (std::size_t j = 0; j < h.cols; ++j) std::swap(h(r, j), h(p, j));
            if (h(r, c) < 0)
                for (std::size_t j = 0; j < h.cols; ++j) h(r, j) = -h(r, j);
            bool clear = true;
            for (std::size_t i = r + 1; i < h.rows; ++i) {
                if (h(i, c) == 0) continue;
                Int q = fdiv(h(i, c), h(r, c));
                for (std::size_t j = 0; j < h.cols; ++j) h(i, j) -= q * h(r, j);
                if (h(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (h(r, c) != 0) ++r;
    }
    ZVec w = v;
    ZVec coeff(n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < basis.cols && row < r; ++c) {
        if (h(row, c) == 0) continue;  // not a pivot column of this row
        // find the row whose pivot is at column c
        if (w[c] != 0) {
            if (w[c] % h(row, c) != 0) { ok = false; return {}; }
            Int q = w[c] / h(row, c);
            for (std::size_t j = 0; j < basis.cols; ++j) w[j] -= q * h(row, j);
            for (std::size_t j = 0; j < n; ++j) coeff[j] += q * h(row, basis.cols + j);
        }
        ++row;
    }
    for (const Int& x : w)
        if (x != 0) { ok = false; return {}; }
    ok = true;
    return coeff;
}

}  // namespace covhom
