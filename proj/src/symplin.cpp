#include "covhom/symplin.hpp"

#include <stdexcept>

namespace covhom {

RatSubspace RatSubspace::zero(std::size_t ambient) {
    RatSubspace s;
    s.ambient = ambient;
    s.basis = QMat(0, ambient);
    return s;
}

RatSubspace RatSubspace::full(std::size_t ambient) {
    RatSubspace s;
    s.ambient = ambient;
    s.basis = QMat::identity(ambient);
    return s;
}

bool RatSubspace::contains(const QVec& v) const {
    QVec r = v;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t p = 0;
        while (p < ambient && basis(i, p) == 0) ++p;
        if (p == ambient) continue;
        if (r[p] == 0) continue;
        Rat f = r[p];  // pivot entry is 1 in RREF
        for (std::size_t j = p; j < ambient; ++j) r[j] -= f * basis(i, j);
    }
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

bool RatSubspace::contains(const RatSubspace& other) const {
    for (std::size_t i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

IntLattice IntLattice::zero(std::size_t ambient) {
    IntLattice l;
    l.ambient = ambient;
    l.basis = ZMat(0, ambient);
    return l;
}

IntLattice IntLattice::standard(std::size_t ambient) {
    IntLattice l;
    l.ambient = ambient;
    l.basis = ZMat::identity(ambient);
    return l;
}

RatSubspace span_Q(std::size_t ambient, const std::vector<QVec>& vectors) {
    QMat m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    rref(m);
    RatSubspace s;
    s.ambient = ambient;
    s.basis = std::move(m);
    return s;
}

RatSubspace span_Q(std::size_t ambient, const std::vector<ZVec>& vectors) {
    std::vector<QVec> qs;
    qs.reserve(vectors.size());
    for (const ZVec& v : vectors) {
        QVec q(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        qs.push_back(std::move(q));
    }
    return span_Q(ambient, qs);
}

IntLattice span_Z(std::size_t ambient, const std::vector<ZVec>& vectors) {
    ZMat m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    IntLattice l;
    l.ambient = ambient;
    l.basis = hnf(std::move(m));
    return l;
}

RatSubspace perp(const RatSubspace& w, const ZMat& gram) {
    if (gram.rows != w.ambient || gram.cols != w.ambient)
        throw std::invalid_argument("perp: gram/ambient mismatch");
    // h in perp(W)  <=>  (basis * gram) h = 0
    QMat constraints = w.basis * QMat(gram);
    QMat k = kernel(constraints);
    RatSubspace s;
    s.ambient = w.ambient;
    s.basis = std::move(k);
    return s;
}

RatSubspace subspace_sum(const RatSubspace& u, const RatSubspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    QMat m(u.basis.rows + v.basis.rows, u.ambient);
    for (std::size_t i = 0; i < u.basis.rows; ++i) m.set_row(i, u.basis.row(i));
    for (std::size_t i = 0; i < v.basis.rows; ++i) m.set_row(u.basis.rows + i, v.basis.row(i));
    rref(m);
    RatSubspace s;
    s.ambient = u.ambient;
    s.basis = std::move(m);
    return s;
}

RatSubspace intersect(const RatSubspace& u, const RatSubspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    // Solve alpha * U = beta * V: the kernel of the stacked column system
    // gives the coefficient pairs, and alpha * U runs over the intersection.
    const std::size_t du = u.basis.rows, dv = v.basis.rows;
    QMat stacked(u.ambient, du + dv);
    for (std::size_t c = 0; c < du; ++c)
        for (std::size_t j = 0; j < u.ambient; ++j) stacked(j, c) = u.basis(c, j);
    for (std::size_t c = 0; c < dv; ++c)
        for (std::size_t j = 0; j < u.ambient; ++j) stacked(j, du + c) = -v.basis(c, j);
    QMat k = kernel(stacked);  // rows: (alpha, beta) with alpha*U = beta*V
    QMat m(k.rows, u.ambient);
    for (std::size_t i = 0; i < k.rows; ++i)
        for (std::size_t c = 0; c < du; ++c) {
            if (k(i, c) == 0) continue;
            for (std::size_t j = 0; j < u.ambient; ++j) m(i, j) += k(i, c) * u.basis(c, j);
        }
    rref(m);
    RatSubspace s;
    s.ambient = u.ambient;
    s.basis = std::move(m);
    return s;
}

QMat restricted_gram(const QMat& basis, const ZMat& gram) {
    return basis * QMat(gram) * basis.transpose();
}

ZMat restricted_gram(const ZMat& basis, const ZMat& gram) {
    return basis * gram * basis.transpose();
}

bool is_symplectic_Q(const RatSubspace& w, const ZMat& gram) {
    if (w.dim() % 2 != 0) return false;  // fast path; odd skew det is 0 anyway
    if (w.dim() == 0) return true;
    return det(restricted_gram(w.basis, gram)) != 0;
}

bool is_symplectic_Z(const IntLattice& l, const ZMat& gram) {
    if (l.rank() % 2 != 0) return false;
    if (l.rank() == 0) return true;
    Int d = det(restricted_gram(l.basis, gram));
    return d == 1 || d == -1;
}

bool member_Z(const IntLattice& l, const ZVec& v) {
    bool ok = false;
    solve_left_Z(l.basis, v, ok);
    return ok;
}

std::optional<Int> lattice_index(const IntLattice& sub, const IntLattice& sup) {
    if (sub.ambient != sup.ambient) throw std::invalid_argument("lattice_index: ambient mismatch");
    ZMat coords(sub.basis.rows, sup.basis.rows);
    for (std::size_t i = 0; i < sub.basis.rows; ++i) {
        bool ok = false;
        std::vector<Int> c = solve_left_Z(sup.basis, sub.basis.row(i), ok);
        if (!ok) throw std::invalid_argument("lattice_index: sub is not contained in sup");
        coords.set_row(i, c);
    }
    if (sub.rank() != sup.rank()) return std::nullopt;
    Int d = det(coords);
    return d < 0 ? Int(-d) : d;
}

bool RatSpanAccumulator::add(const QVec& v) {
    if (v.size() != ambient_) throw std::invalid_argument("RatSpanAccumulator: dim mismatch");
    QVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p] == 0) continue;
        Rat f = r[p];
        for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < ambient_ && r[p] == 0) ++p;
    if (p == ambient_) return false;
    Rat inv = 1 / r[p];
    for (std::size_t j = p; j < ambient_; ++j) r[j] *= inv;
    // back-reduce existing rows against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][p] == 0) continue;
        Rat f = rows_[i][p];
        for (std::size_t j = p; j < ambient_; ++j) rows_[i][j] -= f * r[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

bool RatSpanAccumulator::add(const ZVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return add(q);
}

bool RatSpanAccumulator::contains(const QVec& v) const {
    QVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p] == 0) continue;
        Rat f = r[p];
        for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * rows_[i][j];
    }
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

RatSubspace RatSpanAccumulator::subspace() const {
    RatSubspace s;
    s.ambient = ambient_;
    s.basis = QMat(rows_.size(), ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) s.basis.set_row(i, rows_[i]);
    return s;
}

bool IntLatticeAccumulator::add(const ZVec& v) {
    if (v.size() != ambient_) throw std::invalid_argument("IntLatticeAccumulator: dim mismatch");
    // Quick membership: reduce against HNF pivots with exact division.
    {
        ZVec r = v;
        bool member = true;
        for (std::size_t i = 0; i < hnf_.rows && member; ++i) {
            std::size_t p = 0;
            while (p < ambient_ && hnf_(i, p) == 0) ++p;
            if (p == ambient_ || r[p] == 0) continue;
            if (r[p] % hnf_(i, p) != 0) { member = false; break; }
            Int q = r[p] / hnf_(i, p);
            for (std::size_t j = p; j < ambient_; ++j) r[j] -= q * hnf_(i, j);
        }
        if (member) {
            for (const Int& x : r)
                if (x != 0) { member = false; break; }
        }
        if (member) return false;
    }
    ZMat m(hnf_.rows + 1, ambient_);
    for (std::size_t i = 0; i < hnf_.rows; ++i) m.set_row(i, hnf_.row(i));
    m.set_row(hnf_.rows, v);
    hnf_ = hnf(std::move(m));
    return true;
}

IntLattice IntLatticeAccumulator::lattice() const {
    IntLattice l;
    l.ambient = ambient_;
    l.basis = hnf_;
    if (l.basis.cols == 0) l.basis = ZMat(0, ambient_);
    return l;
}

}  // namespace covhom
