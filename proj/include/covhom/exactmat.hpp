// Exact dense linear algebra over Z and Q (GMP-backed).
//
// Everything here is deterministic: pivot selection is by smallest nonzero
// absolute value with row-order tiebreak, so normal forms are reproducible
// run to run.  No floating point anywhere.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace covhom {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static ZMat identity(std::size_t n);

    ZVec row(std::size_t r) const;
    void set_row(std::size_t r, const ZVec& v);

    ZMat transpose() const;
    bool is_zero() const;
    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    std::string to_string() const;
};

ZMat operator*(const ZMat& x, const ZMat& y);
ZMat operator+(const ZMat& x, const ZMat& y);
ZMat operator-(const ZMat& x, const ZMat& y);

ZVec mat_vec(const ZMat& m, const ZVec& v);
ZVec vec_mat(const ZVec& v, const ZMat& m);
Int dot(const ZVec& x, const ZVec& y);

struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    explicit QMat(const ZMat& m);

    Rat& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static QMat identity(std::size_t n);

    QVec row(std::size_t r) const;
    void set_row(std::size_t r, const QVec& v);

    QMat transpose() const;
    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat operator*(const QMat& x, const QMat& y);

// In-place reduced row echelon form; returns the pivot columns.  Zero rows
// are removed, so on return rows == rank.
std::vector<std::size_t> rref(QMat& m);

// Basis of {x : m x = 0}, one row per basis vector, RREF-canonical.
QMat kernel(const QMat& m);

// Exact determinant (Bareiss fraction-free elimination).
Int det(ZMat m);
Rat det(QMat m);

// Canonical row Hermite normal form: zero rows dropped, pivots positive,
// entries above each pivot reduced into [0, pivot).
ZMat hnf(ZMat m);

// Smith normal form restricted to what homology needs: diagonal entries of
// u*b*col for unimodular (untracked) u and (tracked) col.  colInv = col^-1.
// The first `rank` diagonal entries are the invariant factors d1 | d2 | ...
struct SmithResult {
    std::vector<Int> diag;   // size min(rows, cols), trailing zeros
    std::size_t rank = 0;
    ZMat col;            // cols x cols
    ZMat colInv;         // cols x cols
};
SmithResult smith(ZMat b);

// Solve x * basis = v over Z, where basis rows are independent.  Returns
// empty vector if no integral solution exists.
std::vector<Int> solve_left_Z(const ZMat& basis, const ZVec& v, bool& ok);

}  // namespace covhom
