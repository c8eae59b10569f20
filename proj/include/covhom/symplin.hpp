// Exact subspace and sublattice arithmetic for (H, omega): spans, orthogonal
// complements, symplectic-subspace tests, lattice membership and index.
//
// RatSubspace basis matrices are kept in reduced row echelon form and
// IntLattice bases in Hermite normal form, so equal spans compare equal.
#pragma once

#include "covhom/exactmat.hpp"

#include <optional>

namespace covhom {

struct RatSubspace {
    std::size_t ambient = 0;
    QMat basis;  // rows = basis vectors, canonical RREF

    static RatSubspace zero(std::size_t ambient);
    static RatSubspace full(std::size_t ambient);

    std::size_t dim() const { return basis.rows; }
    bool contains(const QVec& v) const;
    bool contains(const RatSubspace& other) const;
    bool operator==(const RatSubspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

struct IntLattice {
    std::size_t ambient = 0;
    ZMat basis;  // rows = basis vectors, canonical HNF

    static IntLattice zero(std::size_t ambient);
    static IntLattice standard(std::size_t ambient);  // Z^ambient

    std::size_t rank() const { return basis.rows; }
    bool operator==(const IntLattice& o) const { return ambient == o.ambient && basis == o.basis; }
};

RatSubspace span_Q(std::size_t ambient, const std::vector<QVec>& vectors);
RatSubspace span_Q(std::size_t ambient, const std::vector<ZVec>& vectors);
IntLattice span_Z(std::size_t ambient, const std::vector<ZVec>& vectors);

// {h : omega(h, w) = 0 for all w in W}; gram must be skew and nondegenerate.
RatSubspace perp(const RatSubspace& w, const ZMat& gram);

// Sum of subspaces, canonical.
RatSubspace subspace_sum(const RatSubspace& u, const RatSubspace& v);
RatSubspace intersect(const RatSubspace& u, const RatSubspace& v);

// Gram matrix of omega restricted to the rows of the given basis.
QMat restricted_gram(const QMat& basis, const ZMat& gram);
ZMat restricted_gram(const ZMat& basis, const ZMat& gram);

// det(restricted gram) != 0.  Odd-dimensional subspaces are never symplectic.
bool is_symplectic_Q(const RatSubspace& w, const ZMat& gram);
// |det(restricted gram on an HNF basis)| == 1.
bool is_symplectic_Z(const IntLattice& l, const ZMat& gram);

bool member_Z(const IntLattice& l, const ZVec& v);

// Index [sup : sub] as a positive integer when the ranks agree, nullopt for
// infinite index.  Throws if sub is not contained in sup.
std::optional<Int> lattice_index(const IntLattice& sub, const IntLattice& sup);

// Incremental span with O(rank * dim) membership checks per new vector.
class RatSpanAccumulator {
public:
    explicit RatSpanAccumulator(std::size_t ambient) : ambient_(ambient) {}

    // Returns true if the vector increased the rank.
    bool add(const QVec& v);
    bool add(const ZVec& v);
    bool contains(const QVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    RatSubspace subspace() const;

private:
    std::size_t ambient_;
    std::vector<QVec> rows_;           // RREF rows
    std::vector<std::size_t> pivots_;  // pivot column per row, increasing
};

// Incremental HNF lattice accumulator.
class IntLatticeAccumulator {
public:
    explicit IntLatticeAccumulator(std::size_t ambient) : ambient_(ambient) {}

    bool add(const ZVec& v);  // true if the lattice grew (rank or index)
    std::size_t rank() const { return hnf_.rows; }
    IntLattice lattice() const;

private:
    std::size_t ambient_;
    ZMat hnf_{0, 0};
};

}  // namespace covhom
