// Finite branched covers of surfaces from permutation representations.
//
// The covering surface is realized as a CW complex: one vertex per sheet,
// one edge per (generator letter, sheet), one lifted relator polygon per
// sheet, and one cap disk per cycle of perm(z_j).  The rotation system is
// read off the polygon corners, which is exactly what makes the complex an
// oriented closed surface; the intersection form is then a signed local
// crossing count of cycle pairs around vertices.
#pragma once

#include "covhom/exactmat.hpp"
#include "covhom/permutation.hpp"
#include "covhom/surface.hpp"

#include <string>
#include <vector>

namespace covhom {

struct PermutationRep {
    SurfaceType st;
    int degree = 1;                 // N
    std::vector<Perm> perm;         // one per generator slot: a1,b1,...,ag,bg,z1,...,zn
    std::vector<Perm> perm_inv;     // cached inverses, filled by validate()
    bool regular = false;           // built by mod_ell/abelian (sheets = abelian group)
    std::vector<int> deck_moduli;   // regular case: A = Z/m1 x ... x Z/mk
    ZMat deck_targets;              // regular case: 2g x k, generator -> element of A
    std::string id;                 // short human-readable description

    const Perm& of_letter_base(const Letter& l) const { return perm[static_cast<std::size_t>(l.slot(st))]; }
    int act(int sheet, const Letter& l) const;        // right action, one letter
    int act(int sheet, const Word& w) const;
    Perm of_word(const Word& w) const;

    // Sheet index <-> deck group element (regular covers only).
    std::vector<int> sheet_to_elem(int sheet) const;
    int elem_to_sheet(const std::vector<int>& elem) const;

    // Drops z generators whose permutation is the identity (marked points
    // with trivial ramification); the covering surface is unchanged.
    PermutationRep forget_trivial_marked() const;

    void validate();  // relator -> identity, transitivity, perm sanity; fills perm_inv
};

// Regular cover for pi_1 -> H_1(Sigma; Z/ell), N = ell^{2g}.  Requires n=0.
PermutationRep mod_ell_rep(int genus, int ell);

// Regular cover for pi_1 -> A = Z/m1 x ... x Z/mk via the given targets for
// a_1,b_1,...,a_g,b_g (each a vector of length k).  Targets must generate A.
PermutationRep abelian_rep(int genus, const std::vector<int>& moduli,
                           const std::vector<std::vector<int>>& targets);

PermutationRep rep_from_perms(const SurfaceType& st, int degree, std::vector<Perm> perms,
                              const std::string& id = "");

struct CoverComplex {
    PermutationRep rep;
    int num_letters = 0;  // 2g + n
    int V = 0, E = 0, F = 0;

    struct Side {
        int edge;
        int dir;  // +1 traverse tail->head, -1 head->tail
    };
    std::vector<std::vector<Side>> faces;  // N lifted relator polygons, then caps
    std::vector<int> cap_ram;              // ramification index per cap (faces[N + i])

    // Darts: 2*edge + 0 at the tail vertex, 2*edge + 1 at the head vertex.
    std::vector<int> rot_next;                  // ccw successor around the common vertex
    std::vector<std::vector<int>> vertex_darts; // per vertex, in ccw rotation order

    int edge_index(int letter_slot, int sheet) const { return sheet * num_letters + letter_slot; }
    int edge_letter(int e) const { return e % num_letters; }
    int edge_tail(int e) const { return e / num_letters; }
    int edge_head(int e) const;
    int dart_vertex(int d) const { return d % 2 == 0 ? edge_tail(d / 2) : edge_head(d / 2); }

    long long euler() const { return static_cast<long long>(V) - E + F; }
    long long riemann_hurwitz_euler() const;  // N*(2-2g-n) + sum_j #cycles(perm z_j)
    int cover_genus() const { return static_cast<int>((2 - euler()) / 2); }
};

CoverComplex build_complex(PermutationRep rep);

// Integral H_1 of the closed cover with the intersection form.
struct H1Lattice {
    std::size_t rank = 0;  // 2 * cover genus
    int num_edges = 0;

    std::vector<int> nontree_edges;    // increasing edge ids
    std::vector<int> edge_to_k;        // edge -> K index or -1 (tree edge)
    ZMat basis_chains;                 // rank x E, edge chain per basis class
    ZMat class_map;                    // k x rank: cycle K-coords -> class coords
    ZMat gram;                         // rank x rank, omega on the basis

    // Class of an arbitrary 1-cycle given as an edge chain.
    ZVec class_of_cycle(const ZVec& chain) const;

    Int omega(const ZVec& x, const ZVec& y) const;  // x^T gram y
};

H1Lattice homology_lattice(const CoverComplex& cx);

// Algebraic intersection number of two edge-chain 1-cycles, computed from
// the rotation system (no homology needed); used to build `gram`.
Int chain_intersection(const CoverComplex& cx, const ZVec& x, const ZVec& y);

// Pairwise intersection matrix of the given cycle chains (rows).
ZMat intersection_gram(const CoverComplex& cx, const ZMat& chains);

// Lift of w^m from start_sheet (0-based), m = cycle length of perm(w)
// through start_sheet.  Returns m and the homology class.
struct LiftClassResult {
    int m = 0;
    ZVec cls;
};
LiftClassResult lift_class(const CoverComplex& cx, const H1Lattice& lat, const Word& w,
                           int start_sheet);

// Matrix of a deck translation on the lattice basis (regular covers only).
ZMat deck_matrix(const CoverComplex& cx, const H1Lattice& lat, const std::vector<int>& elem);

}  // namespace covhom
