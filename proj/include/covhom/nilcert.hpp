// Arithmetic in the free 2-step nilpotent group N_n[ell] whose central part
// is reduced mod ell_hat (= ell for odd ell, ell/2 for even ell):
//
//   1 -> wedge^2 (Z/ell_hat)^n -> N_n[ell] -> Z^n -> 1
//
// Elements are kept in the normal form x_1^{a_1} ... x_n^{a_n} c with c
// central; multiplication uses the explicit reordering cocycle, and the
// commutator of u and v is the central element u_bar wedge v_bar.
//
// This feeds the integral-gap certificate: the map phi(a_i) = x_i,
// phi(b_i) = 1 sends the ell-th power subgroup into P_n[ell] while the
// commutator [a_1, a_2] hits a central element outside it.
#pragma once

#include "covhom/curves.hpp"
#include "covhom/surface.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covhom {

struct NilParams {
    int n;
    int ell;
    int ell_hat;

    NilParams(int n_, int ell_);
};

struct NilElement {
    std::vector<Int> a;  // abelianized part in Z^n
    std::vector<int> c;  // central part: coefficient of e_i ^ e_j for i < j, in [0, ell_hat)

    bool operator==(const NilElement& o) const { return a == o.a && c == o.c; }
    std::string str() const;
};

NilElement nil_identity(const NilParams& p);
NilElement nil_generator(const NilParams& p, int i);  // x_i, 1-based
NilElement nil_central(const NilParams& p, int i, int j, int coef);  // (e_i ^ e_j)^coef, 1-based

NilElement nil_mul(const NilParams& p, const NilElement& u, const NilElement& v);
NilElement nil_inverse(const NilParams& p, const NilElement& u);
NilElement nil_pow(const NilParams& p, const NilElement& u, int k);  // k >= 0

bool in_P(const NilParams& p, const NilElement& u);  // a == 0 mod ell and c == 0
bool in_A(const NilParams& p, const NilElement& u);  // a == 0 mod ell

// phi: pi_1(Sigma_g) -> N_g[ell] with a_i -> x_i, b_i -> 1; rejects z letters.
NilElement phi_map(const NilParams& p, const Word& w);

// Exhaustive property run: (uv)^ell = u^ell v^ell, centrality of ell-th
// powers, and ell_hat | ell(ell-1)/2, on `trials` random pairs.
struct PowerLemmaReport {
    int n, ell, ell_hat;
    int trials;
    int failures;  // any nonzero value is an implementation bug
    bool divisibility_ok;
};
PowerLemmaReport power_lemma_suite(int n, int ell, int trials, std::uint64_t seed);

// Certificate for the integral gap on the mod-ell cover of a genus-g surface.
struct GapCertificate {
    int g, ell, ell_hat;
    std::string witness_word;
    std::string witness_image;
    int witness_central_order;
    int samples_checked;
    bool certified;  // every sampled phi(w^m) landed in P and the witness did not
};

GapCertificate integral_gap_certificate(int g, int ell, const std::vector<SccWord>& samples);

}  // namespace covhom
