#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covhom/nilcert.hpp"

#include <random>

using namespace covhom;

namespace {

NilElement random_elem(const NilParams& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> aval(-6, 6), cval(0, p.ell_hat - 1);
    NilElement e = nil_identity(p);
    for (auto& x : e.a) x = aval(rng);
    for (auto& x : e.c) x = cval(rng);
    return e;
}

}  // namespace

TEST_CASE("parameters") {
    CHECK(NilParams(2, 3).ell_hat == 3);
    CHECK(NilParams(2, 4).ell_hat == 2);
    CHECK(NilParams(3, 6).ell_hat == 3);
    CHECK(NilParams(2, 5).ell_hat == 5);
    CHECK_THROWS(NilParams(2, 2));
    CHECK_THROWS(NilParams(1, 3));
    // ell_hat >= 2 is forced by ell >= 3, and ell_hat | ell(ell-1)/2
    for (int ell = 3; ell <= 50; ++ell) {
        NilParams p(2, ell);
        CHECK(p.ell_hat >= 2);
        CHECK((ell * (ell - 1) / 2) % p.ell_hat == 0);
    }
}

TEST_CASE("multiplication normal form") {
    NilParams p(3, 3);
    NilElement x1 = nil_generator(p, 1), x2 = nil_generator(p, 2);

    // x1 x2 is already ordered: no central correction
    NilElement u = nil_mul(p, x1, x2);
    CHECK(u.a == std::vector<Int>{1, 1, 0});
    CHECK(u.c == std::vector<int>{0, 0, 0});

    // x2 x1 needs one swap: central part -(e1 ^ e2)
    NilElement v = nil_mul(p, x2, x1);
    CHECK(v.a == std::vector<Int>{1, 1, 0});
    CHECK(v.c == std::vector<int>{p.ell_hat - 1, 0, 0});

    // commutator rule: [x1, x2] = e1 ^ e2
    NilElement comm = nil_mul(p, nil_mul(p, x1, x2), nil_mul(p, nil_inverse(p, x1), nil_inverse(p, x2)));
    CHECK(comm == nil_central(p, 1, 2, 1));

    // associativity and inverses on random triples
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        NilElement a = random_elem(p, rng), b = random_elem(p, rng), c = random_elem(p, rng);
        CHECK(nil_mul(p, nil_mul(p, a, b), c) == nil_mul(p, a, nil_mul(p, b, c)));
        CHECK(nil_mul(p, a, nil_inverse(p, a)) == nil_identity(p));
        CHECK(nil_mul(p, nil_inverse(p, a), a) == nil_identity(p));
        // commutator rule in general: [u,v] = (u_bar wedge v_bar) mod ell_hat
        NilElement lhs = nil_mul(p, nil_mul(p, a, b),
                                 nil_mul(p, nil_inverse(p, a), nil_inverse(p, b)));
        NilElement rhs = nil_identity(p);
        for (int i = 0; i < p.n; ++i)
            for (int j = i + 1; j < p.n; ++j) {
                Int coef = a.a[static_cast<std::size_t>(i)] * b.a[static_cast<std::size_t>(j)] -
                           a.a[static_cast<std::size_t>(j)] * b.a[static_cast<std::size_t>(i)];
                rhs = nil_mul(p, rhs, nil_central(p, i + 1, j + 1, static_cast<int>(coef % p.ell_hat)));
            }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("powers") {
    NilParams p(2, 3);
    NilElement x1 = nil_generator(p, 1), x2 = nil_generator(p, 2);
    CHECK(nil_pow(p, x1, 0) == nil_identity(p));

    // (x1 x2)^3 = x1^3 x2^3 for ell = 3
    NilElement lhs = nil_pow(p, nil_mul(p, x1, x2), 3);
    NilElement rhs = nil_mul(p, nil_pow(p, x1, 3), nil_pow(p, x2, 3));
    CHECK(lhs == rhs);
    CHECK(lhs.c == std::vector<int>{0});

    // x1^ell lies in P
    CHECK(in_P(p, nil_pow(p, x1, 3)));
    CHECK(!in_P(p, x1));
}

TEST_CASE("P and A membership") {
    NilParams p(2, 4);  // ell_hat = 2
    CHECK(in_P(p, nil_identity(p)));
    NilElement central = nil_central(p, 1, 2, 1);
    CHECK(in_A(p, central));
    CHECK(!in_P(p, central));
    NilElement mixed = nil_mul(p, nil_pow(p, nil_generator(p, 1), 4), central);
    CHECK(in_A(p, mixed));
    CHECK(!in_P(p, mixed));
}

TEST_CASE("power lemma suite") {
    for (int n : {2, 3, 4})
        for (int ell : {3, 4, 5, 6}) {
            PowerLemmaReport rep = power_lemma_suite(n, ell, 250, 99);
            CHECK(rep.failures == 0);
            CHECK(rep.divisibility_ok);
        }
}

TEST_CASE("centrality of ell-th powers") {
    std::mt19937 rng(13);
    for (int ell : {3, 4, 5, 6}) {
        NilParams p(3, ell);
        for (int t = 0; t < 100; ++t) {
            NilElement u = random_elem(p, rng), v = random_elem(p, rng);
            NilElement ul = nil_pow(p, u, ell);
            CHECK(nil_mul(p, ul, v) == nil_mul(p, v, ul));
        }
    }
}

TEST_CASE("phi map") {
    NilParams p(2, 3);
    CHECK(phi_map(p, commutator(Word::parse("a1"), Word::parse("b1"))) == nil_identity(p));
    CHECK(phi_map(p, commutator(Word::parse("a1"), Word::parse("a2"))) == nil_central(p, 1, 2, 1));
    CHECK(in_P(p, phi_map(p, Word::parse("a1 a1 a1"))));
    CHECK_THROWS(phi_map(p, Word::parse("z1")));

    // homomorphism on random word pairs
    std::mt19937 rng(17);
    auto rand_word = [&](int len) {
        std::uniform_int_distribution<int> slot(0, 3), sgn(0, 1);
        Word w;
        for (int i = 0; i < len; ++i) {
            int s = slot(rng);
            Letter l = s % 2 ? gen_b(s / 2 + 1) : gen_a(s / 2 + 1);
            l.sign = sgn(rng) ? 1 : -1;
            w.letters.push_back(l);
        }
        return w;
    };
    for (int t = 0; t < 100; ++t) {
        Word u = rand_word(8), v = rand_word(8);
        CHECK(phi_map(p, concat(u, v)) == nil_mul(p, phi_map(p, u), phi_map(p, v)));
        // free reduction does not change the image
        CHECK(phi_map(p, reduce(u)) == phi_map(p, u));
        // powers commute with phi
        CHECK(phi_map(p, word_pow(u, 3)) == nil_pow(p, phi_map(p, u), 3));
    }

    // conjugation invariance on A: phi(t w t^-1) = phi(w) when phi(w) in A
    for (int t = 0; t < 100; ++t) {
        Word w = rand_word(6), tt = rand_word(6);
        NilElement img = phi_map(p, w);
        if (!in_A(p, img)) continue;
        CHECK(phi_map(p, conjugate(tt, w)) == img);
    }
}

TEST_CASE("gap certificate") {
    auto samples = sample_curves({2, 0}, TopType::nonseparating(), 30, 2024);
    GapCertificate cert = integral_gap_certificate(2, 3, samples);
    CHECK(cert.certified);
    CHECK(cert.samples_checked == 30);
    CHECK(cert.ell_hat == 3);
    CHECK(cert.witness_central_order == 3);

    // ell = 4: witness has order ell_hat = 2
    GapCertificate cert4 = integral_gap_certificate(2, 4, samples);
    CHECK(cert4.certified);
    CHECK(cert4.witness_central_order == 2);

    // genus 3 works as well
    auto s3 = sample_curves({3, 0}, TopType::nonseparating(), 10, 77);
    CHECK(integral_gap_certificate(3, 3, s3).certified);
}
