#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covhom/covering.hpp"

#include <algorithm>
#include <random>

using namespace covhom;

namespace {

PermutationRep identity_rep(int genus) {
    std::vector<Perm> ps(static_cast<std::size_t>(2 * genus), Perm::identity(1));
    return rep_from_perms({genus, 0}, 1, ps, "identity");
}

Perm random_perm(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(std::move(v));
}

// Random transitive cover of genus-g base through the free specialization
// b_i -> 1 (any tuple of a-images then satisfies the surface relation).
PermutationRep random_cover(int genus, int degree, std::mt19937& rng) {
    for (;;) {
        std::vector<Perm> ps;
        for (int i = 0; i < genus; ++i) {
            ps.push_back(random_perm(degree, rng));
            ps.push_back(Perm::identity(degree));
        }
        if (!transitive(ps, degree)) continue;
        return rep_from_perms({genus, 0}, degree, ps, "random");
    }
}

}  // namespace

TEST_CASE("mod_ell representations") {
    CHECK(mod_ell_rep(2, 2).degree == 16);
    CHECK(mod_ell_rep(2, 3).degree == 81);
    CHECK_THROWS(mod_ell_rep(2, 1));

    // brute-force oracle: translation by (1,0) on (Z/3)^2 has 3 disjoint 3-cycles
    PermutationRep r = mod_ell_rep(1, 3);
    CHECK(r.degree == 9);
    std::vector<int> expect(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) expect[static_cast<std::size_t>(x + 3 * y)] = ((x + 1) % 3) + 3 * y;
    CHECK(r.perm[0].img == expect);
    auto cyc = r.perm[0].cycles();
    CHECK(cyc.size() == 3);
    for (const auto& c : cyc) CHECK(c.size() == 3);
}

TEST_CASE("abelian representations") {
    // trivial group: identity cover
    PermutationRep triv = abelian_rep(2, {1}, {{0}, {0}, {0}, {0}});
    CHECK(triv.degree == 1);

    // Z/2 x Z/2 with a1 -> (1,0), b1 -> (0,1) equals mod_ell(1,2) as tables
    PermutationRep ab = abelian_rep(1, {2, 2}, {{1, 0}, {0, 1}});
    PermutationRep ml = mod_ell_rep(1, 2);
    REQUIRE(ab.degree == ml.degree);
    for (std::size_t i = 0; i < ab.perm.size(); ++i) CHECK(ab.perm[i] == ml.perm[i]);

    // degree-3 cyclic cover: a1 -> 1, rest -> 0
    PermutationRep cyc = abelian_rep(2, {3}, {{1}, {0}, {0}, {0}});
    CHECK(cyc.degree == 3);
    CHECK(cyc.perm[1].is_identity());
    CHECK(cyc.perm[0].cycles().size() == 1);

    // non-generating targets are rejected (disconnected cover)
    CHECK_THROWS(abelian_rep(2, {4}, {{2}, {0}, {0}, {0}}));
}

TEST_CASE("build_complex basics") {
    CoverComplex id2 = build_complex(identity_rep(2));
    CHECK(id2.V == 1);
    CHECK(id2.E == 4);
    CHECK(id2.F == 1);
    CHECK(id2.euler() == -2);

    CoverComplex m22 = build_complex(mod_ell_rep(2, 2));
    CHECK(m22.euler() == -32);
    CHECK(m22.cover_genus() == 17);

    // branched: g=0, n=3, all z_j -> (123)
    Perm c3(std::vector<int>{1, 2, 0});
    PermutationRep br = rep_from_perms({0, 3}, 3, {c3, c3, c3}, "branched");
    CoverComplex bx = build_complex(br);
    CHECK(bx.euler() == bx.riemann_hurwitz_euler());
    CHECK(bx.euler() == 0);  // three caps: 3*(-1) + 3
    CHECK(bx.cover_genus() == 1);
    CHECK(bx.cap_ram == std::vector<int>{3, 3, 3});
}

TEST_CASE("homology lattice ranks and gram") {
    CoverComplex id2 = build_complex(identity_rep(2));
    H1Lattice lat = homology_lattice(id2);
    CHECK(lat.rank == 4);
    // canonical basis comes out as (a1, b1, a2, b2) and gram is block J
    ZMat j(4, 4);
    j(0, 1) = 1; j(1, 0) = -1; j(2, 3) = 1; j(3, 2) = -1;
    CHECK(lat.gram == j);

    CoverComplex m22 = build_complex(mod_ell_rep(2, 2));
    H1Lattice lat22 = homology_lattice(m22);
    CHECK(lat22.rank == 34);
    Int d = det(lat22.gram);
    CHECK((d == 1 || d == -1));

    // torus from branched triple cover of the sphere
    Perm c3(std::vector<int>{1, 2, 0});
    CoverComplex bx = build_complex(rep_from_perms({0, 3}, 3, {c3, c3, c3}, "branched"));
    H1Lattice blat = homology_lattice(bx);
    CHECK(blat.rank == 2);
}

TEST_CASE("mod_ell(2,3) rank 164") {
    CoverComplex m23 = build_complex(mod_ell_rep(2, 3));
    CHECK(m23.euler() == -162);
    H1Lattice lat = homology_lattice(m23);
    CHECK(lat.rank == 164);
}

TEST_CASE("lift_class identity cover round trip") {
    CoverComplex id2 = build_complex(identity_rep(2));
    H1Lattice lat = homology_lattice(id2);

    auto r = lift_class(id2, lat, Word::parse("a1"), 0);
    CHECK(r.m == 1);
    CHECK(r.cls == ZVec{1, 0, 0, 0});

    CHECK_THROWS(lift_class(id2, lat, Word(), 0));

    std::mt19937 rng(9);
    SurfaceType st{2, 0};
    std::uniform_int_distribution<int> len(1, 12);
    for (int t = 0; t < 50; ++t) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            std::uniform_int_distribution<int> slot(0, 3), sgn(0, 1);
            int s = slot(rng);
            Letter l = s % 2 ? gen_b(s / 2 + 1) : gen_a(s / 2 + 1);
            l.sign = sgn(rng) ? 1 : -1;
            w.letters.push_back(l);
        }
        if (reduce(w).empty()) continue;
        auto lc = lift_class(id2, lat, w, 0);
        CHECK(lc.m == 1);
        CHECK(lc.cls == base_class(st, w));
    }
}

TEST_CASE("lift_class on mod_ell and cyclic covers") {
    CoverComplex m23 = build_complex(mod_ell_rep(2, 3));
    H1Lattice lat23 = homology_lattice(m23);
    auto r = lift_class(m23, lat23, Word::parse("a1"), 5);
    CHECK(r.m == 3);

    // degree-3 cyclic cover, a1 -> 1: b1 lifts to 3 disjoint loops (one per
    // sheet, all homologous), a1 to one 3-fold covering loop
    CoverComplex cyc = build_complex(abelian_rep(2, {3}, {{1}, {0}, {0}, {0}}));
    H1Lattice clat = homology_lattice(cyc);
    std::vector<ZVec> b_classes;
    for (int s = 0; s < 3; ++s) {
        auto lb = lift_class(cyc, clat, Word::parse("b1"), s);
        CHECK(lb.m == 1);
        b_classes.push_back(lb.cls);
    }
    CHECK(b_classes[0] == b_classes[1]);
    CHECK(b_classes[0] == b_classes[2]);
    CHECK(b_classes[0] != ZVec(clat.rank));
    auto la = lift_class(cyc, clat, Word::parse("a1"), 0);
    CHECK(la.m == 3);
}

TEST_CASE("lift_class additivity and conjugation invariance") {
    CoverComplex m22 = build_complex(mod_ell_rep(2, 2));
    H1Lattice lat = homology_lattice(m22);

    // additivity when perm(u), perm(v) both fix the start sheet:
    // u = a1^2, v = b1^2 fix every sheet of the mod-2 cover
    Word u = Word::parse("a1 a1"), v = Word::parse("b1 b1");
    auto cu = lift_class(m22, lat, u, 3);
    auto cv = lift_class(m22, lat, v, 3);
    auto cuv = lift_class(m22, lat, reduce(concat(u, v)), 3);
    REQUIRE(cu.m == 1);
    REQUIRE(cv.m == 1);
    REQUIRE(cuv.m == 1);
    for (std::size_t i = 0; i < lat.rank; ++i) CHECK(cuv.cls[i] == cu.cls[i] + cv.cls[i]);

    // conjugation: class of t w t^-1 from s equals class of w from s.perm(t)
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> slot(0, 3), sgn(0, 1), sheet(0, 15), len(1, 6);
        auto rand_word = [&](int n) {
            Word w;
            for (int i = 0; i < n; ++i) {
                int s = slot(rng);
                Letter l = s % 2 ? gen_b(s / 2 + 1) : gen_a(s / 2 + 1);
                l.sign = sgn(rng) ? 1 : -1;
                w.letters.push_back(l);
            }
            return w;
        };
        Word w = rand_word(len(rng)), t = rand_word(len(rng));
        if (reduce(w).empty()) continue;
        int s = sheet(rng);
        auto lhs = lift_class(m22, lat, conjugate(t, w), s);
        auto rhs = lift_class(m22, lat, w, m22.rep.act(s, t));
        CHECK(lhs.m == rhs.m);
        CHECK(lhs.cls == rhs.cls);
    }
}

TEST_CASE("deck matrices") {
    CoverComplex m22 = build_complex(mod_ell_rep(2, 2));
    H1Lattice lat = homology_lattice(m22);

    ZMat id = deck_matrix(m22, lat, {0, 0, 0, 0});
    CHECK(id == ZMat::identity(lat.rank));

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 5; ++t) {
        std::vector<int> g = {bit(rng), bit(rng), bit(rng), bit(rng)};
        ZMat m = deck_matrix(m22, lat, g);
        CHECK(m.transpose() * lat.gram * m == lat.gram);
        // order divides |A| = 16; in fact divides 2 here
        CHECK(m * m == ZMat::identity(lat.rank));
    }

    CoverComplex id2 = build_complex(identity_rep(2));
    H1Lattice ilat = homology_lattice(id2);
    CHECK_THROWS(deck_matrix(id2, ilat, {0}));
}

TEST_CASE("riemann-hurwitz on random covers") {
    std::mt19937 rng(41);
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<int> deg(2, 7), gen(2, 3);
        PermutationRep rep = random_cover(gen(rng), deg(rng), rng);
        CoverComplex cx = build_complex(rep);
        CHECK(cx.euler() == cx.riemann_hurwitz_euler());
        CHECK(cx.euler() % 2 == 0);
        H1Lattice lat = homology_lattice(cx);
        CHECK(static_cast<long long>(lat.rank) == 2 - cx.euler());
        Int d = det(lat.gram);
        CHECK((d == 1 || d == -1));
    }

    // branched random covers: g=1, n=2 with z2 solving the relation
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<int> deg(2, 6);
        int n = deg(rng);
        Perm x = random_perm(n, rng);
        Perm z1 = random_perm(n, rng);
        Perm z2 = z1.inverse();
        std::vector<Perm> ps = {x, Perm::identity(n), z1, z2};
        if (!transitive(ps, n)) { --t; continue; }
        PermutationRep rep = rep_from_perms({1, 2}, n, ps, "random branched");
        CoverComplex cx = build_complex(rep);
        CHECK(cx.euler() == cx.riemann_hurwitz_euler());
        H1Lattice lat = homology_lattice(cx);
        Int d = det(lat.gram);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("forget trivial marked points") {
    Perm c3(std::vector<int>{1, 2, 0});
    Perm id3 = Perm::identity(3);
    // z1, z2 act, z3 trivial: forgetting z3 keeps the same surface
    PermutationRep rep =
        rep_from_perms({1, 3}, 3, {id3, id3, c3, c3.inverse(), id3}, "with trivial z3");
    PermutationRep f = rep.forget_trivial_marked();
    CHECK(f.st.marked == 2);
    CoverComplex a = build_complex(rep), b = build_complex(f);
    CHECK(a.euler() == b.euler());
    CHECK(homology_lattice(a).rank == homology_lattice(b).rank);
}

TEST_CASE("invalid representations rejected") {
    // relator not killed: g=1 cover with non-commuting a,b images
    Perm x(std::vector<int>{1, 0, 2});
    Perm y(std::vector<int>{0, 2, 1});
    CHECK_THROWS(rep_from_perms({1, 0}, 3, {x, y}, "bad"));
    // disconnected
    Perm id3 = Perm::identity(3);
    CHECK_THROWS(rep_from_perms({1, 0}, 3, {id3, id3}, "disconnected"));
}

TEST_CASE("transfer identity ties the cover form to the base form") {
    // For a regular unbranched cover with deck group D and pushforward p of
    // chains (sum the sheet coordinates), omega_base(p x, p y) equals
    // sum_{g in D} omega_cover(x, g y).  This checks the crossing-count gram
    // against base_omega through an independent classical identity.
    auto push_class = [](const CoverComplex& cx, const ZVec& chain) {
        ZVec base(static_cast<std::size_t>(2 * cx.rep.st.genus));
        for (int e = 0; e < cx.E; ++e)
            base[static_cast<std::size_t>(cx.edge_letter(e))] += chain[static_cast<std::size_t>(e)];
        return base;
    };
    auto all_deck = [](const PermutationRep& rep) {
        std::vector<std::vector<int>> elems;
        for (int s = 0; s < rep.degree; ++s) elems.push_back(rep.sheet_to_elem(s));
        return elems;
    };

    std::mt19937 rng(47);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const PermutationRep& rep :
         {mod_ell_rep(2, 2), abelian_rep(2, {3}, {{1}, {0}, {0}, {0}})}) {
        CoverComplex cx = build_complex(rep);
        H1Lattice lat = homology_lattice(cx);
        std::vector<ZMat> decks;
        for (const auto& g : all_deck(cx.rep)) decks.push_back(deck_matrix(cx, lat, g));
        for (int trial = 0; trial < 8; ++trial) {
            ZVec xc(lat.rank), yc(lat.rank);
            for (auto& v : xc) v = coef(rng);
            for (auto& v : yc) v = coef(rng);
            // edge chains of the combinations, for the pushforward
            ZVec xchain(static_cast<std::size_t>(cx.E)), ychain(static_cast<std::size_t>(cx.E));
            for (std::size_t i = 0; i < lat.rank; ++i)
                for (int e = 0; e < cx.E; ++e) {
                    xchain[static_cast<std::size_t>(e)] += xc[i] * lat.basis_chains(i, static_cast<std::size_t>(e));
                    ychain[static_cast<std::size_t>(e)] += yc[i] * lat.basis_chains(i, static_cast<std::size_t>(e));
                }
            Int lhs = base_omega(push_class(cx, xchain), push_class(cx, ychain));
            Int rhs = 0;
            for (const ZMat& d : decks) rhs += lat.omega(xc, mat_vec(d, yc));
            CHECK(lhs == rhs);
        }
    }
}
