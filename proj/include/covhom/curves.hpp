// Words in pi_1(Sigma) that are genuinely simple closed curves of a known
// topological type, produced by acting on seed curves with mapping-class
// automorphisms.  Simplicity is by construction, never by a decision
// procedure: every automorphism here sends the surface relator to a
// conjugate of itself, so it is induced by an orientation-preserving
// homeomorphism and preserves both simplicity and topological type.
#pragma once

#include "covhom/surface.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace covhom {

struct TopType {
    enum class Tag { Nonseparating, Separating, PantsBoundary };
    Tag tag = Tag::Nonseparating;
    int handle = 0;       // separating(h): genus of the smaller side, 1 <= h <= g/2
    std::string label;    // user label for pants_boundary

    static TopType nonseparating() { return {Tag::Nonseparating, 0, ""}; }
    static TopType separating(int h) { return {Tag::Separating, h, ""}; }
    static TopType pants_boundary(std::string l) { return {Tag::PantsBoundary, 0, std::move(l)}; }

    bool operator==(const TopType& o) const {
        return tag == o.tag && handle == o.handle && label == o.label;
    }
    std::string str() const;
    static TopType parse(const std::string& s);  // "nonseparating" | "separating1" | ...
};

struct SccWord {
    Word word;
    TopType ttype;
    std::vector<std::string> provenance;  // names of applied automorphisms
};

// Automorphism of pi_1(Sigma_g) given by generator images, tagged with the
// homology class of its twist curve.  direction +1 means the induced map on
// H_1(Sigma) is c |-> c + omega(c, t) t, direction -1 the inverse.
struct TwistAutomorphism {
    std::string name;
    SurfaceType st;
    std::vector<Word> images;  // per generator slot a1,b1,...,ag,bg
    ZVec twist_class;
    int direction = 1;

    Word apply(const Word& w) const;  // substitute and freely reduce

    // The two soundness invariants; throws std::logic_error on failure.
    void validate() const;
};

// Seeds: a_i, b_i (nonseparating) and, for g >= 2, [a_1,b_1] (separating(1)).
std::vector<SccWord> seed_curves(const SurfaceType& st);

// Twists about a_i, b_i, and one handle-mixing curve per adjacent handle
// pair; every generator passes validate() at construction.
std::vector<TwistAutomorphism> twist_generators(const SurfaceType& st);

// Deterministic sampler: the seeds of the requested type come first, then
// random walks of `walk_len` twists (generators and inverses, uniform).
struct CurveSampler {
    CurveSampler(const SurfaceType& st, std::vector<TopType> types, std::uint64_t seed,
                 int walk_len = 8);

    bool supported() const { return !seeds_.empty(); }
    std::vector<TopType> unsupported_types() const { return unsupported_; }

    SccWord next();

private:
    SurfaceType st_;
    std::vector<SccWord> seeds_;
    std::vector<TopType> unsupported_;
    std::vector<TwistAutomorphism> autos_;  // generators and inverses
    std::mt19937_64 rng_;
    int walk_len_;
    std::size_t count_ = 0;
};

std::vector<SccWord> sample_curves(const SurfaceType& st, const TopType& ttype, int count,
                                   std::uint64_t rng_seed);

// Pants decomposition of the closed genus-2 surface: curves a_1, a_2 and the
// separating curve [a_1,b_1]; two complementary pairs of pants.
struct PantsData {
    std::vector<SccWord> curves;
    std::vector<std::vector<Word>> pieces;  // pi_1 generators of each piece
};

PantsData standard_pants_g2();

}  // namespace covhom
