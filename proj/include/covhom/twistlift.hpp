// Lifted Dehn twists: component degrees d_j of the preimage of a simple
// closed curve, the lifted-twist multiplicities e_j = lcm(d)/d_j, the induced
// action on H_1 of the cover, fixed spaces of twist collections, and
// infinite-orbit witnesses.
#pragma once

#include "covhom/covering.hpp"
#include "covhom/curves.hpp"
#include "covhom/symplin.hpp"

namespace covhom {

struct LiftedTwistData {
    SccWord curve;
    struct Component {
        int sheet;   // representative (smallest in its cycle)
        int degree;  // d_j
        ZVec cls;    // [gamma~_j]
    };
    std::vector<Component> components;
    Int d;               // lcm of the d_j
    std::vector<Int> e;  // e_j = d / d_j
    std::size_t rank = 0;
};

LiftedTwistData lifted_twist_data(const CoverComplex& cx, const H1Lattice& lat, const SccWord& curve);

// M h = h + sum_j e_j omega(h, [gamma~_j]) [gamma~_j]; symplectic, (M-I)^2 = 0.
ZMat twist_matrix(const H1Lattice& lat, const LiftedTwistData& data);

// Intersection over Q of ker(M - I); the empty list gives the full space.
RatSubspace fixed_space(const std::vector<ZMat>& matrices, std::size_t ambient);

// Incremental form of the same intersection.
class FixedSpaceTracker {
public:
    explicit FixedSpaceTracker(std::size_t ambient)
        : space_(RatSubspace::full(ambient)) {}

    // Returns true if the fixed space shrank.
    bool constrain(const ZMat& m);
    const RatSubspace& space() const { return space_; }

private:
    RatSubspace space_;
};

enum class OrbitVerdict { Fixed, Infinite };

struct OrbitWitness {
    ZVec w;  // sum_j e_j omega(v, [gamma~_j]) [gamma~_j]
    OrbitVerdict verdict;
};

OrbitWitness orbit_witness(const H1Lattice& lat, const LiftedTwistData& data, const ZVec& v);

}  // namespace covhom
