#include "covhom/twistlift.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace covhom {

LiftedTwistData lifted_twist_data(const CoverComplex& cx, const H1Lattice& lat,
                                  const SccWord& curve) {
    Word w = reduce(curve.word);
    if (w.empty()) throw std::invalid_argument("lifted_twist_data: empty curve word");
    LiftedTwistData data;
    data.curve = curve;
    data.rank = lat.rank;
    Perm pw = cx.rep.of_word(w);
    data.d = 1;
    for (const std::vector<int>& cyc : pw.cycles()) {
        LiftedTwistData::Component comp;
        comp.sheet = cyc[0];
        comp.degree = static_cast<int>(cyc.size());
        comp.cls = lift_class(cx, lat, w, comp.sheet).cls;
        data.d = boost::multiprecision::lcm(data.d, Int(comp.degree));
        data.components.push_back(std::move(comp));
    }
    for (const auto& comp : data.components) data.e.push_back(data.d / comp.degree);
    return data;
}

ZMat twist_matrix(const H1Lattice& lat, const LiftedTwistData& data) {
    if (data.rank != lat.rank) throw std::invalid_argument("twist_matrix: lattice mismatch");
    // M = I + sum_j e_j c_j (c_j^T G^T) = I - sum_j e_j c_j c_j^T G
    ZMat m = ZMat::identity(lat.rank);
    for (std::size_t j = 0; j < data.components.size(); ++j) {
        const ZVec& c = data.components[j].cls;
        ZVec gc = vec_mat(c, lat.gram);  // row vector c^T G
        for (std::size_t r = 0; r < lat.rank; ++r) {
            if (c[r] == 0) continue;
            for (std::size_t s = 0; s < lat.rank; ++s)
                m(r, s) -= data.e[j] * c[r] * gc[s];
        }
    }
    return m;
}

RatSubspace fixed_space(const std::vector<ZMat>& matrices, std::size_t ambient) {
    if (matrices.empty()) return RatSubspace::full(ambient);
    QMat stacked(matrices.size() * ambient, ambient);
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const ZMat& m = matrices[k];
        if (m.rows != ambient || m.cols != ambient)
            throw std::invalid_argument("fixed_space: dimension mismatch");
        for (std::size_t i = 0; i < ambient; ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                stacked(k * ambient + i, j) = Rat(m(i, j) - (i == j ? 1 : 0));
    }
    RatSubspace s;
    s.ambient = ambient;
    s.basis = kernel(stacked);
    return s;
}

bool FixedSpaceTracker::constrain(const ZMat& m) {
    const std::size_t n = space_.ambient;
    if (m.rows != n || m.cols != n) throw std::invalid_argument("constrain: dimension mismatch");
    if (space_.dim() == 0) return false;
    // Solve (M - I) restricted to the current space: rows of `space_.basis`
    // are a basis; find coefficient vectors alpha with (M - I) (alpha B) = 0.
    QMat mi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mi(i, j) = Rat(m(i, j) - (i == j ? 1 : 0));
    QMat cols = mi * space_.basis.transpose();  // n x dim
    QMat coeff = kernel(cols);                  // rows alpha with cols alpha^T = 0
    if (coeff.rows == space_.dim()) return false;
    QMat nb = coeff * space_.basis;
    rref(nb);
    space_.basis = std::move(nb);
    return true;
}

OrbitWitness orbit_witness(const H1Lattice& lat, const LiftedTwistData& data, const ZVec& v) {
    OrbitWitness res;
    res.w = ZVec(lat.rank);
    for (std::size_t j = 0; j < data.components.size(); ++j) {
        const ZVec& c = data.components[j].cls;
        Int coef = data.e[j] * lat.omega(v, c);
        if (coef == 0) continue;
        for (std::size_t i = 0; i < lat.rank; ++i) res.w[i] += coef * c[i];
    }
    bool zero = true;
    for (const Int& x : res.w) zero = zero && x == 0;
    res.verdict = zero ? OrbitVerdict::Fixed : OrbitVerdict::Infinite;
    return res;
}

}  // namespace covhom
