#include "covhom/nilcert.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace covhom {

NilParams::NilParams(int n_, int ell_) : n(n_), ell(ell_) {
    if (n < 2) throw std::invalid_argument("NilParams: n must be >= 2");
    if (ell < 3) throw std::invalid_argument("NilParams: ell must be >= 3");
    ell_hat = ell % 2 == 0 ? ell / 2 : ell;
}

namespace {

std::size_t pair_index(const NilParams& p, int i, int j) {
    // 0-based i < j
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(p.n) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

int mod_hat(const NilParams& p, long long x) {
    long long m = x % p.ell_hat;
    if (m < 0) m += p.ell_hat;
    return static_cast<int>(m);
}

int mod_hat(const NilParams& p, const Int& x) {
    Int m = x % p.ell_hat;
    if (m < 0) m += p.ell_hat;
    return static_cast<int>(m);
}

}  // namespace

NilElement nil_identity(const NilParams& p) {
    NilElement e;
    e.a.assign(static_cast<std::size_t>(p.n), Int(0));
    e.c.assign(static_cast<std::size_t>(p.n) * (static_cast<std::size_t>(p.n) - 1) / 2, 0);
    return e;
}

NilElement nil_generator(const NilParams& p, int i) {
    if (i < 1 || i > p.n) throw std::invalid_argument("nil_generator: index out of range");
    NilElement e = nil_identity(p);
    e.a[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

NilElement nil_central(const NilParams& p, int i, int j, int coef) {
    if (i < 1 || j < 1 || i >= j || j > p.n) throw std::invalid_argument("nil_central: bad pair");
    NilElement e = nil_identity(p);
    e.c[pair_index(p, i - 1, j - 1)] = mod_hat(p, static_cast<long long>(coef));
    return e;
}

NilElement nil_mul(const NilParams& p, const NilElement& u, const NilElement& v) {
    NilElement r = nil_identity(p);
    for (int i = 0; i < p.n; ++i)
        r.a[static_cast<std::size_t>(i)] =
            u.a[static_cast<std::size_t>(i)] + v.a[static_cast<std::size_t>(i)];
    // Reordering x^u x^v into x^{u+v} commutes x_q^{u_q} past x_p^{v_p} for
    // p < q, each swap contributing [x_q, x_p] = -(e_p ^ e_q).
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            std::size_t idx = pair_index(p, i, j);
            Int cocycle = -u.a[static_cast<std::size_t>(j)] * v.a[static_cast<std::size_t>(i)];
            r.c[idx] = mod_hat(p, Int(u.c[idx]) + v.c[idx] + cocycle);
        }
    return r;
}

NilElement nil_inverse(const NilParams& p, const NilElement& u) {
    NilElement r = nil_identity(p);
    for (int i = 0; i < p.n; ++i) r.a[static_cast<std::size_t>(i)] = -u.a[static_cast<std::size_t>(i)];
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            std::size_t idx = pair_index(p, i, j);
            r.c[idx] = mod_hat(p, -Int(u.c[idx]) -
                                      u.a[static_cast<std::size_t>(i)] * u.a[static_cast<std::size_t>(j)]);
        }
    return r;
}

NilElement nil_pow(const NilParams& p, const NilElement& u, int k) {
    if (k < 0) throw std::invalid_argument("nil_pow: negative exponent");
    NilElement r = nil_identity(p);
    for (int t = 0; t < k; ++t) r = nil_mul(p, r, u);
    return r;
}

bool in_A(const NilParams& p, const NilElement& u) {
    for (const Int& x : u.a)
        if (x % p.ell != 0) return false;
    return true;
}

bool in_P(const NilParams& p, const NilElement& u) {
    if (!in_A(p, u)) return false;
    for (int x : u.c)
        if (x != 0) return false;
    return true;
}

NilElement phi_map(const NilParams& p, const Word& w) {
    NilElement r = nil_identity(p);
    for (const Letter& l : w.letters) {
        switch (l.kind) {
            case GenKind::A: {
                if (l.index > p.n) throw std::invalid_argument("phi_map: generator index exceeds n");
                NilElement x = nil_generator(p, l.index);
                if (l.sign < 0) x = nil_inverse(p, x);
                r = nil_mul(p, r, x);
                break;
            }
            case GenKind::B:
                break;  // b_i -> 1
            case GenKind::Z:
                throw std::invalid_argument("phi_map: words with z letters are not in the domain");
        }
    }
    return r;
}

std::string NilElement::str() const {
    std::ostringstream os;
    os << "a=(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ");c=(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

PowerLemmaReport power_lemma_suite(int n, int ell, int trials, std::uint64_t seed) {
    NilParams p(n, ell);
    PowerLemmaReport rep{n, ell, p.ell_hat, trials, 0, (ell * (ell - 1) / 2) % p.ell_hat == 0};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> aval(-6, 6), cval(0, p.ell_hat - 1);
    auto random_elem = [&]() {
        NilElement e = nil_identity(p);
        for (auto& x : e.a) x = aval(rng);
        for (auto& x : e.c) x = cval(rng);
        return e;
    };
    for (int t = 0; t < trials; ++t) {
        NilElement u = random_elem(), v = random_elem();
        // power lemma: (uv)^ell = u^ell v^ell
        if (nil_pow(p, nil_mul(p, u, v), ell) != nil_mul(p, nil_pow(p, u, ell), nil_pow(p, v, ell)))
            ++rep.failures;
        // ell-th powers are central
        NilElement ul = nil_pow(p, u, ell);
        if (nil_mul(p, ul, v) != nil_mul(p, v, ul)) ++rep.failures;
        // u u^-1 = 1
        if (nil_mul(p, u, nil_inverse(p, u)) != nil_identity(p)) ++rep.failures;
    }
    return rep;
}

GapCertificate integral_gap_certificate(int g, int ell, const std::vector<SccWord>& samples) {
    if (g < 2) throw std::invalid_argument("integral_gap_certificate: g must be >= 2");
    NilParams p(g, ell);
    SurfaceType st{g, 0};
    GapCertificate cert;
    cert.g = g;
    cert.ell = ell;
    cert.ell_hat = p.ell_hat;
    cert.samples_checked = 0;

    for (const SccWord& s : samples) {
        if (!(s.ttype == TopType::nonseparating()))
            throw std::invalid_argument("integral_gap_certificate: samples must be nonseparating");
        ZVec c = base_class(st, s.word);
        if (!is_primitive(c))
            throw std::invalid_argument("integral_gap_certificate: sample class is not primitive");
        // order of the class mod ell; primitivity forces exactly ell
        Int gc = ell;
        for (const Int& x : c) gc = boost::multiprecision::gcd(gc, x);
        Int m = ell / gc;
        if (m != ell)
            throw std::logic_error("sampled nonseparating curve has mod-ell order < ell");
        // w^ell enters the cover subgroup; its phi image must land in P
        NilElement img = nil_pow(p, phi_map(p, s.word), ell);
        if (!in_P(p, img))
            throw std::logic_error(
                "phi(w^ell) escaped the power subgroup P: nilpotent arithmetic bug");
        ++cert.samples_checked;
    }

    Word witness = commutator(Word::of({gen_a(1)}), Word::of({gen_a(2)}));
    NilElement wimg = phi_map(p, witness);
    cert.witness_word = witness.str();
    cert.witness_image = wimg.str();
    // the central coefficient of e_1 ^ e_2 must be a unit multiple: order ell_hat
    NilElement probe = wimg;
    int order = 1;
    while (!(probe == nil_identity(p))) {
        probe = nil_mul(p, probe, wimg);
        ++order;
        if (order > p.ell_hat + 1) break;
    }
    cert.witness_central_order = order;
    bool witness_ok = in_A(p, wimg) && !in_P(p, wimg) && order == p.ell_hat;
    if (!witness_ok)
        throw std::logic_error("gap witness [a1,a2] failed to exhibit a nonzero central class");
    cert.certified = true;
    return cert;
}

}  // namespace covhom
