#include "covhom/curves.hpp"

#include <sstream>
#include <stdexcept>

namespace covhom {

std::string TopType::str() const {
    switch (tag) {
        case Tag::Nonseparating: return "nonseparating";
        case Tag::Separating: return "separating" + std::to_string(handle);
        case Tag::PantsBoundary: return "pants_boundary:" + label;
    }
    return "?";
}

TopType TopType::parse(const std::string& s) {
    if (s == "nonseparating") return nonseparating();
    if (s.rfind("separating", 0) == 0) {
        int h = std::stoi(s.substr(10));
        return separating(h);
    }
    if (s.rfind("pants_boundary:", 0) == 0) return pants_boundary(s.substr(15));
    throw std::invalid_argument("unknown topological type: '" + s + "'");
}

Word TwistAutomorphism::apply(const Word& w) const {
    Word out;
    for (const Letter& l : w.letters) {
        if (l.kind == GenKind::Z) {  // marked-point loops are untouched
            out.letters.push_back(l);
            continue;
        }
        const Word& img = images[static_cast<std::size_t>(l.slot(st))];
        if (l.sign > 0)
            out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
        else {
            Word inv = img.inverse();
            out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
        }
    }
    return reduce(out);
}

void TwistAutomorphism::validate() const {
    // (1) the surface relator goes to a conjugate of itself
    if (!is_conjugate_to_relator(st, apply(surface_relator(st))))
        throw std::logic_error("twist automorphism '" + name + "' does not preserve the relator");
    // (2) the induced map on H_1(Sigma) is the transvection by twist_class
    for (int s = 0; s < 2 * st.genus; ++s) {
        Letter l = s % 2 ? gen_b(s / 2 + 1) : gen_a(s / 2 + 1);
        ZVec c = base_class(st, Word::of({l}));
        ZVec expect = c;
        Int coef = direction * base_omega(c, twist_class);
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += coef * twist_class[i];
        ZVec got = base_class(st, images[static_cast<std::size_t>(s)]);
        if (got != expect)
            throw std::logic_error("twist automorphism '" + name +
                                   "' is not the expected homology transvection");
    }
}

std::vector<SccWord> seed_curves(const SurfaceType& st) {
    if (st.genus < 1) throw std::invalid_argument("seed_curves: genus must be >= 1");
    std::vector<SccWord> seeds;
    for (int i = 1; i <= st.genus; ++i) {
        seeds.push_back({Word::of({gen_a(i)}), TopType::nonseparating(), {}});
        seeds.push_back({Word::of({gen_b(i)}), TopType::nonseparating(), {}});
    }
    if (st.genus >= 2)
        seeds.push_back({commutator(Word::of({gen_a(1)}), Word::of({gen_b(1)})), TopType::separating(1), {}});
    return seeds;
}

namespace {

std::vector<Word> identity_images(const SurfaceType& st) {
    std::vector<Word> imgs;
    for (int i = 1; i <= st.genus; ++i) {
        imgs.push_back(Word::of({gen_a(i)}));
        imgs.push_back(Word::of({gen_b(i)}));
    }
    return imgs;
}

ZVec unit_class(const SurfaceType& st, const Letter& l) {
    ZVec c(2 * static_cast<std::size_t>(st.genus));
    c[static_cast<std::size_t>(l.slot(st))] = 1;
    return c;
}

TwistAutomorphism make_auto(const SurfaceType& st, std::string name, std::vector<Word> images,
                            ZVec cls, int dir) {
    TwistAutomorphism t;
    t.name = std::move(name);
    t.st = st;
    t.images = std::move(images);
    t.twist_class = std::move(cls);
    t.direction = dir;
    for (Word& w : t.images) w = reduce(w);
    t.validate();
    return t;
}

// Handle-mixing twist between handles i and i+1.  The curve is embedded and
// crosses each of a_i, b_i, a_{i+1}, b_{i+1} exactly once; its based word is
// c = b_i^-1 a_{i+1} b_{i+1} a_i^-1.  The images below were computed by
// developing the twisted generator loops through the fundamental polygon;
// validate() re-checks the relator conjugacy and the homology transvection,
// and generators_with_inverses re-checks the round trip, at every startup.
void chain_images(const SurfaceType& st, int i, std::vector<Word>& fwd, std::vector<Word>& bwd) {
    const Word A = Word::of({gen_a(i)}), B = Word::of({gen_b(i)});
    const Word A2 = Word::of({gen_a(i + 1)}), B2 = Word::of({gen_b(i + 1)});
    auto inv = [](const Word& w) { return w.inverse(); };
    auto cat = [](std::initializer_list<Word> ws) {
        Word r;
        for (const Word& w : ws) r = concat(r, w);
        return reduce(r);
    };
    fwd = identity_images(st);
    bwd = identity_images(st);
    const std::size_t sa = static_cast<std::size_t>(2 * (i - 1)), sb = sa + 1;
    const std::size_t sa2 = sa + 2, sb2 = sa + 3;
    fwd[sa] = cat({A, inv(B2), inv(A2), B, A});
    fwd[sb] = cat({inv(A), inv(B), A2, B2, B});
    fwd[sa2] = cat({inv(A), inv(B), A2, B2, A2});
    fwd[sb2] = cat({inv(A2), B, A});
    bwd[sa] = cat({inv(B), A2, B2});
    bwd[sb] = cat({inv(B2), inv(A2), B, A, B});
    bwd[sa2] = cat({inv(B2), inv(A2), B, A, A2});
    bwd[sb2] = cat({B2, inv(A), inv(B), A2, B2});
}

}  // namespace

std::vector<TwistAutomorphism> twist_generators(const SurfaceType& st) {
    if (st.genus < 1) throw std::invalid_argument("twist_generators: genus must be >= 1");
    std::vector<TwistAutomorphism> gens;
    for (int i = 1; i <= st.genus; ++i) {
        // twist about a_i: b_i |-> b_i a_i^-1
        std::vector<Word> imgs = identity_images(st);
        imgs[static_cast<std::size_t>(2 * (i - 1) + 1)] =
            reduce(concat(Word::of({gen_b(i)}), Word::of({gen_a(i, -1)})));
        gens.push_back(make_auto(st, "Ta" + std::to_string(i), std::move(imgs),
                                 unit_class(st, gen_a(i)), +1));
        // twist about b_i: a_i |-> a_i b_i
        imgs = identity_images(st);
        imgs[static_cast<std::size_t>(2 * (i - 1))] =
            reduce(concat(Word::of({gen_a(i)}), Word::of({gen_b(i)})));
        gens.push_back(make_auto(st, "Tb" + std::to_string(i), std::move(imgs),
                                 unit_class(st, gen_b(i)), +1));
    }
    for (int i = 1; i < st.genus; ++i) {
        std::vector<Word> fwd, bwd;
        chain_images(st, i, fwd, bwd);
        ZVec cls(2 * static_cast<std::size_t>(st.genus));
        cls[static_cast<std::size_t>(2 * (i - 1))] = -1;
        cls[static_cast<std::size_t>(2 * (i - 1) + 1)] = -1;
        cls[static_cast<std::size_t>(2 * i)] = 1;
        cls[static_cast<std::size_t>(2 * i + 1)] = 1;
        gens.push_back(make_auto(st, "Tc" + std::to_string(i), std::move(fwd), cls, +1));
    }
    return gens;
}

namespace {

std::vector<TwistAutomorphism> generators_with_inverses(const SurfaceType& st) {
    std::vector<TwistAutomorphism> all = twist_generators(st);
    const std::size_t n = all.size();
    for (std::size_t k = 0; k < n; ++k) {
        const TwistAutomorphism& t = all[k];
        TwistAutomorphism inv;
        if (t.name[1] == 'c') {
            int i = std::stoi(t.name.substr(2));
            std::vector<Word> fwd, bwd;
            chain_images(st, i, fwd, bwd);
            inv = make_auto(st, t.name + "_inv", std::move(bwd), t.twist_class, -1);
        } else {
            std::vector<Word> imgs = identity_images(st);
            int i = std::stoi(t.name.substr(2));
            if (t.name[1] == 'a')
                imgs[static_cast<std::size_t>(2 * (i - 1) + 1)] =
                    reduce(concat(Word::of({gen_b(i)}), Word::of({gen_a(i)})));
            else
                imgs[static_cast<std::size_t>(2 * (i - 1))] =
                    reduce(concat(Word::of({gen_a(i)}), Word::of({gen_b(i, -1)})));
            inv = make_auto(st, t.name + "_inv", std::move(imgs), t.twist_class, -1);
        }
        // the inverse really inverts: T(T^-1(x)) = x on generators
        for (int s = 0; s < 2 * st.genus; ++s) {
            Letter l = s % 2 ? gen_b(s / 2 + 1) : gen_a(s / 2 + 1);
            if (t.apply(inv.images[static_cast<std::size_t>(s)]) != Word::of({l}))
                throw std::logic_error("inverse of '" + t.name + "' fails the round trip");
        }
        all.push_back(std::move(inv));
    }
    return all;
}

}  // namespace

CurveSampler::CurveSampler(const SurfaceType& st, std::vector<TopType> types, std::uint64_t seed,
                           int walk_len)
    : st_(st), rng_(seed), walk_len_(walk_len) {
    std::vector<SccWord> all = seed_curves(st);
    for (const TopType& ty : types) {
        bool found = false;
        for (const SccWord& s : all)
            if (s.ttype == ty) {
                seeds_.push_back(s);
                found = true;
            }
        if (!found) unsupported_.push_back(ty);
    }
    if (!seeds_.empty()) autos_ = generators_with_inverses(st);
}

SccWord CurveSampler::next() {
    if (seeds_.empty()) throw std::logic_error("CurveSampler: no supported seed types");
    if (count_ < seeds_.size()) return seeds_[count_++];
    ++count_;
    std::uniform_int_distribution<std::size_t> pick_seed(0, seeds_.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_auto(0, autos_.size() - 1);
    SccWord cur = seeds_[pick_seed(rng_)];
    for (int step = 0; step < walk_len_; ++step) {
        const TwistAutomorphism& t = autos_[pick_auto(rng_)];
        cur.word = t.apply(cur.word);
        cur.provenance.push_back(t.name);
    }
    // type is a mapping-class invariant; cross-check through homology
    ZVec c = base_class(st_, cur.word);
    bool nonzero = false;
    for (const Int& x : c) nonzero = nonzero || x != 0;
    if (cur.ttype == TopType::nonseparating()) {
        if (!nonzero || !is_primitive(c))
            throw std::logic_error("nonseparating sample lost primitivity (automorphism bug)");
    } else if (nonzero) {
        throw std::logic_error("separating sample acquired nonzero class (automorphism bug)");
    }
    return cur;
}

std::vector<SccWord> sample_curves(const SurfaceType& st, const TopType& ttype, int count,
                                   std::uint64_t rng_seed) {
    CurveSampler sampler(st, {ttype}, rng_seed);
    if (!sampler.supported() && count > 0)
        throw std::invalid_argument("sample_curves: no seed for type " + ttype.str());
    std::vector<SccWord> out;
    for (int i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

PantsData standard_pants_g2() {
    PantsData p;
    SccWord c1{Word::of({gen_a(1)}), TopType::nonseparating(), {}};
    SccWord c2{Word::of({gen_a(2)}), TopType::nonseparating(), {}};
    SccWord c3{commutator(Word::of({gen_a(1)}), Word::of({gen_b(1)})), TopType::separating(1), {}};
    p.curves = {c1, c2, c3};
    p.pieces = {
        {Word::of({gen_a(1)}), conjugate(Word::of({gen_b(1)}), Word::of({gen_a(1)}))},
        {Word::of({gen_a(2)}), conjugate(Word::of({gen_b(2)}), Word::of({gen_a(2)}))},
    };
    return p;
}

}  // namespace covhom
