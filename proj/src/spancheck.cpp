#include "covhom/spancheck.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace covhom {

std::string verdict_str(Verdict v, const char* true_name) {
    return v == Verdict::True ? true_name : "INCONCLUSIVE";
}

CoverSession CoverSession::build(PermutationRep rep) {
    CoverSession s;
    s.cx = build_complex(std::move(rep));
    s.lat = homology_lattice(s.cx);
    return s;
}

Json CoverSession::describe() const {
    Json j;
    j["id"] = cx.rep.id;
    j["genus"] = cx.rep.st.genus;
    j["marked"] = cx.rep.st.marked;
    j["degree"] = cx.rep.degree;
    j["chi"] = std::to_string(cx.euler());
    j["cover_genus"] = cx.cover_genus();
    j["rank"] = static_cast<int>(lat.rank);
    Int d = det(lat.gram);
    j["det_gram_abs"] = (d < 0 ? Int(-d) : d).str();
    j["riemann_hurwitz_ok"] = cx.euler() == cx.riemann_hurwitz_euler();
    return j;
}

namespace {

Json sigma_json(const std::vector<TopType>& sigma) {
    Json arr = Json::array();
    for (const TopType& t : sigma) arr.push_back(t.str());
    return arr;
}

Json config_json(const CheckConfig& cfg) {
    Json j;
    j["budget"] = cfg.budget;
    j["window"] = cfg.window;
    j["walk_length"] = cfg.walk_len;
    j["seed"] = cfg.seed;
    return j;
}

Json base_report(const char* check, const CoverSession& s, const std::vector<TopType>& sigma,
                 const CheckConfig& cfg) {
    Json j;
    j["schema"] = 1;
    j["check"] = check;
    j["cover"] = s.describe();
    j["sigma"] = sigma_json(sigma);
    j["config"] = config_json(cfg);
    return j;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Echelon basis rows scaled to primitive integer vectors, entries as strings.
Json subspace_rows_json(const RatSubspace& s) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.basis.rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < s.basis.cols; ++j)
            l = boost::multiprecision::lcm(l, Int(denominator(s.basis(i, j))));
        ZVec v(s.basis.cols);
        Int g = 0;
        for (std::size_t j = 0; j < s.basis.cols; ++j) {
            v[j] = Int(numerator(s.basis(i, j))) * (l / Int(denominator(s.basis(i, j))));
            g = boost::multiprecision::gcd(g, v[j]);
        }
        Json row = Json::array();
        for (const Int& x : v) row.push_back(g == 0 ? x.str() : Int(x / g).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

// Shared sampling loop: accumulate component classes of sampled curves into
// `span` (already seeded with whatever the check wants), optionally collect
// the twist data, and stop once `done()` holds or the window closes.
struct RunState {
    std::vector<int> rank_trace;
    int samples_used = 0;
    bool reached_full = false;  // span hit the ambient rank
    std::vector<LiftedTwistData> collected;
};

template <typename PerCurve, typename Done>
RunState sampling_run(const CoverSession& s, const std::vector<TopType>& sigma,
                      const CheckConfig& cfg, RatSpanAccumulator& span, bool collect,
                      PerCurve&& per_curve, Done&& done) {
    RunState st;
    if (sigma.empty()) return st;
    CurveSampler sampler(s.cx.rep.st, sigma, cfg.seed, cfg.walk_len);
    if (!sampler.supported()) {
        std::string names;
        for (const TopType& t : sampler.unsupported_types()) names += t.str() + " ";
        throw std::invalid_argument("no seed curves for requested types: " + names);
    }
    int since_increase = 0;
    for (int i = 0; i < cfg.budget; ++i) {
        SccWord curve = sampler.next();
        LiftedTwistData data = lifted_twist_data(s.cx, s.lat, curve);
        bool grew = false;
        for (const auto& comp : data.components) grew = span.add(comp.cls) || grew;
        grew = per_curve(data) || grew;
        if (collect) st.collected.push_back(std::move(data));
        ++st.samples_used;
        st.rank_trace.push_back(static_cast<int>(span.rank()));
        st.reached_full = span.rank() == span.ambient();
        since_increase = grew ? 0 : since_increase + 1;
        if (done()) break;
        if (since_increase >= cfg.window) break;
    }
    return st;
}

bool no_change(const LiftedTwistData&) { return false; }

}  // namespace

CheckReport rational_fullness(const CoverSession& s, const std::vector<TopType>& sigma,
                              const CheckConfig& cfg) {
    RatSpanAccumulator span(s.lat.rank);
    RunState st = sampling_run(s, sigma, cfg, span, false, no_change,
                               [&] { return span.rank() == span.ambient(); });
    CheckReport rep;
    rep.check = "fullness";
    rep.verdict = st.reached_full ? Verdict::True : Verdict::Inconclusive;
    rep.body = base_report("fullness", s, sigma, cfg);
    rep.body["samples_used"] = st.samples_used;
    rep.body["rank_trace"] = st.rank_trace;
    rep.body["rank"] = static_cast<int>(span.rank());
    rep.body["ambient_rank"] = static_cast<int>(s.lat.rank);
    rep.body["verdict"] = verdict_str(rep.verdict, "FULL");
    return rep;
}

CheckReport symplectic_check(const CoverSession& s, const std::vector<TopType>& sigma,
                             const CheckConfig& cfg) {
    RatSpanAccumulator span(s.lat.rank);
    RunState st = sampling_run(s, sigma, cfg, span, false, no_change,
                               [&] { return span.rank() == span.ambient(); });
    RatSubspace w = span.subspace();
    RatSubspace wp = perp(w, s.lat.gram);
    bool symp = is_symplectic_Q(w, s.lat.gram);
    if (symp) {
        // a symplectic W always splits H; anything else is an arithmetic bug
        if (w.dim() + wp.dim() != s.lat.rank || intersect(w, wp).dim() != 0 ||
            subspace_sum(w, wp).dim() != s.lat.rank)
            throw std::logic_error("symplectic W failed to split H = W + W-perp");
    }
    CheckReport rep;
    rep.check = "symplectic";
    rep.verdict = symp ? Verdict::True : Verdict::Inconclusive;
    rep.body = base_report("symplectic", s, sigma, cfg);
    rep.body["samples_used"] = st.samples_used;
    rep.body["rank_trace"] = st.rank_trace;
    rep.body["dim_W"] = static_cast<int>(w.dim());
    rep.body["dim_W_perp"] = static_cast<int>(wp.dim());
    rep.body["direct_sum"] = symp;
    rep.body["verdict"] = verdict_str(rep.verdict, "SYMPLECTIC");
    return rep;
}

CheckReport lemma_twistfixed_check(const CoverSession& s, const std::vector<TopType>& sigma,
                                   const CheckConfig& cfg) {
    RatSpanAccumulator span(s.lat.rank);
    FixedSpaceTracker fixed(s.lat.rank);
    Json curves = Json::array();
    auto per_curve = [&](const LiftedTwistData& data) {
        ZMat m = twist_matrix(s.lat, data);
        Json entry;
        entry["word"] = data.curve.word.str();
        Json degs = Json::array();
        for (const auto& comp : data.components) degs.push_back(comp.degree);
        entry["d_j"] = degs;
        entry["d"] = data.d.str();
        Json es = Json::array();
        for (const Int& e : data.e) es.push_back(e.str());
        entry["e"] = es;
        entry["matrix_hash"] = fnv1a(m.to_string());
        curves.push_back(std::move(entry));
        bool shrank = fixed.constrain(m);
        // easy containment, for every sample size: perp(span) inside fixed
        RatSubspace pp = perp(span.subspace(), s.lat.gram);
        if (!fixed.space().contains(pp))
            throw std::logic_error("perp(H^sigma sample) escaped the twist fixed space");
        return shrank;
    };
    RunState st = sampling_run(s, sigma, cfg, span, false, per_curve, [&] {
        return span.rank() == span.ambient() && fixed.space().dim() == 0;
    });

    RatSubspace pp = perp(span.subspace(), s.lat.gram);
    bool equal = pp == fixed.space();
    CheckReport rep;
    rep.check = "twistfixed";
    rep.verdict = equal ? Verdict::True : Verdict::Inconclusive;
    rep.body = base_report("twistfixed", s, sigma, cfg);
    rep.body["samples_used"] = st.samples_used;
    rep.body["rank_trace"] = st.rank_trace;
    rep.body["dim_span"] = static_cast<int>(span.rank());
    rep.body["dim_perp"] = static_cast<int>(pp.dim());
    rep.body["dim_fixed"] = static_cast<int>(fixed.space().dim());
    rep.body["perp_basis"] = subspace_rows_json(pp);
    rep.body["fixed_basis"] = subspace_rows_json(fixed.space());
    rep.body["curves"] = std::move(curves);
    rep.body["verdict"] = verdict_str(rep.verdict, "EQUAL");
    return rep;
}

CheckReport pants_span_check(const CoverSession& s, const PantsData& pants,
                             const CheckConfig& cfg) {
    if (s.cx.rep.st.genus != 2 || s.cx.rep.st.marked != 0)
        throw std::invalid_argument("pants_span_check: the standard decomposition needs g=2, n=0");
    // U: classes of lifts of loops disjoint from the decomposition curves:
    // every piece generator lifted from a representative sheet of every orbit
    // of the piece subgroup, plus all lifts of the curves themselves.
    RatSpanAccumulator acc(s.lat.rank);
    std::vector<ZVec> u_vectors;
    for (const auto& piece : pants.pieces) {
        std::vector<Perm> gens;
        for (const Word& u : piece) gens.push_back(s.cx.rep.of_word(u));
        // orbits of the piece subgroup on sheets
        std::vector<int> orbit_rep(static_cast<std::size_t>(s.cx.rep.degree), -1);
        for (int v = 0; v < s.cx.rep.degree; ++v) {
            if (orbit_rep[static_cast<std::size_t>(v)] != -1) continue;
            std::vector<int> stack = {v};
            orbit_rep[static_cast<std::size_t>(v)] = v;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const Perm& g : gens)
                    for (int y : {g(x), g.inverse()(x)})
                        if (orbit_rep[static_cast<std::size_t>(y)] == -1) {
                            orbit_rep[static_cast<std::size_t>(y)] = v;
                            stack.push_back(y);
                        }
            }
            for (const Word& u : piece) u_vectors.push_back(lift_class(s.cx, s.lat, u, v).cls);
        }
    }
    for (const SccWord& delta : pants.curves) {
        LiftedTwistData d = lifted_twist_data(s.cx, s.lat, delta);
        for (const auto& comp : d.components) u_vectors.push_back(comp.cls);
    }
    for (const ZVec& v : u_vectors) acc.add(v);
    const int rank_U = static_cast<int>(acc.rank());

    std::vector<TopType> sigma;
    for (const SccWord& c : pants.curves) {
        bool seen = false;
        for (const TopType& t : sigma) seen = seen || t == c.ttype;
        if (!seen) sigma.push_back(c.ttype);
    }
    RunState st = sampling_run(s, sigma, cfg, acc, false, no_change,
                               [&] { return acc.rank() == acc.ambient(); });

    CheckReport rep;
    rep.check = "pants";
    rep.verdict = acc.rank() == s.lat.rank ? Verdict::True : Verdict::Inconclusive;
    rep.body = base_report("pants", s, sigma, cfg);
    rep.body["samples_used"] = st.samples_used;
    rep.body["rank_trace"] = st.rank_trace;
    rep.body["rank_U"] = rank_U;
    rep.body["rank_U_deficit"] = static_cast<int>(s.lat.rank) - rank_U;
    rep.body["rank_total"] = static_cast<int>(acc.rank());
    rep.body["verdict"] = verdict_str(rep.verdict, "SPANS");
    return rep;
}

CheckReport orbit_check(const CoverSession& s, const std::vector<TopType>& sigma,
                        const CheckConfig& cfg, int num_vectors) {
    RatSpanAccumulator span(s.lat.rank);
    FixedSpaceTracker fixed(s.lat.rank);
    auto per_curve = [&](const LiftedTwistData& data) {
        return fixed.constrain(twist_matrix(s.lat, data));
    };
    RunState st = sampling_run(s, sigma, cfg, span, true, per_curve, [&] {
        return span.rank() == span.ambient() && fixed.space().dim() == 0;
    });

    std::vector<ZVec> pool;
    for (const auto& d : st.collected)
        for (const auto& comp : d.components) pool.push_back(comp.cls);

    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);

    int tested = 0, witnessed = 0, inconclusive = 0;
    for (int t = 0; t < num_vectors && !pool.empty(); ++t) {
        ZVec v(s.lat.rank);
        bool nonzero = false;
        for (int attempt = 0; attempt < 64 && !nonzero; ++attempt) {
            for (auto& x : v) x = 0;
            for (int k = 0; k < 4; ++k) {
                const ZVec& p = pool[pick(rng)];
                Int c = coef(rng);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * p[i];
            }
            for (const Int& x : v) nonzero = nonzero || x != 0;
        }
        if (!nonzero) continue;
        ++tested;
        bool found = false;
        for (const auto& d : st.collected) {
            OrbitWitness ow = orbit_witness(s.lat, d, v);
            if (ow.verdict != OrbitVerdict::Infinite) continue;
            // v + n w pairwise distinct for n = 1..100
            std::vector<ZVec> orbit;
            for (int n = 1; n <= 100; ++n) {
                ZVec cur = v;
                for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += n * ow.w[i];
                orbit.push_back(std::move(cur));
            }
            std::sort(orbit.begin(), orbit.end());
            for (std::size_t i = 0; i + 1 < orbit.size(); ++i)
                if (orbit[i] == orbit[i + 1])
                    throw std::logic_error("orbit witness produced coincident iterates");
            found = true;
            break;
        }
        if (found)
            ++witnessed;
        else
            ++inconclusive;
    }

    CheckReport rep;
    rep.check = "orbit";
    rep.verdict = (tested > 0 && inconclusive == 0) ? Verdict::True : Verdict::Inconclusive;
    rep.body = base_report("orbit", s, sigma, cfg);
    rep.body["samples_used"] = st.samples_used;
    rep.body["rank_trace"] = st.rank_trace;
    rep.body["vectors_tested"] = tested;
    rep.body["vectors_witnessed"] = witnessed;
    rep.body["vectors_inconclusive"] = inconclusive;
    rep.body["verdict"] = verdict_str(rep.verdict, "ALL_INFINITE");
    return rep;
}

CheckReport gap_check(int g, int ell, const CheckConfig& cfg, const CoverSession* session) {
    std::vector<SccWord> samples =
        sample_curves({g, 0}, TopType::nonseparating(), cfg.budget, cfg.seed);
    GapCertificate cert = integral_gap_certificate(g, ell, samples);

    CheckReport rep;
    rep.check = "gap";
    rep.verdict = cert.certified ? Verdict::True : Verdict::Inconclusive;
    Json j;
    j["schema"] = 1;
    j["check"] = "gap";
    j["g"] = g;
    j["ell"] = cert.ell;
    j["ell_hat"] = cert.ell_hat;
    j["config"] = config_json(cfg);
    j["samples_checked"] = cert.samples_checked;
    j["witness_word"] = cert.witness_word;
    j["witness_image"] = cert.witness_image;
    j["witness_central_order"] = cert.witness_central_order;

    if (session != nullptr) {
        const CoverSession& s = *session;
        Word witness = commutator(Word::of({gen_a(1)}), Word::of({gen_a(2)}));
        LiftClassResult wl = lift_class(s.cx, s.lat, witness, 0);
        if (wl.m != 1) throw std::logic_error("gap witness does not lift to a loop");
        bool nonzero = false;
        for (const Int& x : wl.cls) nonzero = nonzero || x != 0;
        IntLatticeAccumulator acc(s.lat.rank);
        for (const SccWord& c : samples) {
            LiftedTwistData d = lifted_twist_data(s.cx, s.lat, c);
            for (const auto& comp : d.components) acc.add(comp.cls);
        }
        bool member = member_Z(acc.lattice(), wl.cls);
        Json cc;
        cc["cover"] = s.describe();
        cc["witness_class_nonzero"] = nonzero;
        cc["sampled_integral_span_rank"] = static_cast<int>(acc.rank());
        cc["witness_in_sampled_span"] = member;
        j["cross_check"] = cc;
        if (!nonzero || member)
            throw std::logic_error("integral gap cross-check failed: witness landed in the span");
    }

    j["verdict"] = cert.certified ? "GAP_CERTIFIED" : "INCONCLUSIVE";
    rep.body = std::move(j);
    return rep;
}

CheckReport powerlemma_check(int n, int ell, int trials, std::uint64_t seed) {
    PowerLemmaReport pl = power_lemma_suite(n, ell, trials, seed);
    if (pl.failures != 0 || !pl.divisibility_ok)
        throw std::logic_error("power lemma property suite failed: nilpotent arithmetic bug");
    CheckReport rep;
    rep.check = "powerlemma";
    rep.verdict = Verdict::True;
    Json j;
    j["schema"] = 1;
    j["check"] = "powerlemma";
    j["n"] = pl.n;
    j["ell"] = pl.ell;
    j["ell_hat"] = pl.ell_hat;
    j["trials"] = pl.trials;
    j["seed"] = seed;
    j["failures"] = pl.failures;
    j["divisibility_ok"] = pl.divisibility_ok;
    j["verdict"] = "ALL_PASS";
    rep.body = std::move(j);
    return rep;
}

}  // namespace covhom
