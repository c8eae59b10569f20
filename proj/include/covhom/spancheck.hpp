// Orchestrated verifications on a built cover: rational fullness of the
// span of lifted simple-closed-curve classes, symplecticity of that span,
// the fixed-space / orthogonal-complement identity for lifted twists, pants
// spanning, orbit witnesses, and the nilpotent integral-gap certificate.
//
// Verdicts are three-valued.  TRUE and INCONCLUSIVE are normal outcomes
// (INCONCLUSIVE means the sample saturated below the target, never a
// refutation); statements the theory guarantees cannot come out FALSE, so an
// exact contradiction throws std::logic_error and points at a bug.
#pragma once

#include "covhom/covering.hpp"
#include "covhom/curves.hpp"
#include "covhom/nilcert.hpp"
#include "covhom/symplin.hpp"
#include "covhom/twistlift.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covhom {

using Json = nlohmann::ordered_json;

struct CheckConfig {
    int budget = 400;   // sampled curves
    int window = 50;    // stop after this many consecutive non-increasing samples
    int walk_len = 8;
    std::uint64_t seed = 1;
};

enum class Verdict { True, Inconclusive };

std::string verdict_str(Verdict v, const char* true_name);

// One bundle per cover, reused across checks.
struct CoverSession {
    CoverComplex cx;
    H1Lattice lat;

    static CoverSession build(PermutationRep rep);
    Json describe() const;  // id, degree, chi, genus, rank, |det gram|, RH check
};

struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Inconclusive;
    Json body;  // full report, schema 1

    std::string to_string() const { return body.dump(2) + "\n"; }
    int exit_code() const { return verdict == Verdict::True ? 0 : 2; }
};

CheckReport rational_fullness(const CoverSession& s, const std::vector<TopType>& sigma,
                              const CheckConfig& cfg);

CheckReport symplectic_check(const CoverSession& s, const std::vector<TopType>& sigma,
                             const CheckConfig& cfg);

CheckReport lemma_twistfixed_check(const CoverSession& s, const std::vector<TopType>& sigma,
                                   const CheckConfig& cfg);

CheckReport pants_span_check(const CoverSession& s, const PantsData& pants, const CheckConfig& cfg);

CheckReport orbit_check(const CoverSession& s, const std::vector<TopType>& sigma,
                        const CheckConfig& cfg, int num_vectors);

// Gap certificate; when `session` is non-null it must be the mod-ell cover of
// the same (g, ell) and the witness class is cross-checked against the
// sampled integral span there.
CheckReport gap_check(int g, int ell, const CheckConfig& cfg, const CoverSession* session);

CheckReport powerlemma_check(int n, int ell, int trials, std::uint64_t seed);

}  // namespace covhom
