#pragma once

#include "bing/groups.hpp"
#include "bing/json_io.hpp"
#include "bing/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bing {

// Reference tags used in certificate steps.
namespace refs {
inline constexpr const char* prop_3_3 = "Prop 3.3";
inline constexpr const char* thm_3_4 = "Thm 3.4";
inline constexpr const char* cor_3_5 = "Cor 3.5";
inline constexpr const char* prop_3_7 = "Prop 3.7";
inline constexpr const char* cor_3_9 = "Cor 3.9";
inline constexpr const char* thm_4_3 = "Thm 4.3";
inline constexpr const char* lemma_4_2 = "Lemma 4.2";
inline constexpr const char* cor_4_4 = "Cor 4.4";
inline constexpr const char* lemma_4_5 = "Lemma 4.5";
inline constexpr const char* thm_4_6 = "Thm 4.6";
inline constexpr const char* thm_5_3 = "Thm 5.3";
inline constexpr const char* thm_2_2 = "Thm 2.2";
inline constexpr const char* lefschetz_s1 = "Lefschetz-§1";
}  // namespace refs

bool is_known_theorem_ref(const std::string& ref);

struct CertificateStep {
    std::string claim;
    std::string theorem_ref;
    json data;
};

struct Certificate {
    std::vector<CertificateStep> steps;
};

enum class Outcome {
    HasFPP_Lefschetz,
    NotBing_NoFPPUpToHomotopy,
    NotBing_S1Retract,
    Inconclusive,
};

std::string to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    Certificate certificate;
};

// Decision ladder for Bing-space candidacy of K_P with the declared group
// identity; first matching rule wins. Throws std::invalid_argument when an
// Abelian spec contradicts the abelianization of P.
Verdict analyze(const Presentation& p, const GroupSpec& spec);

struct MinimumEulerCheck {
    int chi = 0;
    std::optional<int> lower_bound;  // deficiency bound + 1, when known
    bool is_minimum_known = false;
};

MinimumEulerCheck minimum_euler_check(const Presentation& p, const GroupSpec& spec);

// Re-checks every machine-checkable claim embedded in a certificate
// (chain-map identities, retraction compositions, Lefschetz numbers,
// homotopy-type counts, Euler characteristics).
struct RevalidationReport {
    bool ok = true;
    std::vector<std::string> issues;
};

RevalidationReport revalidate(const Certificate& cert);

json verdict_to_json(const Verdict& v);

}  // namespace bing
