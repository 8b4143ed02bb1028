#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmturan/multipoly.hpp"
#include "bmturan/registry.hpp"
#include "bmturan/report.hpp"
#include "bmturan/surd_ring.hpp"

namespace bmturan {

/// Pass iff lhs − rhs vanishes identically. The note records term counts.
CheckReport identity_check(const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs);
/// Same, in a quotient ring (both sides already reduced).
CheckReport identity_check(const std::string& name, const SurdRingElem& lhs,
                           const SurdRingElem& rhs);

/// Names of the registered proof-step identities, in suite order.
std::vector<std::string> identity_names();

/// Runs the registered identities (all, or only those in `only`) against
/// `registry`, in parallel; results come back in suite order.
std::vector<CheckReport> verify_identity_suite(const Registry& registry = Registry::standard(),
                                               const std::vector<std::string>& only = {},
                                               unsigned jobs = 1);

/// Integer domains on which positivity is certified.
enum class PositivityDomain {
    EllBelowM,  ///< l ≥ 1, m ≥ l+1   (shift m → l+1+t, l → 1+s)
    NBelowM,    ///< n ≥ 1, m ≥ n+1   (shift m → n+1+t, n → 1+s)
};

const char* to_string(PositivityDomain domain);

enum class CertVerdict { AllCoeffsNonneg, Failed };

struct PositivityCertificate {
    std::string name;
    MultiPoly target;
    PositivityDomain domain = PositivityDomain::EllBelowM;
    std::string substitution;
    MultiPoly shifted;
    CertVerdict verdict = CertVerdict::Failed;
    /// Shifted variables at the strictness point (all zero) and the value there.
    std::map<std::string, Rational> witness_point;
    Rational witness_value;
    /// Most negative shifted coefficient, when the certificate fails.
    std::optional<std::pair<std::string, Rational>> negative_term;
    /// "shift-certificate", or the weaker "exhaustive(...)" fallback.
    std::string evidence;

    [[nodiscard]] bool passed() const;
};

/// Shift-to-orthant certificate: after the domain's substitution every
/// coefficient is ≥ 0 and the value at the origin is > 0.
PositivityCertificate certify_positive(const MultiPoly& p, PositivityDomain domain,
                                       std::string name = {});

struct ExhaustiveResult {
    bool positive = true;
    std::size_t points = 0;
    std::optional<std::pair<long, long>> counterexample;  ///< (x, m)
};

/// Evaluates p at every 1 ≤ x ≤ x_max, x+1 ≤ m ≤ m_max (x is l or n).
ExhaustiveResult exhaustive_positive(const MultiPoly& p, PositivityDomain domain, long x_max,
                                     long m_max);

struct PositivityTarget {
    std::string name;
    PositivityDomain domain;
};

/// C4, C5, C6, F, G, H, the R > 0 factorisation and the l = m residual.
const std::vector<PositivityTarget>& positivity_targets();

/// Certifies each target; a failed shift certificate falls back to
/// exhaustive evaluation and records the weaker evidence.
std::vector<PositivityCertificate> positivity_suite(const Registry& registry = Registry::standard(),
                                                    const std::vector<std::string>& only = {},
                                                    unsigned jobs = 1);

nlohmann::ordered_json to_json(const PositivityCertificate& cert);

/// {"identities": [...], "positivity": [...], "summary": {...}}
nlohmann::ordered_json certificate_document(const std::vector<CheckReport>& identities,
                                            const std::vector<PositivityCertificate>& positivity);

}  // namespace bmturan
