#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bmturan {

enum class Verdict { Pass, Fail };

enum class WitnessKind {
    Violation,  ///< the checked relation does not hold here
    Equality,   ///< an expected equality case (e.g. the endpoints of a ratio bound)
    Sample,     ///< a representative passing instance, for display
};

/// One checked instance. lhs/rhs are exact wire strings: "num/den" for
/// rationals, "p + q*sqrt(t)" for surd-valued bounds.
struct Witness {
    std::optional<long> m;
    std::optional<long> l;
    std::string lhs;
    std::string rhs;
    WitnessKind kind = WitnessKind::Violation;
    std::string label;  ///< which relation, when a check covers several
};

struct CheckReport {
    std::string check_id;
    std::optional<long> m;     ///< absent for symbolic checks
    std::string params;        ///< human-readable range descriptor
    Verdict verdict = Verdict::Pass;
    std::vector<Witness> witnesses;
    std::size_t count = 0;
    std::string note;

    [[nodiscard]] bool passed() const { return verdict == Verdict::Pass; }

    void fail(Witness witness) {
        verdict = Verdict::Fail;
        witness.kind = WitnessKind::Violation;
        witnesses.push_back(std::move(witness));
    }
};

const char* to_string(Verdict verdict);
const char* to_string(WitnessKind kind);

/// One JSON-lines record:
/// {"check","m","l","verdict","lhs","rhs","note","count","params","witnesses"}.
/// The top-level l/lhs/rhs show the first violation, else the first equality
/// witness, else the sample instance, else null.
nlohmann::json to_json(const CheckReport& report);

/// Inverse of to_json; throws std::invalid_argument on schema mismatch.
CheckReport report_from_json(const nlohmann::json& record);

}  // namespace bmturan
