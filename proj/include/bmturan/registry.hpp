#pragma once

#include <map>
#include <string>
#include <vector>

#include "bmturan/multipoly.hpp"
#include "bmturan/surd_ring.hpp"

namespace bmturan {

/// Named polynomials behind the certificates, held as source text and parsed on
/// demand. Variables: m, l (for ℓ), n.
class Registry {
public:
    /// The standard transcription.
    Registry();

    [[nodiscard]] static const Registry& standard();

    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] bool contains(const std::string& name) const;
    /// Throws std::invalid_argument for unknown names.
    [[nodiscard]] const std::string& source(const std::string& name) const;
    [[nodiscard]] MultiPoly get(const std::string& name) const;

    /// Copy with one entry's source replaced (fault injection fixture).
    [[nodiscard]] Registry with_override(const std::string& name, std::string expression) const;

    /// Q[m, l][U, V] with U² = Usq, V² = Vsq.
    [[nodiscard]] SurdRing lemma_ring() const;

private:
    std::map<std::string, std::string> sources_;
};

/// Registry lookup by name (uses the standard registry).
MultiPoly build_named(const std::string& name);

}  // namespace bmturan
