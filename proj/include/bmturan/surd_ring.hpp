#pragma once

#include <map>
#include <string>

#include "bmturan/multipoly.hpp"

namespace bmturan {

/// c1 + cU·U + cV·V + cUV·U·V with polynomial coefficients.
struct SurdRingElem {
    MultiPoly c1;
    MultiPoly cU;
    MultiPoly cV;
    MultiPoly cUV;

    static SurdRingElem scalar(MultiPoly value) { return {std::move(value), {}, {}, {}}; }
    static SurdRingElem u() { return {{}, 1, {}, {}}; }
    static SurdRingElem v() { return {{}, {}, 1, {}}; }

    [[nodiscard]] bool is_zero() const {
        return c1.is_zero() && cU.is_zero() && cV.is_zero() && cUV.is_zero();
    }
    [[nodiscard]] std::size_t term_count() const {
        return c1.term_count() + cU.term_count() + cV.term_count() + cUV.term_count();
    }

    SurdRingElem& operator+=(const SurdRingElem& rhs);
    SurdRingElem& operator-=(const SurdRingElem& rhs);
    friend SurdRingElem operator+(SurdRingElem a, const SurdRingElem& b) { return a += b; }
    friend SurdRingElem operator-(SurdRingElem a, const SurdRingElem& b) { return a -= b; }
    friend SurdRingElem operator-(const SurdRingElem& a) { return {-a.c1, -a.cU, -a.cV, -a.cUV}; }
    /// Scaling by a polynomial needs no reduction.
    friend SurdRingElem operator*(const MultiPoly& k, const SurdRingElem& a) {
        return {k * a.c1, k * a.cU, k * a.cV, k * a.cUV};
    }
};

/// The quotient ring Q[vars][U, V] / (U² − u, V² − v).
class SurdRing {
public:
    SurdRing(MultiPoly u_square, MultiPoly v_square)
        : u_square_(std::move(u_square)), v_square_(std::move(v_square)) {}

    [[nodiscard]] const MultiPoly& u_square() const { return u_square_; }
    [[nodiscard]] const MultiPoly& v_square() const { return v_square_; }

    [[nodiscard]] SurdRingElem multiply(const SurdRingElem& a, const SurdRingElem& b) const;
    [[nodiscard]] SurdRingElem pow(const SurdRingElem& a, unsigned exponent) const;

    /// a == b in the quotient ring (both are already reduced forms).
    [[nodiscard]] static bool equal(const SurdRingElem& a, const SurdRingElem& b) {
        return (a - b).is_zero();
    }

private:
    MultiPoly u_square_;
    MultiPoly v_square_;
};

}  // namespace bmturan
