#include "bmturan/surd_ring.hpp"

namespace bmturan {

SurdRingElem& SurdRingElem::operator+=(const SurdRingElem& rhs) {
    c1 += rhs.c1;
    cU += rhs.cU;
    cV += rhs.cV;
    cUV += rhs.cUV;
    return *this;
}

SurdRingElem& SurdRingElem::operator-=(const SurdRingElem& rhs) {
    c1 -= rhs.c1;
    cU -= rhs.cU;
    cV -= rhs.cV;
    cUV -= rhs.cUV;
    return *this;
}

SurdRingElem SurdRing::multiply(const SurdRingElem& a, const SurdRingElem& b) const {
    // U² = u, V² = v, (UV)² = uv, U·UV = uV, V·UV = vU.
    const MultiPoly& u = u_square_;
    const MultiPoly& v = v_square_;
    SurdRingElem out;
    out.c1 = a.c1 * b.c1 + u * (a.cU * b.cU) + v * (a.cV * b.cV) + u * v * (a.cUV * b.cUV);
    out.cU = a.c1 * b.cU + a.cU * b.c1 + v * (a.cV * b.cUV + a.cUV * b.cV);
    out.cV = a.c1 * b.cV + a.cV * b.c1 + u * (a.cU * b.cUV + a.cUV * b.cU);
    out.cUV = a.c1 * b.cUV + a.cUV * b.c1 + a.cU * b.cV + a.cV * b.cU;
    return out;
}

SurdRingElem SurdRing::pow(const SurdRingElem& a, unsigned exponent) const {
    SurdRingElem result = SurdRingElem::scalar(1);
    SurdRingElem base = a;
    while (exponent != 0) {
        if (exponent & 1u) {
            result = multiply(result, base);
        }
        exponent >>= 1u;
        if (exponent != 0) {
            base = multiply(base, base);
        }
    }
    return result;
}

}  // namespace bmturan
