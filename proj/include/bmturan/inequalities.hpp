#pragma once

#include <span>
#include <string>

#include "bmturan/coeffs.hpp"
#include "bmturan/rational.hpp"
#include "bmturan/report.hpp"
#include "bmturan/surd.hpp"

namespace bmturan {

/// L(m,l) = (4m²+7m−2l²+3 + l·sqrt((4l⁴+8l²m+5l²+m)/(m+l²))) / (2(m+1)(m−l+1)),
/// the radical lower bound on d_l(m+1)/d_l(m). Requires m ≥ 1, 0 ≤ l ≤ m.
QuadraticSurd lower_bound_L(long m, long l);

/// (4m²+7m+l+3) / (2(m+1)(m−l+1)).
Rational kp_bound(long m, long l);

/// Bounds on the Turán ratio d_l(m)² / (d_{l-1}(m) d_{l+1}(m)).
enum class TuranBound { CgUpper, CgLower, NewLower, SharperLower };

const char* to_string(TuranBound which);
/// Valid for m ≥ 2, 1 ≤ l ≤ m−1.
Rational turan_bound(TuranBound which, long m, long l);

/// 4(b²−ac)(c²−bd) − (bc−ad)² for the window (a, b, c, d).
Rational hot_value(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Discriminant of Σ_{k=0}^{3} C(3,k) w_k x^k for the window w = (w0, w1, w2, w3).
Rational jensen_cubic_discriminant(const Rational& w0, const Rational& w1, const Rational& w2,
                                   const Rational& w3);

/// Strict log-concavity on interior indices of an arbitrary sequence.
CheckReport check_log_concavity(std::span<const Rational> seq, long m);
CheckReport check_log_concavity(const BMTriangle& tri, long m);

/// Strict higher-order Turán inequalities for 1 ≤ l ≤ m−2. Throws
/// std::domain_error for m < 3.
CheckReport check_hot(const BMTriangle& tri, long m);

/// d_l(m+1)/d_l(m) against L(m,l): strictly greater for 1 ≤ l ≤ m−1 and
/// exactly equal at l = 0 and l = m (recorded as equality witnesses).
CheckReport check_ratio_lower_L(const BMTriangle& tri, long m);

/// Rational lower bound on the vertical ratio: ≥ on 0 ≤ l ≤ m, or strict
/// on 1 ≤ l ≤ m−1.
CheckReport check_ratio_lower_KP(const BMTriangle& tri, long m, bool strict);

/// All four bounds are strict on 1 ≤ l ≤ m−1. The lower bounds also assert
/// their ordering (new_lower ≥ cg_lower, sharper_lower ≥ new_lower).
CheckReport check_turan_ratio_bounds(const BMTriangle& tri, long m, TuranBound which);

/// Log-concavity of l!·d_l(m), i.e. Turán ratio > (l+1)/l.
CheckReport check_factorial_log_concavity(const BMTriangle& tri, long m);

/// Positive discriminant (three distinct real roots) of every cubic Jensen
/// window of an arbitrary sequence.
CheckReport check_jensen_cubic(std::span<const Rational> seq, long m);
CheckReport check_jensen_cubic(const BMTriangle& tri, long m);

}  // namespace bmturan
