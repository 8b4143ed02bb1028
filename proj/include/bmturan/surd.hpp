#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "bmturan/rational.hpp"

namespace bmturan {

/// The real number p + q·√t with rational p, q and rational radicand t ≥ 0.
///
/// Construction with t < 0 throws std::domain_error. No normalisation is
/// applied when t is a rational square; comparison does not depend on it.
class QuadraticSurd {
public:
    QuadraticSurd(Rational p, Rational q, Rational t);
    static QuadraticSurd rational(Rational value) { return {std::move(value), 0, 0}; }

    [[nodiscard]] const Rational& p() const { return p_; }
    [[nodiscard]] const Rational& q() const { return q_; }
    [[nodiscard]] const Rational& t() const { return t_; }

    /// Exact wire form "p + q*sqrt(t)" with every component as "num/den".
    [[nodiscard]] std::string str() const;
    /// Inverse of str(); throws std::invalid_argument on malformed input.
    static QuadraticSurd parse(std::string_view text);

private:
    Rational p_;
    Rational q_;
    Rational t_;
};

/// Exact trichotomy of value(s) against r, decided by sign-aware squaring.
std::strong_ordering surd_cmp(const QuadraticSurd& s, const Rational& r);

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Rational square root of t when t is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& t);

/// Rational interval [lo, hi] ∋ √t with hi − lo ≤ width, by bisection.
RationalInterval sqrt_bracket(const Rational& t, const Rational& width);

/// lo ≤ value(s) ≤ hi with hi − lo ≤ 2^-bits. Display only; never feeds a verdict.
RationalInterval surd_bracket(const QuadraticSurd& s, unsigned bits);

}  // namespace bmturan
