#include "bmturan/surd.hpp"

#include <stdexcept>

namespace bmturan {

QuadraticSurd::QuadraticSurd(Rational p, Rational q, Rational t)
    : p_(std::move(p)), q_(std::move(q)), t_(std::move(t)) {
    if (t_.sign() < 0) {
        throw std::domain_error("quadratic surd with negative radicand " + t_.str());
    }
}

std::string QuadraticSurd::str() const {
    return p_.str() + " + " + q_.str() + "*sqrt(" + t_.str() + ")";
}

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
    const auto plus = text.find(" + ");
    const auto star = text.find("*sqrt(");
    if (plus == std::string_view::npos || star == std::string_view::npos || star < plus ||
        text.empty() || text.back() != ')') {
        throw std::invalid_argument("malformed surd: '" + std::string(text) + "'");
    }
    const auto p = Rational::parse(text.substr(0, plus));
    const auto q = Rational::parse(text.substr(plus + 3, star - plus - 3));
    const auto t_begin = star + 6;
    const auto t = Rational::parse(text.substr(t_begin, text.size() - 1 - t_begin));
    return {p, q, t};
}

std::strong_ordering surd_cmp(const QuadraticSurd& s, const Rational& r) {
    const Rational delta = s.p() - r;
    const int sd = delta.sign();
    const int sq = s.q().sign();
    auto from_sign = [](int sign) {
        if (sign < 0) {
            return std::strong_ordering::less;
        }
        return sign > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    };
    if (sq == 0) {
        return from_sign(sd);
    }
    if (sd != 0 && sd == sq) {
        return from_sign(sd);
    }
    // Opposite signs, or delta = 0: the larger magnitude wins.
    const Rational rational_part = delta * delta;
    const Rational radical_part = s.q() * s.q() * s.t();
    const auto c = rational_part <=> radical_part;
    if (c == std::strong_ordering::equal) {
        return std::strong_ordering::equal;
    }
    return c == std::strong_ordering::greater ? from_sign(sd) : from_sign(sq);
}

std::optional<Rational> rational_sqrt(const Rational& t) {
    if (t.sign() < 0) {
        return std::nullopt;
    }
    const BigInt num = t.numerator();
    const BigInt den = t.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    BigInt num_root;
    BigInt den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    return Rational(num_root, den_root);
}

RationalInterval sqrt_bracket(const Rational& t, const Rational& width) {
    if (t.sign() < 0) {
        throw std::domain_error("square root of negative rational " + t.str());
    }
    if (width.sign() <= 0) {
        throw std::invalid_argument("bracket width must be positive");
    }
    if (auto exact = rational_sqrt(t)) {
        return {*exact, *exact};
    }
    Rational lo(0);
    Rational hi = t > Rational(1) ? t : Rational(1);
    const Rational half(BigInt(1), BigInt(2));
    while (hi - lo > width) {
        Rational mid = (lo + hi) * half;
        if (mid * mid <= t) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return {lo, hi};
}

RationalInterval surd_bracket(const QuadraticSurd& s, unsigned bits) {
    if (bits == 0) {
        throw std::invalid_argument("surd_bracket needs bits >= 1");
    }
    if (s.q().is_zero() || s.t().is_zero()) {
        return {s.p(), s.p()};
    }
    const Rational width = pow2(-static_cast<long>(bits)) / s.q().abs();
    const auto root = sqrt_bracket(s.t(), width);
    Rational a = s.p() + s.q() * root.lo;
    Rational b = s.p() + s.q() * root.hi;
    if (a > b) {
        std::swap(a, b);
    }
    return {a, b};
}

}  // namespace bmturan
