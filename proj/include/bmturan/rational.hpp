#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bmturan {

using BigInt = mpz_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& integer) : value_(integer) {}
    Rational(const BigInt& numerator, const BigInt& denominator);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "a/b" or "a" (decimal integers, optional leading sign).
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational pow(unsigned exponent) const;
    [[nodiscard]] Rational reciprocal() const;

    /// Always "num/den", even for integers ("3/1"); the report wire format.
    [[nodiscard]] std::string str() const;
    /// Display-only decimal rendering with `digits` fractional digits (truncated).
    [[nodiscard]] std::string decimal(unsigned digits) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    mpq_class value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations; throws DivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// 2^exponent for possibly negative exponents.
Rational pow2(long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace bmturan
