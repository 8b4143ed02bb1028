#include "bmturan/rational.hpp"

#include <ostream>

namespace bmturan {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string digits(part);
        std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
        if (digits.size() == start) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (digits[i] < '0' || digits[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
        }
        if (digits[0] == '+') {
            digits.erase(0, 1);
        }
        return BigInt(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const {
    Rational result;
    result.value_ = ::abs(value_);
    return result;
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

Rational Rational::reciprocal() const {
    return Rational(1) / *this;
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(unsigned digits) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scaled = abs().value_.get_num() * scale / value_.get_den();
    std::string body = scaled.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out = sign() < 0 ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += "." + body.substr(body.size() - digits);
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& value) {
    Rational result;
    result.value_ = -value.value_;
    return result;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

Rational pow2(long exponent) {
    BigInt power = 1;
    const unsigned long magnitude = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                                 : static_cast<unsigned long>(exponent);
    mpz_mul_2exp(power.get_mpz_t(), power.get_mpz_t(), magnitude);
    return exponent < 0 ? Rational(BigInt(1), power) : Rational(power);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace bmturan
