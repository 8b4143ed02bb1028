#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmturan/rational.hpp"

namespace bmturan {

/// Exponent vector aligned with a polynomial's variable list.
using Monomial = std::vector<unsigned>;

/// Multivariate polynomial with exact rational coefficients.
///
/// Variables are kept in a fixed canonical order (m, l, n, t, s, W, x, then
/// any other name alphabetically); arithmetic between polynomials over
/// different variable lists works over the union. No zero coefficient is
/// ever stored.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(const std::string& name);

    /// Parses an expression over single-letter variables: integers, + - *,
    /// ^ with a nonnegative integer exponent, parentheses, and implicit
    /// multiplication by juxtaposition ("16l^2m^2", "2(m+1)").
    /// Throws std::invalid_argument with the offending position.
    static MultiPoly parse(std::string_view text);

    [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool has_variable(const std::string& name) const;

    [[nodiscard]] unsigned degree(const std::string& name) const;
    [[nodiscard]] unsigned total_degree() const;

    /// Coefficient of the monomial given as name → exponent (absent names: 0).
    [[nodiscard]] Rational coefficient(const std::map<std::string, unsigned>& monomial) const;

    /// Exact evaluation; every variable must be bound. Throws std::invalid_argument.
    [[nodiscard]] Rational eval(const std::map<std::string, Rational>& point) const;

    /// Replaces `name` by `expr` and re-collects. Throws std::invalid_argument
    /// if `name` is not in the variable list.
    [[nodiscard]] MultiPoly subst(const std::string& name, const MultiPoly& expr) const;

    [[nodiscard]] MultiPoly pow(unsigned exponent) const;

    /// The smallest coefficient (in graded-lex display order, first on ties)
    /// if it is negative.
    [[nodiscard]] std::optional<std::pair<std::string, Rational>> first_negative_term() const;

    /// Graded lexicographic display, e.g. "4*m^2 - 2*l^2 + 7*m + 3".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] static std::string monomial_str(const std::vector<std::string>& vars,
                                                  const Monomial& mono);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator-(const MultiPoly& value);

    /// Equality as polynomials: unused variables in either list are ignored.
    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

private:
    [[nodiscard]] MultiPoly over(const std::vector<std::string>& vars) const;
    void drop_unused(const std::string& name);

    std::vector<std::string> vars_;
    std::map<Monomial, Rational> terms_;
};

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

/// Canonical merge of two variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace bmturan
