#pragma once

#include <span>
#include <string>
#include <vector>

#include "bmturan/rational.hpp"
#include "bmturan/report.hpp"

namespace bmturan {

/// How a triangle's rows were produced.
enum class CoeffMethod { DirectSum, DoubleSum, Recurrence };

const char* to_string(CoeffMethod method);
CoeffMethod coeff_method_from_string(const std::string& name);

using Row = std::vector<Rational>;

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binom(long n, long k);

/// d_l(m) from the single sum 2^{-2m} Σ_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, k) C(k, l).
/// Throws std::out_of_range unless 0 ≤ l ≤ m.
Rational d_direct(long m, long l);

/// Full row m of the single sum.
Row row_direct(long m);

/// Row m by expanding the double-sum form of P_m(x) in powers of x.
Row row_double_sum(long m);

/// d_m(m) = 2^{-m} C(2m, m).
Rational corner_value(long m);

/// Row m+2 from rows m and m+1 via the three-term recurrence in m; the last
/// entry, where the recurrence's leading factor vanishes, is corner_value(m+2).
/// Throws std::invalid_argument on a length mismatch.
Row row_from_recurrence(std::span<const Rational> row_m, std::span<const Rational> row_m1, long m);

/// Rows 0..max_m of the coefficients d_l(m). Immutable once built.
class BMTriangle {
public:
    /// Takes ownership of precomputed rows; row m must have m+1 entries.
    BMTriangle(std::vector<Row> rows, CoeffMethod method);

    static BMTriangle compute(long max_m, CoeffMethod method = CoeffMethod::Recurrence,
                              unsigned jobs = 1);

    [[nodiscard]] long max_m() const { return static_cast<long>(rows_.size()) - 1; }
    [[nodiscard]] CoeffMethod method() const { return method_; }
    [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }
    [[nodiscard]] const Row& row(long m) const;

    /// Throws std::out_of_range outside 0 ≤ l ≤ m ≤ max_m.
    [[nodiscard]] const Rational& at(long m, long l) const;
    /// Boundary convention: zero for l < 0 or l > m.
    [[nodiscard]] Rational at_or_zero(long m, long l) const;

    /// Copy with one entry replaced (fault injection).
    [[nodiscard]] BMTriangle with_entry(long m, long l, Rational value) const;

    friend bool operator==(const BMTriangle& a, const BMTriangle& b) { return a.rows_ == b.rows_; }

private:
    std::vector<Row> rows_;
    CoeffMethod method_;
};

/// d_l(m+1) / d_l(m).
Rational vertical_ratio(const BMTriangle& tri, long m, long l);
/// d_l(m)^2 / (d_{l-1}(m) d_{l+1}(m)) for 1 ≤ l ≤ m-1.
Rational turan_ratio(const BMTriangle& tri, long m, long l);

/// Both mixed recurrences (in l and m jointly) for level m → m+1, l = 0..m+1.
CheckReport check_mixed_recurrences_at(const BMTriangle& tri, long m);
/// The same over every m < max_m, merged into one report.
CheckReport check_mixed_recurrences(const BMTriangle& tri);

/// Positivity, 2^{2m}-integrality and the corner closed form on every row.
CheckReport check_triangle_invariants(const BMTriangle& tri);

/// Entry-by-entry exact agreement on the common rows.
CheckReport compare_triangles(const BMTriangle& a, const BMTriangle& b);

}  // namespace bmturan
