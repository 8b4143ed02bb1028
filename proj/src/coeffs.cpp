#include "bmturan/coeffs.hpp"

#include <stdexcept>

#include "bmturan/parallel.hpp"

namespace bmturan {

const char* to_string(CoeffMethod method) {
    switch (method) {
    case CoeffMethod::DirectSum: return "direct";
    case CoeffMethod::DoubleSum: return "double_sum";
    case CoeffMethod::Recurrence: return "recurrence";
    }
    return "recurrence";
}

CoeffMethod coeff_method_from_string(const std::string& name) {
    if (name == "direct") {
        return CoeffMethod::DirectSum;
    }
    if (name == "double_sum") {
        return CoeffMethod::DoubleSum;
    }
    if (name == "recurrence") {
        return CoeffMethod::Recurrence;
    }
    throw std::invalid_argument("unknown coefficient method '" + name + "'");
}

BigInt binom(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binom: negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

namespace {

BigInt shifted(const BigInt& value, long bits) {
    BigInt out;
    mpz_mul_2exp(out.get_mpz_t(), value.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return out;
}

// 2^k C(2m-2k, m-k) C(m+k, k): the l-independent weight of the single sum.
BigInt single_sum_weight(long m, long k) {
    return shifted(binom(2 * m - 2 * k, m - k) * binom(m + k, k), k);
}

void check_index(long m, long l) {
    if (m < 0 || l < 0 || l > m) {
        throw std::out_of_range("coefficient index (m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ") out of range");
    }
}

}  // namespace

Rational d_direct(long m, long l) {
    check_index(m, l);
    BigInt sum = 0;
    for (long k = l; k <= m; ++k) {
        sum += single_sum_weight(m, k) * binom(k, l);
    }
    return Rational(sum, shifted(BigInt(1), 2 * m));
}

Row row_direct(long m) {
    if (m < 0) {
        throw std::out_of_range("row index must be nonnegative");
    }
    std::vector<BigInt> weights;
    weights.reserve(static_cast<std::size_t>(m + 1));
    for (long k = 0; k <= m; ++k) {
        weights.push_back(single_sum_weight(m, k));
    }
    const BigInt scale = shifted(BigInt(1), 2 * m);
    Row row;
    row.reserve(weights.size());
    for (long l = 0; l <= m; ++l) {
        BigInt sum = 0;
        for (long k = l; k <= m; ++k) {
            sum += weights[static_cast<std::size_t>(k)] * binom(k, l);
        }
        row.emplace_back(sum, scale);
    }
    return row;
}

Row row_double_sum(long m) {
    if (m < 0) {
        throw std::out_of_range("row index must be nonnegative");
    }
    // Everything is scaled by 2^{3m} so the work stays in integers:
    // P_m(x) = Σ_j (x+1)^j Q_j(x),  Q_j(x) = Σ_k c_jk (x-1)^k, both by Horner.
    auto coefficient = [m](long j, long k) {
        return shifted(binom(2 * m + 1, 2 * j) * binom(m - j, k) * binom(2 * k + 2 * j, k + j),
                       3 * (m - j - k));
    };
    auto times_linear = [](std::vector<BigInt>& poly, int root_sign) {
        // poly *= (x - root_sign); root_sign = +1 gives (x-1), -1 gives (x+1).
        poly.emplace_back(0);
        for (std::size_t i = poly.size() - 1; i > 0; --i) {
            if (root_sign > 0) {
                poly[i] = poly[i - 1] - poly[i];
            } else {
                poly[i] = poly[i - 1] + poly[i];
            }
        }
        if (root_sign > 0) {
            poly[0] = -poly[0];
        }
    };

    std::vector<BigInt> total;
    for (long j = m; j >= 0; --j) {
        std::vector<BigInt> inner{coefficient(j, m - j)};
        for (long k = m - j - 1; k >= 0; --k) {
            times_linear(inner, +1);
            inner[0] += coefficient(j, k);
        }
        if (!total.empty()) {
            times_linear(total, -1);
        }
        if (total.size() < inner.size()) {
            total.resize(inner.size());
        }
        for (std::size_t i = 0; i < inner.size(); ++i) {
            total[i] += inner[i];
        }
    }
    const BigInt scale = shifted(BigInt(1), 3 * m);
    Row row;
    row.reserve(total.size());
    for (const auto& c : total) {
        row.emplace_back(c, scale);
    }
    return row;
}

Rational corner_value(long m) {
    if (m < 0) {
        throw std::out_of_range("row index must be nonnegative");
    }
    return Rational(binom(2 * m, m), shifted(BigInt(1), m));
}

Row row_from_recurrence(std::span<const Rational> row_m, std::span<const Rational> row_m1, long m) {
    if (m < 0 || row_m.size() != static_cast<std::size_t>(m + 1) ||
        row_m1.size() != static_cast<std::size_t>(m + 2)) {
        throw std::invalid_argument("row_from_recurrence: expected rows of length " +
                                    std::to_string(m + 1) + " and " + std::to_string(m + 2) +
                                    ", got " + std::to_string(row_m.size()) + " and " +
                                    std::to_string(row_m1.size()));
    }
    Row next;
    next.reserve(static_cast<std::size_t>(m + 3));
    const Rational fixed_lower = Rational((4 * m + 3) * (4 * m + 5));
    for (long l = 0; l <= m + 1; ++l) {
        const Rational below = l <= m ? row_m[static_cast<std::size_t>(l)] : Rational(0);
        const Rational upper_factor(2 * (m + 1) * (8 * m * m + 24 * m - 4 * l * l + 19));
        const Rational lower_factor = fixed_lower * Rational(m + l + 1);
        const Rational leading(4 * (m + 1) * (m + 2) * (m + 2 - l));
        next.push_back((upper_factor * row_m1[static_cast<std::size_t>(l)] - lower_factor * below) /
                       leading);
    }
    next.push_back(corner_value(m + 2));
    return next;
}

BMTriangle::BMTriangle(std::vector<Row> rows, CoeffMethod method)
    : rows_(std::move(rows)), method_(method) {
    if (rows_.empty()) {
        throw std::invalid_argument("triangle needs at least row 0");
    }
    for (std::size_t m = 0; m < rows_.size(); ++m) {
        if (rows_[m].size() != m + 1) {
            throw std::invalid_argument("triangle row " + std::to_string(m) + " has " +
                                        std::to_string(rows_[m].size()) + " entries, expected " +
                                        std::to_string(m + 1));
        }
    }
}

BMTriangle BMTriangle::compute(long max_m, CoeffMethod method, unsigned jobs) {
    if (max_m < 0) {
        throw std::invalid_argument("max_m must be nonnegative");
    }
    std::vector<Row> rows(static_cast<std::size_t>(max_m + 1));
    switch (method) {
    case CoeffMethod::DirectSum:
        parallel_for(rows.size(), jobs,
                     [&](std::size_t m) { rows[m] = row_direct(static_cast<long>(m)); });
        break;
    case CoeffMethod::DoubleSum:
        // Larger rows first so the tail is not one thread finishing the biggest row.
        parallel_for(rows.size(), jobs, [&](std::size_t i) {
            const std::size_t m = rows.size() - 1 - i;
            rows[m] = row_double_sum(static_cast<long>(m));
        });
        break;
    case CoeffMethod::Recurrence:
        rows[0] = row_direct(0);
        if (max_m >= 1) {
            rows[1] = row_direct(1);
        }
        for (long m = 0; m + 2 <= max_m; ++m) {
            rows[static_cast<std::size_t>(m + 2)] = row_from_recurrence(
                rows[static_cast<std::size_t>(m)], rows[static_cast<std::size_t>(m + 1)], m);
        }
        break;
    }
    return {std::move(rows), method};
}

const Row& BMTriangle::row(long m) const {
    if (m < 0 || m > max_m()) {
        throw std::out_of_range("row " + std::to_string(m) + " not in triangle (max_m=" +
                                std::to_string(max_m()) + ")");
    }
    return rows_[static_cast<std::size_t>(m)];
}

const Rational& BMTriangle::at(long m, long l) const {
    const Row& r = row(m);
    if (l < 0 || l > m) {
        throw std::out_of_range("coefficient index (m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ") out of range");
    }
    return r[static_cast<std::size_t>(l)];
}

Rational BMTriangle::at_or_zero(long m, long l) const {
    if (l < 0 || l > m) {
        return 0;
    }
    return at(m, l);
}

BMTriangle BMTriangle::with_entry(long m, long l, Rational value) const {
    (void)at(m, l);
    BMTriangle copy = *this;
    copy.rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] = std::move(value);
    return copy;
}

Rational vertical_ratio(const BMTriangle& tri, long m, long l) {
    return tri.at(m + 1, l) / tri.at(m, l);
}

Rational turan_ratio(const BMTriangle& tri, long m, long l) {
    if (l < 1 || l > m - 1) {
        throw std::out_of_range("turan ratio needs 1 <= l <= m-1");
    }
    const Rational& mid = tri.at(m, l);
    return mid * mid / (tri.at(m, l - 1) * tri.at(m, l + 1));
}

CheckReport check_mixed_recurrences_at(const BMTriangle& tri, long m) {
    CheckReport report;
    report.check_id = "mixed_rec";
    report.m = m;
    report.params = "l=0.." + std::to_string(m + 1);
    for (long l = 0; l <= m + 1; ++l) {
        const Rational next = tri.at(m + 1, l);
        const Rational lower = tri.at_or_zero(m, l - 1);
        const Rational here = tri.at_or_zero(m, l);
        const Rational upper = tri.at_or_zero(m, l + 1);

        const Rational lhs1 = Rational(2 * (m + 1)) * next;
        const Rational rhs1 = Rational(2 * (m + l)) * lower + Rational(4 * m + 2 * l + 3) * here;
        if (lhs1 != rhs1) {
            report.fail({m, l, lhs1.str(), rhs1.str(), WitnessKind::Violation, "reclm1"});
        }
        const Rational lhs2 = Rational(2 * (m + 1) * (m + 1 - l)) * next;
        const Rational rhs2 = Rational((4 * m - 2 * l + 3) * (m + l + 1)) * here -
                              Rational(2 * l * (l + 1)) * upper;
        if (lhs2 != rhs2) {
            report.fail({m, l, lhs2.str(), rhs2.str(), WitnessKind::Violation, "reclm2"});
        }
        report.count += 2;
    }
    return report;
}

CheckReport check_mixed_recurrences(const BMTriangle& tri) {
    CheckReport merged;
    merged.check_id = "mixed_rec";
    merged.params = "m=0.." + std::to_string(tri.max_m() - 1);
    for (long m = 0; m < tri.max_m(); ++m) {
        CheckReport level = check_mixed_recurrences_at(tri, m);
        merged.count += level.count;
        for (auto& w : level.witnesses) {
            merged.fail(std::move(w));
        }
    }
    return merged;
}

CheckReport check_triangle_invariants(const BMTriangle& tri) {
    CheckReport report;
    report.check_id = "triangle_invariants";
    report.params = "m=0.." + std::to_string(tri.max_m());
    for (long m = 0; m <= tri.max_m(); ++m) {
        const Rational scale = pow2(2 * m);
        for (long l = 0; l <= m; ++l) {
            const Rational& value = tri.at(m, l);
            if (value.sign() <= 0) {
                report.fail({m, l, value.str(), "0/1", WitnessKind::Violation, "positivity"});
            }
            if (!(value * scale).is_integer()) {
                report.fail({m, l, (value * scale).str(), "integer", WitnessKind::Violation,
                             "integrality"});
            }
            report.count += 2;
        }
        const Rational corner = corner_value(m);
        if (tri.at(m, m) != corner) {
            report.fail({m, m, tri.at(m, m).str(), corner.str(), WitnessKind::Violation, "corner"});
        }
        ++report.count;
    }
    return report;
}

CheckReport compare_triangles(const BMTriangle& a, const BMTriangle& b) {
    CheckReport report;
    report.check_id = std::string("agree_") + to_string(a.method()) + "_" + to_string(b.method());
    const long common = std::min(a.max_m(), b.max_m());
    report.params = "m=0.." + std::to_string(common);
    for (long m = 0; m <= common; ++m) {
        for (long l = 0; l <= m; ++l) {
            if (a.at(m, l) != b.at(m, l)) {
                report.fail({m, l, a.at(m, l).str(), b.at(m, l).str()});
            }
            ++report.count;
        }
    }
    return report;
}

}  // namespace bmturan
