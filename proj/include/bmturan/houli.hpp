#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "bmturan/rational.hpp"
#include "bmturan/report.hpp"

namespace bmturan {

/// d(x,y) = 4(1−x)(1−y) − (1−xy)².
Rational houli_d(const Rational& x, const Rational& y);

/// Sandwich bounds g(n) < a_{n−1}a_{n+1}/a_n² < h(n), evaluated on
/// first ≤ n ≤ last.
struct BoundFns {
    std::function<Rational(long)> g;
    std::function<Rational(long)> h;
    long first = 1;
    long last = 0;
    std::string name;
};

/// g(n) = (m−n)n / ((m−n+1)(n+1)), h(n) = g(n)·(m+n²+1)/(m+n²), on 1 ≤ n ≤ m−1.
/// Requires m ≥ 2.
BoundFns make_bm_bounds(long m);

/// Inclusive index range [first, last].
using IndexRange = std::pair<long, long>;

struct HouLiOutcome {
    CheckReport report;
    /// Indices n at which HOT (window a_{n−1}..a_{n+2}) follows, on a full pass.
    /// `extended` starts at N (sequence from N−1); `literature` starts at N+1.
    std::optional<IndexRange> extended;
    std::optional<IndexRange> literature;
};

/// Checks condition (i) on N ≤ n ≤ n_hi and the four corner conditions
/// d(·(n), ·(n+1)) > 0 on N ≤ n ≤ n_hi−1, where n_hi = min(len−2, bounds.last).
/// Throws std::invalid_argument if seq has a nonpositive entry or N < 1.
HouLiOutcome houli_verify(std::span<const Rational> seq, const BoundFns& bounds, long N,
                          std::optional<long> m = std::nullopt);

}  // namespace bmturan
