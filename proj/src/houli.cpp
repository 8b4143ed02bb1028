#include "bmturan/houli.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmturan {

Rational houli_d(const Rational& x, const Rational& y) {
    const Rational one_minus_xy = 1 - x * y;
    return 4 * (1 - x) * (1 - y) - one_minus_xy * one_minus_xy;
}

BoundFns make_bm_bounds(long m) {
    if (m < 2) {
        throw std::domain_error("Boros-Moll bounds need m >= 2");
    }
    BoundFns b;
    b.g = [m](long n) { return Rational((m - n) * n) / Rational((m - n + 1) * (n + 1)); };
    b.h = [m](long n) {
        return Rational((m - n) * n) / Rational((m - n + 1) * (n + 1)) *
               Rational(m + n * n + 1, m + n * n);
    };
    b.first = 1;
    b.last = m - 1;
    b.name = "bm(m=" + std::to_string(m) + ")";
    return b;
}

HouLiOutcome houli_verify(std::span<const Rational> seq, const BoundFns& bounds, long N,
                          std::optional<long> m) {
    if (N < 1) {
        throw std::invalid_argument("Hou-Li start index must be >= 1");
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].sign() <= 0) {
            throw std::invalid_argument("sequence entry " + std::to_string(i) +
                                        " is not positive");
        }
    }
    const long len = static_cast<long>(seq.size());
    const long n_hi = std::min(len - 2, bounds.last);
    if (N < bounds.first) {
        throw std::invalid_argument("start index below the bounds' valid range");
    }

    HouLiOutcome out;
    CheckReport& rep = out.report;
    rep.check_id = "houli";
    rep.m = m;
    rep.params = "n=" + std::to_string(N) + ".." + std::to_string(n_hi);

    std::optional<Witness> sample;
    const auto record = [&](long n, const Rational& lhs, const Rational& rhs, bool ok,
                            const char* label) {
        ++rep.count;
        Witness w{m, n, lhs.str(), rhs.str(), WitnessKind::Violation, label};
        if (!ok) {
            rep.fail(std::move(w));
        } else if (!sample) {
            w.kind = WitnessKind::Sample;
            sample = std::move(w);
        }
    };

    for (long n = N; n <= n_hi; ++n) {
        const Rational x = seq[n - 1] * seq[n + 1] / (seq[n] * seq[n]);
        const Rational g = bounds.g(n);
        const Rational h = bounds.h(n);
        record(n, g, x, g < x, "cond_i_lower");
        record(n, x, h, x < h, "cond_i_upper");
    }
    for (long n = N; n + 1 <= n_hi; ++n) {
        const Rational g0 = bounds.g(n);
        const Rational h0 = bounds.h(n);
        const Rational g1 = bounds.g(n + 1);
        const Rational h1 = bounds.h(n + 1);
        const Rational zero;
        record(n, houli_d(g0, g1), zero, houli_d(g0, g1).sign() > 0, "d(g,g)");
        record(n, houli_d(g0, h1), zero, houli_d(g0, h1).sign() > 0, "d(g,h)");
        record(n, houli_d(h0, g1), zero, houli_d(h0, g1).sign() > 0, "d(h,g)");
        record(n, houli_d(h0, h1), zero, houli_d(h0, h1).sign() > 0, "d(h,h)");
    }
    if (rep.witnesses.empty() && sample) {
        rep.witnesses.push_back(std::move(*sample));
    }

    if (rep.passed()) {
        const long hot_hi = n_hi - 1;
        std::string note;
        if (hot_hi >= N) {
            out.extended = IndexRange{N, hot_hi};
            note = "HOT on n=" + std::to_string(N) + ".." + std::to_string(hot_hi) +
                   " (sequence from index N-1, extended form)";
        } else {
            note = "no HOT window in range";
        }
        if (hot_hi >= N + 1) {
            out.literature = IndexRange{N + 1, hot_hi};
            note += "; literature form n=" + std::to_string(N + 1) + ".." + std::to_string(hot_hi);
        }
        rep.note = note;
    }
    if (rep.count == 0) {
        rep.note = "vacuous";
    }
    return out;
}

}  // namespace bmturan
