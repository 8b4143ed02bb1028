#include "bmturan/inequalities.hpp"

#include <stdexcept>
#include <string>

namespace bmturan {
namespace {

std::string range(const char* var, long lo, long hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Collects per-instance outcomes. The first instance is kept as a display
// sample when nothing else is recorded.
class Recorder {
public:
    Recorder(std::string id, long m, std::string params) {
        report_.check_id = std::move(id);
        report_.m = m;
        report_.params = std::move(params);
    }

    void record(long l, const std::string& lhs, const std::string& rhs, bool ok,
                std::string label = {}) {
        ++report_.count;
        Witness w{report_.m, l, lhs, rhs, WitnessKind::Violation, std::move(label)};
        if (!ok) {
            report_.fail(std::move(w));
        } else if (!sample_) {
            w.kind = WitnessKind::Sample;
            sample_ = std::move(w);
        }
    }

    void equality(long l, const std::string& lhs, const std::string& rhs, std::string label = {}) {
        ++report_.count;
        report_.witnesses.push_back(
            Witness{report_.m, l, lhs, rhs, WitnessKind::Equality, std::move(label)});
    }

    CheckReport finish() && {
        if (report_.witnesses.empty() && sample_) {
            report_.witnesses.push_back(std::move(*sample_));
        }
        if (report_.count == 0) {
            report_.note = "vacuous";
        }
        return std::move(report_);
    }

private:
    CheckReport report_;
    std::optional<Witness> sample_;
};

const Row& checked_row(const BMTriangle& tri, long m) {
    if (m < 0 || m > tri.max_m()) {
        throw std::out_of_range("row " + std::to_string(m) + " not in triangle");
    }
    return tri.row(m);
}

}  // namespace

QuadraticSurd lower_bound_L(long m, long l) {
    if (m < 1 || l < 0 || l > m) {
        throw std::out_of_range("L(m,l) needs m >= 1 and 0 <= l <= m");
    }
    const Rational mm(m);
    const Rational ll(l);
    const Rational den = 2 * (mm + 1) * (mm - ll + 1);
    const Rational l2 = ll * ll;
    return {(4 * mm * mm + 7 * mm - 2 * l2 + 3) / den, ll / den,
            (4 * l2 * l2 + 8 * l2 * mm + 5 * l2 + mm) / (mm + l2)};
}

Rational kp_bound(long m, long l) {
    const Rational mm(m);
    return (4 * mm * mm + 7 * mm + l + 3) / (2 * (mm + 1) * (mm - l + 1));
}

const char* to_string(TuranBound which) {
    switch (which) {
        case TuranBound::CgUpper: return "cg_upper";
        case TuranBound::CgLower: return "cg_lower";
        case TuranBound::NewLower: return "new_lower";
        case TuranBound::SharperLower: return "sharper_lower";
    }
    return "?";
}

Rational turan_bound(TuranBound which, long m, long l) {
    if (m < 2 || l < 1 || l > m - 1) {
        throw std::out_of_range("Turan ratio bounds need m >= 2 and 1 <= l <= m-1");
    }
    const Rational base = Rational((m - l + 1) * (l + 1)) / Rational((m - l) * l);
    const auto factor = [](long k) { return Rational(k) / Rational(k + 1); };
    switch (which) {
        case TuranBound::CgUpper: return base;
        case TuranBound::CgLower: return base * factor(m + l);
        case TuranBound::NewLower: return base * factor(m + l * l);
        case TuranBound::SharperLower: return base * factor(m + l + l * l);
    }
    throw std::invalid_argument("unknown Turan bound");
}

Rational hot_value(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const Rational cross = b * c - a * d;
    return 4 * (b * b - a * c) * (c * c - b * d) - cross * cross;
}

Rational jensen_cubic_discriminant(const Rational& w0, const Rational& w1, const Rational& w2,
                                   const Rational& w3) {
    // a x³ + b x² + c x + d
    const Rational& a = w3;
    const Rational b = 3 * w2;
    const Rational c = 3 * w1;
    const Rational& d = w0;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

CheckReport check_log_concavity(std::span<const Rational> seq, long m) {
    const long len = static_cast<long>(seq.size());
    Recorder rec("log_concavity", m, range("l", 1, len - 2));
    for (long l = 1; l + 1 < len; ++l) {
        const Rational lhs = seq[l] * seq[l];
        const Rational rhs = seq[l - 1] * seq[l + 1];
        rec.record(l, lhs.str(), rhs.str(), lhs > rhs);
    }
    return std::move(rec).finish();
}

CheckReport check_log_concavity(const BMTriangle& tri, long m) {
    return check_log_concavity(checked_row(tri, m), m);
}

CheckReport check_hot(const BMTriangle& tri, long m) {
    if (m < 3) {
        throw std::domain_error("higher-order Turan check needs m >= 3");
    }
    const Row& row = checked_row(tri, m);
    Recorder rec("hot", m, range("l", 1, m - 2));
    for (long l = 1; l <= m - 2; ++l) {
        const Rational v = hot_value(row[l - 1], row[l], row[l + 1], row[l + 2]);
        rec.record(l, v.str(), "0/1", v.sign() > 0);
    }
    return std::move(rec).finish();
}

CheckReport check_ratio_lower_L(const BMTriangle& tri, long m) {
    checked_row(tri, m + 1);
    Recorder rec("ratio_L", m, range("l", 0, m));
    for (long l = 0; l <= m; ++l) {
        const Rational ratio = vertical_ratio(tri, m, l);
        const QuadraticSurd bound = lower_bound_L(m, l);
        const auto cmp = surd_cmp(bound, ratio);
        if (l == 0 || l == m) {
            if (cmp == std::strong_ordering::equal) {
                rec.equality(l, ratio.str(), bound.str(), "endpoint");
            } else {
                rec.record(l, ratio.str(), bound.str(), false, "endpoint");
            }
        } else {
            rec.record(l, ratio.str(), bound.str(), cmp == std::strong_ordering::less);
        }
    }
    return std::move(rec).finish();
}

CheckReport check_ratio_lower_KP(const BMTriangle& tri, long m, bool strict) {
    checked_row(tri, m + 1);
    const long lo = strict ? 1 : 0;
    const long hi = strict ? m - 1 : m;
    Recorder rec(strict ? "kp_strict" : "kp", m, range("l", lo, hi));
    for (long l = lo; l <= hi; ++l) {
        const Rational ratio = vertical_ratio(tri, m, l);
        const Rational bound = kp_bound(m, l);
        if (!strict && ratio == bound) {
            rec.equality(l, ratio.str(), bound.str());
        } else {
            rec.record(l, ratio.str(), bound.str(), ratio > bound);
        }
    }
    return std::move(rec).finish();
}

CheckReport check_turan_ratio_bounds(const BMTriangle& tri, long m, TuranBound which) {
    checked_row(tri, m);
    Recorder rec(to_string(which), m, range("l", 1, m - 1));
    for (long l = 1; l <= m - 1; ++l) {
        const Rational ratio = turan_ratio(tri, m, l);
        const Rational bound = turan_bound(which, m, l);
        const bool ok = which == TuranBound::CgUpper ? ratio < bound : ratio > bound;
        rec.record(l, ratio.str(), bound.str(), ok);
        if (which == TuranBound::NewLower || which == TuranBound::SharperLower) {
            const TuranBound weaker =
                which == TuranBound::NewLower ? TuranBound::CgLower : TuranBound::NewLower;
            const Rational other = turan_bound(weaker, m, l);
            rec.record(l, bound.str(), other.str(), bound >= other,
                       std::string("ordering_vs_") + to_string(weaker));
        }
    }
    return std::move(rec).finish();
}

CheckReport check_factorial_log_concavity(const BMTriangle& tri, long m) {
    checked_row(tri, m);
    Recorder rec("factorial_lc", m, range("l", 1, m - 1));
    for (long l = 1; l <= m - 1; ++l) {
        const Rational ratio = turan_ratio(tri, m, l);
        const Rational bound(l + 1, l);
        rec.record(l, ratio.str(), bound.str(), ratio > bound);
    }
    return std::move(rec).finish();
}

CheckReport check_jensen_cubic(std::span<const Rational> seq, long m) {
    const long len = static_cast<long>(seq.size());
    Recorder rec("jensen", m, range("l", 1, len - 3));
    for (long l = 1; l + 2 < len; ++l) {
        const Rational disc = jensen_cubic_discriminant(seq[l - 1], seq[l], seq[l + 1], seq[l + 2]);
        rec.record(l, disc.str(), "0/1", disc.sign() > 0);
    }
    return std::move(rec).finish();
}

CheckReport check_jensen_cubic(const BMTriangle& tri, long m) {
    if (m < 3) {
        throw std::domain_error("cubic Jensen check needs m >= 3");
    }
    return check_jensen_cubic(checked_row(tri, m), m);
}

}  // namespace bmturan
