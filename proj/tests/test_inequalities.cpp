#include <doctest.h>

#include <random>

#include "bmturan/houli.hpp"
#include "bmturan/inequalities.hpp"
#include "bmturan/registry.hpp"
#include "bmturan/sweep.hpp"

using namespace bmturan;

namespace {

const BMTriangle& tri() {
    static const BMTriangle t = BMTriangle::compute(121);
    return t;
}

bool has_violation_at(const CheckReport& r, long l) {
    for (const auto& w : r.witnesses) {
        if (w.kind == WitnessKind::Violation && w.l == l) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("log-concavity") {
    const CheckReport r2 = check_log_concavity(tri(), 2);
    CHECK(r2.passed());
    CHECK(r2.count == 1);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0].kind == WitnessKind::Sample);
    CHECK(r2.witnesses[0].lhs == "225/16");
    CHECK(r2.witnesses[0].rhs == "63/16");
    const CheckReport r1 = check_log_concavity(tri(), 1);
    CHECK(r1.passed());
    CHECK(r1.count == 0);
    const BMTriangle bad = tri().with_entry(6, 3, Rational(1, 100));
    const CheckReport f = check_log_concavity(bad, 6);
    CHECK_FALSE(f.passed());
    CHECK(has_violation_at(f, 3));
}

TEST_CASE("higher-order Turan") {
    const CheckReport r3 = check_hot(tri(), 3);
    CHECK(r3.passed());
    CHECK(r3.count == 1);
    CHECK(r3.witnesses[0].lhs == "8058555/1024");
    CHECK(hot_value(Rational(77, 16), Rational(43, 4), Rational(35, 4), Rational(5, 2)) ==
          Rational(8058555, 1024));
    CHECK_THROWS_AS(check_hot(tri(), 2), std::domain_error);
    for (long m = 3; m <= 120; ++m) {
        CHECK(check_hot(tri(), m).count == static_cast<std::size_t>(m - 2));
    }
}

TEST_CASE("radical lower bound L") {
    const QuadraticSurd l21 = lower_bound_L(2, 1);
    CHECK(surd_cmp(l21, Rational(17, 6)) == std::strong_ordering::equal);
    CHECK(surd_cmp(l21, Rational(43, 15)) == std::strong_ordering::less);
    CHECK(surd_cmp(lower_bound_L(2, 0), Rational(11, 6)) == std::strong_ordering::equal);
    CHECK(surd_cmp(lower_bound_L(2, 2), Rational(35, 6)) == std::strong_ordering::equal);
    CHECK_THROWS(lower_bound_L(2, 3));

    const CheckReport r = check_ratio_lower_L(tri(), 2);
    CHECK(r.passed());
    CHECK(r.count == 3);
    std::size_t equalities = 0;
    for (const auto& w : r.witnesses) {
        equalities += w.kind == WitnessKind::Equality ? 1 : 0;
    }
    CHECK(equalities == 2);
}

TEST_CASE("L matches the registry's polynomial transcription") {
    const Registry& reg = Registry::standard();
    for (long m = 1; m <= 12; ++m) {
        for (long l = 0; l <= m; ++l) {
            const std::map<std::string, Rational> pt{{"m", m}, {"l", l}};
            const QuadraticSurd s = lower_bound_L(m, l);
            const Rational den = reg.get("L_den").eval(pt);
            CHECK(s.p() == reg.get("L_num_rat").eval(pt) / den);
            CHECK(s.q() == reg.get("L_num_surd").eval(pt) / den);
            CHECK(s.t() == reg.get("L_rad_num").eval(pt) / reg.get("L_rad_den").eval(pt));
        }
    }
}

TEST_CASE("KP bound") {
    CHECK(kp_bound(2, 1) == Rational(17, 6));
    CHECK(kp_bound(2, 0) == Rational(11, 6));
    CHECK(kp_bound(2, 2) == Rational(35, 6));
    const CheckReport loose = check_ratio_lower_KP(tri(), 2, false);
    CHECK(loose.passed());
    CHECK(loose.count == 3);
    const CheckReport strict = check_ratio_lower_KP(tri(), 2, true);
    CHECK(strict.passed());
    CHECK(strict.count == 1);
    CHECK(strict.check_id == "kp_strict");
}

TEST_CASE("L dominates KP and both sit below the vertical ratio") {
    for (long m = 2; m <= 60; ++m) {
        for (long l = 1; l <= m - 1; ++l) {
            const QuadraticSurd s = lower_bound_L(m, l);
            CHECK(surd_cmp(s, kp_bound(m, l)) != std::strong_ordering::less);
            CHECK(surd_cmp(s, vertical_ratio(tri(), m, l)) == std::strong_ordering::less);
        }
    }
}

TEST_CASE("Turan ratio bounds at m = 2") {
    CHECK(turan_bound(TuranBound::CgUpper, 2, 1) == Rational(4));
    CHECK(turan_bound(TuranBound::NewLower, 2, 1) == Rational(3));
    CHECK(turan_bound(TuranBound::SharperLower, 2, 1) == Rational(16, 5));
    for (auto which : {TuranBound::CgUpper, TuranBound::CgLower, TuranBound::NewLower,
                       TuranBound::SharperLower}) {
        const CheckReport r = check_turan_ratio_bounds(tri(), 2, which);
        CHECK(r.passed());
        CHECK(r.check_id == to_string(which));
    }
    CHECK_THROWS(turan_bound(TuranBound::CgLower, 2, 2));
}

TEST_CASE("bound ordering is non-strict at l = 1 and strict above") {
    for (long m = 2; m <= 80; ++m) {
        CHECK(turan_bound(TuranBound::NewLower, m, 1) == turan_bound(TuranBound::CgLower, m, 1));
        for (long l = 2; l <= m - 1; ++l) {
            CHECK(turan_bound(TuranBound::CgLower, m, l) < turan_bound(TuranBound::NewLower, m, l));
        }
        for (long l = 1; l <= m - 1; ++l) {
            CHECK(turan_bound(TuranBound::NewLower, m, l) < turan_bound(TuranBound::SharperLower, m, l));
            const Rational r = turan_ratio(tri(), m, l);
            CHECK(turan_bound(TuranBound::SharperLower, m, l) < r);
            CHECK(r < turan_bound(TuranBound::CgUpper, m, l));
        }
    }
}

TEST_CASE("factorial log-concavity") {
    CHECK(check_factorial_log_concavity(tri(), 2).passed());
    const CheckReport r3 = check_factorial_log_concavity(tri(), 3);
    CHECK(r3.passed());
    CHECK(r3.count == 2);
    const BMTriangle bad = tri().with_entry(5, 2, tri().at(5, 2) / 2);
    CHECK_FALSE(check_factorial_log_concavity(bad, 5).passed());
}

TEST_CASE("cubic Jensen discriminant") {
    const Rational disc = jensen_cubic_discriminant(Rational(77, 16), Rational(43, 4),
                                                    Rational(35, 4), Rational(5, 2));
    CHECK(disc == Rational(217580985, 1024));
    CHECK(check_jensen_cubic(tri(), 3).passed());
    const std::vector<Rational> flat(4, Rational(1));
    CHECK(jensen_cubic_discriminant(1, 1, 1, 1) == Rational(0));
    const CheckReport r = check_jensen_cubic(flat, 0);
    CHECK_FALSE(r.passed());
    CHECK(has_violation_at(r, 1));
}

TEST_CASE("discriminant is 27 times the HOT expression") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> v(1, 500);
    for (int i = 0; i < 200; ++i) {
        const Rational a(v(rng), v(rng)), b(v(rng), v(rng)), c(v(rng), v(rng)), d(v(rng), v(rng));
        CHECK(jensen_cubic_discriminant(a, b, c, d) == 27 * hot_value(a, b, c, d));
    }
    for (long m = 3; m <= 40; ++m) {
        const Row& row = tri().row(m);
        for (long l = 1; l <= m - 2; ++l) {
            CHECK(jensen_cubic_discriminant(row[l - 1], row[l], row[l + 1], row[l + 2]) ==
                  27 * hot_value(row[l - 1], row[l], row[l + 1], row[l + 2]));
        }
    }
}

TEST_CASE("houli_d") {
    CHECK(houli_d(0, 0) == Rational(3));
    CHECK(houli_d(1, 1) == Rational(0));
    CHECK(houli_d(Rational(1, 4), Rational(1, 4)) == Rational(351, 256));
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> v(-40, 40);
    for (int i = 0; i < 200; ++i) {
        const Rational x(v(rng), 1 + std::abs(v(rng)));
        const Rational y(v(rng), 1 + std::abs(v(rng)));
        CHECK(houli_d(x, y) == houli_d(y, x));
    }
}

TEST_CASE("Boros-Moll bound functions") {
    const BoundFns b2 = make_bm_bounds(2);
    CHECK(b2.g(1) == Rational(1, 4));
    CHECK(b2.h(1) == Rational(1, 3));
    CHECK(b2.g(1) < Rational(7, 25));
    CHECK(Rational(7, 25) < b2.h(1));
    const BoundFns b3 = make_bm_bounds(3);
    CHECK(b3.g(2) == Rational(1, 3));
    CHECK(b3.h(2) == Rational(8, 21));
    CHECK_THROWS(make_bm_bounds(1));
    for (long m = 2; m <= 50; ++m) {
        const BoundFns b = make_bm_bounds(m);
        for (long n = b.first; n <= b.last; ++n) {
            CHECK(Rational(0) < b.g(n));
            CHECK(b.g(n) < b.h(n));
        }
    }
}

TEST_CASE("Hou-Li engine on Boros-Moll rows agrees with direct HOT") {
    for (long m = 2; m <= 120; ++m) {
        const HouLiOutcome out = houli_verify(tri().row(m), make_bm_bounds(m), 1, m);
        INFO("m=" << m);
        CHECK(out.report.passed());
        if (m >= 3) {
            REQUIRE(out.extended.has_value());
            CHECK(out.extended->first == 1);
            CHECK(out.extended->second == m - 2);
            CHECK(check_hot(tri(), m).passed());
        } else {
            CHECK_FALSE(out.extended.has_value());
        }
        if (m >= 4) {
            REQUIRE(out.literature.has_value());
            CHECK(out.literature->first == 2);
        }
    }
}

TEST_CASE("Hou-Li engine rejects bad input and crossed bounds") {
    std::vector<Rational> seq(tri().row(6).begin(), tri().row(6).end());
    BoundFns crossed = make_bm_bounds(6);
    crossed.h = crossed.g;
    const HouLiOutcome out = houli_verify(seq, crossed, 1, 6);
    CHECK_FALSE(out.report.passed());
    CHECK_FALSE(out.extended.has_value());
    bool cond_i = false;
    for (const auto& w : out.report.witnesses) {
        cond_i = cond_i || w.label == "cond_i_upper";
    }
    CHECK(cond_i);
    seq[2] = Rational(0);
    CHECK_THROWS_AS(houli_verify(seq, make_bm_bounds(6), 1), std::invalid_argument);
    CHECK_THROWS_AS(houli_verify(tri().row(6), make_bm_bounds(6), 0), std::invalid_argument);
}

TEST_CASE("sweep is deterministic across job counts") {
    std::vector<std::string> ids;
    for (const auto& s : check_catalogue()) {
        ids.push_back(s.id);
    }
    const auto one = run_sweep(tri(), ids, 40, 1);
    const auto many = run_sweep(tri(), ids, 40, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(to_json(one[i]) == to_json(many[i]));
        CHECK(one[i].passed());
    }
    CHECK_THROWS_AS(run_sweep(tri(), {"nope"}, 5), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(tri(), {"ratio_L"}, 121), std::invalid_argument);
}

TEST_CASE("report json round trip") {
    const CheckReport r = check_ratio_lower_L(tri(), 4);
    const CheckReport back = report_from_json(to_json(r));
    CHECK(to_json(back) == to_json(r));
    CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), std::invalid_argument);
}
