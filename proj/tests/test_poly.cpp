#include <doctest.h>

#include <random>

#include "bmturan/certificates.hpp"
#include "bmturan/multipoly.hpp"
#include "bmturan/registry.hpp"
#include "bmturan/surd_ring.hpp"

using namespace bmturan;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms,
                      unsigned max_deg, long lo, long hi) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    MultiPoly p;
    for (int i = 0; i < terms; ++i) {
        MultiPoly t(coeff(rng));
        for (const auto& v : vars) {
            t *= MultiPoly::variable(v).pow(deg(rng));
        }
        p += t;
    }
    return p;
}

}  // namespace

TEST_CASE("parser and printer") {
    CHECK(P("2(m+1)") == P("2m+2"));
    CHECK(P("16l^2m^2") == MultiPoly(16) * P("l^2") * P("m^2"));
    CHECK(P("(m-l)^2") == P("m^2-2ml+l^2"));
    CHECK(P("-4(m+1)") == P("-4m-4"));
    CHECK(P("l(4l^2-1)").degree("l") == 3);
    CHECK(P("4m^2-2l^2+7m+3").str() == "4*m^2 - 2*l^2 + 7*m + 3");
    CHECK(P("0").is_zero());
    CHECK(P("m-m").is_zero());
    CHECK_THROWS_AS(P("m+"), std::invalid_argument);
    CHECK_THROWS_AS(P("(m"), std::invalid_argument);
    CHECK_THROWS_AS(P("m^-1"), std::invalid_argument);
    CHECK_THROWS_AS(P("m$"), std::invalid_argument);
}

TEST_CASE("evaluation, coefficients and substitution") {
    const MultiPoly p = P("(m+l^2)(4l^4+8l^2m+5l^2+m)");
    CHECK(p.eval({{"m", 2}, {"l", 1}}) == Rational(3 * 27));
    CHECK_THROWS_AS((void)p.eval({{"m", 2}}), std::invalid_argument);
    CHECK(P("3m^2l+5").coefficient({{"m", 2}, {"l", 1}}) == Rational(3));
    CHECK(P("3m^2l+5").coefficient({}) == Rational(5));
    CHECK(P("m^2+n").subst("m", P("n+1")) == P("n^2+3n+1"));
    CHECK_FALSE(P("m^2+n").subst("m", P("n+1")).has_variable("m"));
    CHECK_THROWS((void)P("m").subst("q", P("1")));
    CHECK(P("m+2").pow(3) == P("m^3+6m^2+12m+8"));
    CHECK(P("m").total_degree() == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    const std::vector<std::string> vars{"m", "l", "n"};
    for (int i = 0; i < 40; ++i) {
        const MultiPoly a = random_poly(rng, vars, 4, 3, -9, 9);
        const MultiPoly b = random_poly(rng, vars, 4, 3, -9, 9);
        const MultiPoly c = random_poly(rng, {"m", "t"}, 3, 2, -9, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(poly_arith(a, b, PolyOp::Sub) == a - b);
        const std::map<std::string, Rational> pt{{"m", 3}, {"l", -2}, {"n", Rational(1, 2)}, {"t", 5}};
        CHECK((a * c).eval(pt) == a.eval(pt) * c.eval(pt));
    }
}

TEST_CASE("merge_variables uses canonical order") {
    CHECK(merge_variables({"m", "n"}, {"l", "z"}) == std::vector<std::string>{"m", "l", "n", "z"});
}

TEST_CASE("quotient ring multiplication is sound at 50 points") {
    // Radicands that are perfect squares at integer points make U, V exact.
    const SurdRing ring(P("(m+l)^2"), P("(2m+1)^2"));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coord(1, 30);
    const auto rand_elem = [&] {
        return SurdRingElem{random_poly(rng, {"m", "l"}, 3, 2, -5, 5),
                            random_poly(rng, {"m", "l"}, 3, 2, -5, 5),
                            random_poly(rng, {"m", "l"}, 3, 2, -5, 5),
                            random_poly(rng, {"m", "l"}, 3, 2, -5, 5)};
    };
    for (int i = 0; i < 50; ++i) {
        const SurdRingElem a = rand_elem();
        const SurdRingElem b = rand_elem();
        const long m = coord(rng);
        const long l = coord(rng);
        const std::map<std::string, Rational> pt{{"m", m}, {"l", l}};
        const Rational U(m + l);
        const Rational V(2 * m + 1);
        const auto value = [&](const SurdRingElem& e) {
            return e.c1.eval(pt) + e.cU.eval(pt) * U + e.cV.eval(pt) * V + e.cUV.eval(pt) * U * V;
        };
        CHECK(value(ring.multiply(a, b)) == value(a) * value(b));
        CHECK(value(ring.pow(a, 3)) == value(a).pow(3));
    }
    CHECK(SurdRing::equal(ring.multiply(SurdRingElem::u(), SurdRingElem::u()),
                          SurdRingElem::scalar(P("(m+l)^2"))));
}

TEST_CASE("registry") {
    const Registry& reg = Registry::standard();
    CHECK(reg.contains("C6"));
    CHECK_THROWS_AS((void)reg.source("nope"), std::invalid_argument);
    CHECK(build_named("L_den") == P("2(m+1)(m-l+1)"));
    for (const auto& name : reg.names()) {
        CHECK_NOTHROW((void)reg.get(name));
    }
    const Registry changed = reg.with_override("C1", "m");
    CHECK(changed.get("C1") == P("m"));
    CHECK(reg.get("C1") != P("m"));
    CHECK_THROWS((void)reg.with_override("C1", "m+"));
}

TEST_CASE("identity suite passes on the standard registry") {
    const std::vector<CheckReport> reports = verify_identity_suite();
    REQUIRE(reports.size() == identity_names().size());
    for (const auto& r : reports) {
        INFO(r.check_id);
        CHECK(r.passed());
    }
    CHECK(verify_identity_suite(Registry::standard(), {"lemma23_id2"}).size() == 1);
    CHECK_THROWS(verify_identity_suite(Registry::standard(), {"bogus"}));
}

TEST_CASE("a single mistranscribed coefficient breaks its identity") {
    const Registry bad = Registry::standard().with_override(
        "A", "4(m+1)^2(m-l+1)^2(m+l^2+1)");
    const auto reports = verify_identity_suite(bad);
    bool any_failed = false;
    for (const auto& r : reports) {
        any_failed = any_failed || !r.passed();
    }
    CHECK(any_failed);
}

TEST_CASE("identity_check reports a witness on mismatch") {
    const CheckReport ok = identity_check("sq", P("(m+1)^2"), P("m^2+2m+1"));
    CHECK(ok.passed());
    const CheckReport bad = identity_check("sq", P("(m+1)^2"), P("m^2+2m+2"));
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.witnesses.empty());
}

TEST_CASE("positivity certificates") {
    for (const auto& cert : positivity_suite()) {
        INFO(cert.name);
        CHECK(cert.verdict == CertVerdict::AllCoeffsNonneg);
        CHECK(cert.witness_value.sign() > 0);
    }
    const PositivityCertificate bad = certify_positive(P("m-2l"), PositivityDomain::EllBelowM, "m-2l");
    CHECK(bad.verdict == CertVerdict::Failed);
    REQUIRE(bad.negative_term.has_value());
    CHECK(bad.negative_term->second.sign() < 0);
    CHECK_FALSE(bad.passed());
    const ExhaustiveResult sweep = exhaustive_positive(P("m-2l"), PositivityDomain::EllBelowM, 5, 10);
    CHECK_FALSE(sweep.positive);
    CHECK(sweep.counterexample == std::make_pair(1L, 2L));
}

TEST_CASE("failed shift certificate falls back to exhaustive evidence") {
    const Registry reg = Registry::standard().with_override("C4", "(m-2l)^2+1");
    const auto certs = positivity_suite(reg, {"C4"});
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].verdict == CertVerdict::Failed);
    CHECK(certs[0].passed());
    CHECK(certs[0].evidence.rfind("exhaustive", 0) == 0);
}

TEST_CASE("passing certificates are positive on sampled domain points") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coord(1, 60);
    for (int trial = 0; trial < 20; ++trial) {
        // Nonnegative in (s, t) with positive constant, pulled back to (m, l).
        MultiPoly q = random_poly(rng, {"s", "t"}, 4, 3, 0, 7) + 1;
        const MultiPoly p = q.subst("s", P("l-1")).subst("t", P("m-l-1"));
        const PositivityCertificate cert = certify_positive(p, PositivityDomain::EllBelowM);
        CHECK(cert.passed());
        for (int i = 0; i < 100; ++i) {
            const long l = coord(rng);
            const long m = l + coord(rng);
            CHECK(p.eval({{"m", m}, {"l", l}}).sign() > 0);
        }
    }
}
