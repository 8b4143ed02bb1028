#include "bmturan/certificates.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bmturan/parallel.hpp"

namespace bmturan {

namespace {

std::string term_note(std::size_t lhs_terms, std::size_t rhs_terms) {
    return "lhs terms=" + std::to_string(lhs_terms) + ", rhs terms=" + std::to_string(rhs_terms);
}

struct Fraction {
    MultiPoly num;
    MultiPoly den;
};

struct SurdFraction {
    SurdRingElem num;
    MultiPoly den;
};

MultiPoly var(const char* name) {
    return MultiPoly::variable(name);
}

// f(m, l) → f(m+1, m).
MultiPoly shift_to_diagonal(const MultiPoly& p) {
    MultiPoly out = p.has_variable("m") ? p.subst("m", var("m") + 1) : p;
    return out.has_variable("l") ? out.subst("l", var("m")) : out;
}

// 4(1-x)(1-y) - (1-xy)^2 for x = a/b, y = c/e, as numerator over b²e².
Fraction hou_li_form(const Fraction& x, const Fraction& y) {
    const MultiPoly& a = x.num;
    const MultiPoly& b = x.den;
    const MultiPoly& c = y.num;
    const MultiPoly& e = y.den;
    const MultiPoly be = b * e;
    const MultiPoly num = MultiPoly(4) * (b - a) * (e - c) * be - (be - a * c).pow(2);
    return {num, be.pow(2)};
}

Fraction next_n(const Fraction& f) {
    return {f.num.subst("n", var("n") + 1), f.den.subst("n", var("n") + 1)};
}

// a/b == c/d  ⇔  a·d == c·b.
CheckReport fractions_equal(const std::string& name, const Fraction& lhs, const Fraction& rhs) {
    return identity_check(name, lhs.num * rhs.den, rhs.num * lhs.den);
}

CheckReport fractions_equal(const std::string& name, const SurdFraction& lhs,
                            const SurdFraction& rhs) {
    return identity_check(name, rhs.den * lhs.num, lhs.den * rhs.num);
}

// L(m,l) over the lemma ring: sqrt(rad_num/rad_den) = U / rad_den.
SurdFraction l_bound(const Registry& r) {
    const MultiPoly rad_den = r.get("L_rad_den");
    SurdRingElem num = SurdRingElem::scalar(r.get("L_num_rat") * rad_den);
    num.cU = r.get("L_num_surd");
    return {num, r.get("L_den") * rad_den};
}

// R(m,l): the radical enters with a minus sign, sqrt(...) = V / rad_den.
SurdFraction r_bound(const Registry& r) {
    const MultiPoly rad_den = r.get("R_rad_den");
    SurdRingElem num = SurdRingElem::scalar(r.get("R_num_rat") * rad_den);
    num.cV = -r.get("R_num_surd");
    return {num, r.get("R_den") * rad_den};
}

struct IdentityCase {
    std::string name;
    std::function<CheckReport(const Registry&, const std::string&)> run;
};

const std::vector<IdentityCase>& identity_cases() {
    static const std::vector<IdentityCase> cases{
        {"lemma23_id1",
         [](const Registry& r, const std::string& name) {
             const MultiPoly lhs = r.get("R_num_rat").pow(2) * r.get("R_rad_den") -
                                   r.get("R_num_surd").pow(2) * r.get("R_rad_num");
             return identity_check(name, lhs, r.get("R_opening"));
         }},
        {"lemma23_lr",
         [](const Registry& r, const std::string& name) {
             const SurdRing ring = r.lemma_ring();
             const SurdFraction L = l_bound(r);
             const SurdFraction R = r_bound(r);
             // L·R − K_num/K_den as one fraction.
             const SurdFraction lhs{
                 r.get("K_den") * ring.multiply(L.num, R.num) -
                     SurdRingElem::scalar(r.get("K_num") * L.den * R.den),
                 r.get("K_den") * L.den * R.den};
             const MultiPoly l = var("l");
             SurdRingElem inner = SurdRingElem::scalar(r.get("C3"));
             inner.cU = r.get("C1");
             inner.cV = -r.get("C2");
             inner.cUV = -l;
             const SurdFraction rhs{l * inner, r.get("LR_den")};
             return fractions_equal(name, lhs, rhs);
         }},
        {"lemma23_id2",
         [](const Registry& r, const std::string& name) {
             const SurdRing ring = r.lemma_ring();
             SurdRingElem first = SurdRingElem::scalar(r.get("C3"));
             first.cU = r.get("C1");
             SurdRingElem second;
             second.cV = r.get("C2");
             second.cUV = var("l");
             const SurdRingElem lhs = ring.pow(first, 2) - ring.pow(second, 2);
             SurdRingElem rhs = SurdRingElem::scalar(r.get("C4"));
             rhs.cU = -r.get("C5");
             return identity_check(name, lhs, rhs);
         }},
        {"lemma23_id3",
         [](const Registry& r, const std::string& name) {
             const MultiPoly lhs = r.get("C4").pow(2) - r.get("C5").pow(2) * r.get("Usq");
             return identity_check(name, lhs, r.get("C6_cofactor") * r.get("C6"));
         }},
        {"thm31_quadratic",
         [](const Registry& r, const std::string& name) {
             const MultiPoly lhs = r.get("B").pow(2) - MultiPoly(4) * r.get("A") * r.get("C");
             return identity_check(name, lhs, r.get("Delta"));
         }},
        {"thm31_root",
         [](const Registry& r, const std::string& name) {
             // A·L² + B·L + C = 0, multiplied through by the square of L's denominator.
             const SurdRing ring = r.lemma_ring();
             const SurdFraction L = l_bound(r);
             const SurdRingElem lhs = r.get("A") * ring.pow(L.num, 2) +
                                      (r.get("B") * L.den) * L.num +
                                      SurdRingElem::scalar(r.get("C") * L.den.pow(2));
             return identity_check(name, lhs, SurdRingElem{});
         }},
        {"ellm_case",
         [](const Registry& r, const std::string& name) {
             const MultiPoly lhs = r.get("ellm_lhs").pow(2) -
                                   (MultiPoly(2) * var("m") + 3).pow(2) * r.get("Wsq");
             return identity_check(name, lhs, r.get("ellm_residual"));
         }},
        {"ellm_L_shift",
         [](const Registry& r, const std::string& name) {
             // L(m+1, m) from the general formula equals the registered closed form.
             // The radical sqrt(a/b) becomes W / b, so W² = a·b must be Wsq.
             const MultiPoly rad_num = shift_to_diagonal(r.get("L_rad_num"));
             const MultiPoly rad_den = shift_to_diagonal(r.get("L_rad_den"));
             if (!(rad_num * rad_den == r.get("Wsq"))) {
                 return identity_check(name, rad_num * rad_den, r.get("Wsq"));
             }
             SurdRingElem general = SurdRingElem::scalar(shift_to_diagonal(r.get("L_num_rat")) * rad_den);
             general.cU = shift_to_diagonal(r.get("L_num_surd"));
             const MultiPoly closed_rad_den = r.get("ellm_rad_den");
             if (!(r.get("ellm_rad_num") * closed_rad_den == r.get("Wsq"))) {
                 return identity_check(name, r.get("ellm_rad_num") * closed_rad_den, r.get("Wsq"));
             }
             SurdRingElem closed = SurdRingElem::scalar(r.get("ellm_L_rat") * closed_rad_den);
             closed.cU = r.get("ellm_L_surd");
             return fractions_equal(name, SurdFraction{general, shift_to_diagonal(r.get("L_den")) * rad_den},
                                    SurdFraction{closed, r.get("ellm_L_den") * closed_rad_den});
         }},
        {"ellm_split",
         [](const Registry& r, const std::string& name) {
             // d_m(m+2)/d_m(m+1) − L(m+1, m) = m(lhs − (2m+3)W) / diff_den.
             const MultiPoly rad_den = r.get("ellm_rad_den");
             SurdRingElem l_num = SurdRingElem::scalar(r.get("ellm_L_rat") * rad_den);
             l_num.cU = r.get("ellm_L_surd");
             const MultiPoly l_den = r.get("ellm_L_den") * rad_den;
             const MultiPoly ratio_num = r.get("ellm_ratio_num");
             const MultiPoly ratio_den = r.get("ellm_ratio_den");
             const SurdFraction lhs{SurdRingElem::scalar(ratio_num * l_den) - ratio_den * l_num,
                                    ratio_den * l_den};
             const MultiPoly m = var("m");
             SurdRingElem rhs_num = SurdRingElem::scalar(m * r.get("ellm_lhs"));
             rhs_num.cU = -(m * (MultiPoly(2) * m + 3));
             return fractions_equal(name, lhs, SurdFraction{rhs_num, r.get("ellm_diff_den")});
         }},
        {"houli_gg",
         [](const Registry& r, const std::string& name) {
             const Fraction g{r.get("g_num"), r.get("g_den")};
             return fractions_equal(name, hou_li_form(g, next_n(g)),
                                    Fraction{r.get("gg_num"), r.get("gg_den")});
         }},
        {"houli_gh",
         [](const Registry& r, const std::string& name) {
             const Fraction g{r.get("g_num"), r.get("g_den")};
             const Fraction h{r.get("h_num"), r.get("h_den")};
             return fractions_equal(name, hou_li_form(g, next_n(h)), Fraction{r.get("F"), r.get("gh_den")});
         }},
        {"houli_hg",
         [](const Registry& r, const std::string& name) {
             const Fraction g{r.get("g_num"), r.get("g_den")};
             const Fraction h{r.get("h_num"), r.get("h_den")};
             return fractions_equal(name, hou_li_form(h, next_n(g)), Fraction{r.get("G"), r.get("hg_den")});
         }},
        {"houli_hh",
         [](const Registry& r, const std::string& name) {
             const Fraction h{r.get("h_num"), r.get("h_den")};
             return fractions_equal(name, hou_li_form(h, next_n(h)),
                                    Fraction{MultiPoly(4) * r.get("H"), r.get("hh_den")});
         }},
    };
    return cases;
}

bool selected(const std::vector<std::string>& only, const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
}

}  // namespace

CheckReport identity_check(const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs) {
    CheckReport report;
    report.check_id = name;
    report.params = "symbolic";
    report.count = 1;
    report.note = term_note(lhs.term_count(), rhs.term_count());
    const MultiPoly diff = lhs - rhs;
    if (!diff.is_zero()) {
        report.fail({std::nullopt, std::nullopt, lhs.str().substr(0, 200), rhs.str().substr(0, 200),
                     WitnessKind::Violation, "polynomial"});
        report.note += ", difference terms=" + std::to_string(diff.term_count());
    }
    return report;
}

CheckReport identity_check(const std::string& name, const SurdRingElem& lhs,
                           const SurdRingElem& rhs) {
    CheckReport report;
    report.check_id = name;
    report.params = "symbolic, quotient ring";
    report.count = 1;
    report.note = term_note(lhs.term_count(), rhs.term_count());
    const SurdRingElem diff = lhs - rhs;
    if (!diff.is_zero()) {
        report.fail({std::nullopt, std::nullopt, "reduced form, " + std::to_string(lhs.term_count()) + " terms",
                     "reduced form, " + std::to_string(rhs.term_count()) + " terms",
                     WitnessKind::Violation, "quotient_ring"});
        report.note += ", difference terms=" + std::to_string(diff.term_count());
    }
    return report;
}

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& c : identity_cases()) {
        names.push_back(c.name);
    }
    return names;
}

std::vector<CheckReport> verify_identity_suite(const Registry& registry,
                                               const std::vector<std::string>& only, unsigned jobs) {
    for (const auto& name : only) {
        const auto& names = identity_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw std::invalid_argument("unknown identity '" + name + "'");
        }
    }
    std::vector<const IdentityCase*> chosen;
    for (const auto& c : identity_cases()) {
        if (selected(only, c.name)) {
            chosen.push_back(&c);
        }
    }
    std::vector<CheckReport> reports(chosen.size());
    parallel_for(chosen.size(), jobs,
                 [&](std::size_t i) { reports[i] = chosen[i]->run(registry, chosen[i]->name); });
    return reports;
}

const char* to_string(PositivityDomain domain) {
    return domain == PositivityDomain::EllBelowM ? "l>=1, m>=l+1" : "n>=1, m>=n+1";
}

bool PositivityCertificate::passed() const {
    return verdict == CertVerdict::AllCoeffsNonneg || evidence.rfind("exhaustive", 0) == 0;
}

PositivityCertificate certify_positive(const MultiPoly& p, PositivityDomain domain,
                                       std::string name) {
    const std::string x = domain == PositivityDomain::EllBelowM ? "l" : "n";
    PositivityCertificate cert;
    cert.name = std::move(name);
    cert.target = p;
    cert.domain = domain;
    cert.substitution = "m -> " + x + "+1+t, " + x + " -> 1+s";
    MultiPoly shifted = p;
    if (shifted.has_variable("m")) {
        shifted = shifted.subst("m", MultiPoly::variable(x) + 1 + MultiPoly::variable("t"));
    }
    if (shifted.has_variable(x)) {
        shifted = shifted.subst(x, MultiPoly(1) + MultiPoly::variable("s"));
    }
    cert.shifted = shifted;
    cert.witness_point = {{"s", Rational(0)}, {"t", Rational(0)}};
    std::map<std::string, Rational> origin;
    for (const auto& v : shifted.variables()) {
        origin.emplace(v, Rational(0));
    }
    cert.witness_value = shifted.eval(origin);
    cert.negative_term = shifted.first_negative_term();
    const bool ok = !p.is_zero() && !cert.negative_term && cert.witness_value.sign() > 0;
    cert.verdict = ok ? CertVerdict::AllCoeffsNonneg : CertVerdict::Failed;
    cert.evidence = ok ? "shift-certificate" : "none";
    return cert;
}

ExhaustiveResult exhaustive_positive(const MultiPoly& p, PositivityDomain domain, long x_max,
                                     long m_max) {
    const std::string x = domain == PositivityDomain::EllBelowM ? "l" : "n";
    ExhaustiveResult result;
    for (long xv = 1; xv <= x_max; ++xv) {
        for (long mv = xv + 1; mv <= m_max; ++mv) {
            std::map<std::string, Rational> point{{"m", Rational(mv)}, {x, Rational(xv)}};
            ++result.points;
            if (p.eval(point).sign() <= 0) {
                result.positive = false;
                result.counterexample = std::make_pair(xv, mv);
                return result;
            }
        }
    }
    return result;
}

const std::vector<PositivityTarget>& positivity_targets() {
    static const std::vector<PositivityTarget> targets{
        {"C4", PositivityDomain::EllBelowM},        {"C5", PositivityDomain::EllBelowM},
        {"C6", PositivityDomain::EllBelowM},        {"F", PositivityDomain::NBelowM},
        {"G", PositivityDomain::NBelowM},           {"H", PositivityDomain::NBelowM},
        {"R_opening", PositivityDomain::EllBelowM}, {"ellm_residual", PositivityDomain::EllBelowM},
    };
    return targets;
}

std::vector<PositivityCertificate> positivity_suite(const Registry& registry,
                                                    const std::vector<std::string>& only,
                                                    unsigned jobs) {
    std::vector<const PositivityTarget*> chosen;
    for (const auto& target : positivity_targets()) {
        if (selected(only, target.name)) {
            chosen.push_back(&target);
        }
    }
    constexpr long kFallbackX = 40;
    constexpr long kFallbackM = 80;
    std::vector<PositivityCertificate> certs(chosen.size());
    parallel_for(chosen.size(), jobs, [&](std::size_t i) {
        const auto& target = *chosen[i];
        const MultiPoly p = registry.get(target.name);
        PositivityCertificate cert = certify_positive(p, target.domain, target.name);
        if (cert.verdict == CertVerdict::Failed && !p.is_zero()) {
            const auto sweep = exhaustive_positive(p, target.domain, kFallbackX, kFallbackM);
            if (sweep.positive) {
                cert.evidence = "exhaustive(1<=x<=" + std::to_string(kFallbackX) +
                                ", x+1<=m<=" + std::to_string(kFallbackM) + ")";
            }
        }
        certs[i] = std::move(cert);
    });
    return certs;
}

nlohmann::ordered_json to_json(const PositivityCertificate& cert) {
    nlohmann::ordered_json point;
    for (const auto& [name, value] : cert.witness_point) {
        point[name] = value.str();
    }
    nlohmann::ordered_json out;
    out["name"] = cert.name;
    out["kind"] = "positivity";
    out["pass"] = cert.passed();
    out["verdict"] = cert.verdict == CertVerdict::AllCoeffsNonneg ? "all_coeffs_nonneg" : "failed";
    out["evidence"] = cert.evidence;
    out["domain"] = to_string(cert.domain);
    out["substitution"] = cert.substitution;
    out["target_terms"] = cert.target.term_count();
    out["shifted_coefficients"] = cert.shifted.term_count();
    out["strictness_witness"] = {{"point", point}, {"value", cert.witness_value.str()}};
    if (cert.negative_term) {
        out["negative_coefficient"] = {{"monomial", cert.negative_term->first},
                                       {"coefficient", cert.negative_term->second.str()}};
    } else {
        out["negative_coefficient"] = nullptr;
    }
    return out;
}

nlohmann::ordered_json certificate_document(const std::vector<CheckReport>& identities,
                                            const std::vector<PositivityCertificate>& positivity) {
    nlohmann::ordered_json doc;
    auto ids = nlohmann::ordered_json::array();
    std::size_t ids_passed = 0;
    for (const auto& report : identities) {
        ids_passed += report.passed() ? 1 : 0;
        ids.push_back({{"name", report.check_id},
                       {"kind", "identity"},
                       {"pass", report.passed()},
                       {"note", report.note}});
    }
    auto pos = nlohmann::ordered_json::array();
    std::size_t pos_passed = 0;
    for (const auto& cert : positivity) {
        pos_passed += cert.passed() ? 1 : 0;
        pos.push_back(to_json(cert));
    }
    doc["identities"] = std::move(ids);
    doc["positivity"] = std::move(pos);
    doc["summary"] = {{"identities_passed", ids_passed},
                      {"identities_total", identities.size()},
                      {"positivity_passed", pos_passed},
                      {"positivity_total", positivity.size()}};
    return doc;
}

}  // namespace bmturan
