#include "bmturan/registry.hpp"

#include <stdexcept>

namespace bmturan {

// Every polynomial used by the certificates is entered here once, in expanded
// or factored source form. "l" stands for ℓ. Fractions are stored as separate
// numerator/denominator entries; radicals as radicand numerator/denominator.
Registry::Registry()
    : sources_{
          // Constants C1..C6 of the L·R comparison.
          {"C1", "(m+l^2+1)(4m^2+9m-2l^2+5)"},
          {"C2", "(m+l^2)(4m^2+7m-2l^2+3)"},
          {"C3", "l(4l^2-1)(m+l^2)(m+l^2+1)"},
          {"C4", "4(m+l^2)(m+l^2+1)(m+l+1)(m-l+1)"
                 "(16l^6m+28l^6+32l^4m^2+76l^4m"
                 "+32l^2m^3+33l^4+104l^2m^2+102l^2m+4m^3+29l^2+8m^2+4m)"},
          {"C5", "8l(4l^2m+7l^2+2m+2)(m+l+1)(m-l+1)(m+l^2)(m+l^2+1)"},
          {"C6", "256l^10m^3+960l^10m^2+1536l^8m^4+1136l^10m"
                 "+7040l^8m^3+2048l^6m^5+420l^10"
                 "+11568l^8m^2+11072l^6m^4+1024l^4m^6+8128l^8m"
                 "+22720l^6m^3+6912l^4m^5"
                 "+2089l^8+22188l^6m^2+18272l^4m^4+256l^2m^6+10340l^6m"
                 "+24280l^4m^3"
                 "+1344l^2m^5+1834l^6+17140l^4m^2+2720l^2m^4+16m^6+6084l^4m"
                 "+2664l^2m^3"
                 "+64m^5+841l^4+1264l^2m^2+96m^4+232l^2m+64m^3+16m^2"},
          {"C6_cofactor", "16(m+l^2)^2(m+l^2+1)^2(m+l+1)^2(m-l+1)^2"},
          {"Usq", "(m+l^2)(4l^4+8l^2m+5l^2+m)"},
          {"Vsq", "(m+l^2+1)(4l^4+8l^2m+13l^2+m+1)"},

          // L(m,l) = (L_num_rat + L_num_surd·sqrt(L_rad_num/L_rad_den)) / L_den.
          {"L_num_rat", "4m^2+7m-2l^2+3"},
          {"L_num_surd", "l"},
          {"L_rad_num", "4l^4+8l^2m+5l^2+m"},
          {"L_rad_den", "m+l^2"},
          {"L_den", "2(m+1)(m-l+1)"},

          // R(m,l) = (R_num_rat - R_num_surd·sqrt(R_rad_num/R_rad_den)) / R_den.
          {"R_num_rat", "4m^2+9m-2l^2+5"},
          {"R_num_surd", "l"},
          {"R_rad_num", "4l^4+8l^2m+13l^2+m+1"},
          {"R_rad_den", "m+l^2+1"},
          {"R_den", "2(m+2)(m-l+2)"},
          // R > 0: the factored right-hand side of the opening identity.
          {"R_opening", "(m+l+1)(m-l+1)(16l^2m^2+40l^2m+16m^3+29l^2+56m^2+65m+25)"},

          // The recurrence coefficient compared against L·R, and the common
          // denominator of L·R minus it.
          {"K_num", "(4m+3)(4m+5)(m+l+1)"},
          {"K_den", "4(m+1)(m+2)(m-l+2)"},
          {"LR_den", "4(m+1)(m-l+1)(m+l^2)(m+2)(m-l+2)(m+l^2+1)"},

          // Quadratic in the vertical ratio.
          {"A", "4(m+1)^2(m-l+1)^2(m+l^2)"},
          {"B", "-4(m+1)(m-l+1)(m+l^2)(4m^2+7m-2l^2+3)"},
          {"C", "16l^2m^4-16l^4m^2+40l^2m^3-32l^4m+16m^5+45l^2m^2-17l^4"
                "+56m^4+29l^2m+73m^3+9l^2+42m^2+9m"},
          {"Delta", "16l^2(m+1)^2(m-l+1)^2(m+l^2)(4l^4+8l^2m+5l^2+m)"},

          // The l = m case.
          {"Wsq", "(m^2+m+1)(4m^4+8m^3+13m^2+m+1)"},
          {"ellm_ratio_num", "(m+1)(4m^2+18m+21)"},
          {"ellm_ratio_den", "2(m+2)(2m+3)"},
          {"ellm_L_rat", "2m^2+15m+14"},
          {"ellm_L_surd", "m"},
          {"ellm_L_den", "4(m+2)"},
          {"ellm_rad_num", "4m^4+8m^3+13m^2+m+1"},
          {"ellm_rad_den", "m^2+m+1"},
          {"ellm_diff_den", "4(2m+3)(m+2)(m^2+m+1)"},
          {"ellm_lhs", "4m^4+12m^3+17m^2+13m+5"},
          {"ellm_residual", "4(m^2+m+1)(4m^3+19m^2+21m+4)"},

          // Bound functions for the Hou-Li criterion.
          {"g_num", "(m-n)n"},
          {"g_den", "(m-n+1)(n+1)"},
          {"h_num", "(m-n)n(m+n^2+1)"},
          {"h_den", "(m-n+1)(n+1)(m+n^2)"},

          // Numerators and denominators of d(g(n), g(n+1)) etc.
          {"gg_num", "4(m+1)^2(m+2)"},
          {"gg_den", "(m-n)(m-n+1)^2(n+1)(n+2)^2"},
          {"F", "4m^3n^4+8m^4n^2+7m^3n^3+mn^4(31m-7n)+n^6+4m^5+8m^4n+43m^3n^2+93m^2n^3"
                "+n^4(17m-n)+16m^4+60m^3n+162m^2n^2+115mn^3+3n^4+40m^3+156m^2n"
                "+203mn^2+41n^3+64m^2+164mn+80n^2+52m+60n+16"},
          {"gh_den", "(m-n)(m-n+1)^2(n+1)(n+2)^2(n^2+2n+m+1)^2"},
          {"G", "4m^3n^4+m^3n^2(8m-5n)+19m^2n^4+mn^5+n^6+4m^4(m-n)+m^2n^2(31m-7n)"
                "+25mn^4+7n^5+16m^3(m-n)+mn^2(54m-13n)+23n^4+m^2(20m-12n)"
                "+27mn^2+n^3+8m^2"},
          {"hg_den", "(m-n)(m-n+1)^2(n^2+m)^2(n+1)(n+2)^2"},
          {"H", "(m+3)(m+2)^2n^8+(m+8)(m+3)(m+2)n^7+(4m^4+24m^3+47m^2"
                "+62m+73)n^6+(3m^4+38m^3+101m^2+67m+51)n^5+(6m^5+31m^4"
                "+60m^3+117m^2+65m+15)n^4+(3m^5+38m^4+68m^3+83m^2"
                "+43m+1)n^3+(m^2+m)(4m^4+14m^3+31m^2+22m+13)n^2"
                "+m^2(m+9)(m+1)^3n+m^2(m^2+m+4)(m+1)^3"},
          {"hh_den", "(m-n)(m-n+1)^2(n^2+m)^2(n^2+2n+m+1)^2(n+1)(n+2)^2"},
      } {}

const Registry& Registry::standard() {
    static const Registry registry;
    return registry;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    out.reserve(sources_.size());
    for (const auto& [name, text] : sources_) {
        out.push_back(name);
    }
    return out;
}

bool Registry::contains(const std::string& name) const {
    return sources_.contains(name);
}

const std::string& Registry::source(const std::string& name) const {
    const auto it = sources_.find(name);
    if (it == sources_.end()) {
        throw std::invalid_argument("unknown registry entry '" + name + "'");
    }
    return it->second;
}

MultiPoly Registry::get(const std::string& name) const {
    return MultiPoly::parse(source(name));
}

Registry Registry::with_override(const std::string& name, std::string expression) const {
    (void)source(name);
    (void)MultiPoly::parse(expression);
    Registry copy = *this;
    copy.sources_[name] = std::move(expression);
    return copy;
}

SurdRing Registry::lemma_ring() const {
    return {get("Usq"), get("Vsq")};
}

MultiPoly build_named(const std::string& name) {
    return Registry::standard().get(name);
}

}  // namespace bmturan
