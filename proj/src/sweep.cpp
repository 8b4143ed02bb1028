#include "bmturan/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "bmturan/houli.hpp"
#include "bmturan/inequalities.hpp"
#include "bmturan/parallel.hpp"

namespace bmturan {

const std::vector<CheckSpec>& check_catalogue() {
    static const std::vector<CheckSpec> specs{
        {"mixed_rec", 1, true},      {"log_concavity", 1, false}, {"hot", 3, false},
        {"ratio_L", 1, true},        {"kp", 1, true},             {"kp_strict", 2, true},
        {"cg_upper", 2, false},      {"cg_lower", 2, false},      {"new_lower", 2, false},
        {"sharper_lower", 2, false}, {"factorial_lc", 2, false},  {"houli", 2, false},
        {"jensen", 3, false},
    };
    return specs;
}

bool is_check_id(const std::string& id) {
    const auto& c = check_catalogue();
    return std::any_of(c.begin(), c.end(), [&](const CheckSpec& s) { return s.id == id; });
}

const CheckSpec& check_spec(const std::string& id) {
    for (const auto& s : check_catalogue()) {
        if (s.id == id) {
            return s;
        }
    }
    throw std::invalid_argument("unknown check id '" + id + "'");
}

CheckReport run_check(const std::string& id, const BMTriangle& tri, long m) {
    if (id == "mixed_rec") return check_mixed_recurrences_at(tri, m);
    if (id == "log_concavity") return check_log_concavity(tri, m);
    if (id == "hot") return check_hot(tri, m);
    if (id == "ratio_L") return check_ratio_lower_L(tri, m);
    if (id == "kp") return check_ratio_lower_KP(tri, m, false);
    if (id == "kp_strict") return check_ratio_lower_KP(tri, m, true);
    if (id == "cg_upper") return check_turan_ratio_bounds(tri, m, TuranBound::CgUpper);
    if (id == "cg_lower") return check_turan_ratio_bounds(tri, m, TuranBound::CgLower);
    if (id == "new_lower") return check_turan_ratio_bounds(tri, m, TuranBound::NewLower);
    if (id == "sharper_lower") return check_turan_ratio_bounds(tri, m, TuranBound::SharperLower);
    if (id == "factorial_lc") return check_factorial_log_concavity(tri, m);
    if (id == "houli") return houli_verify(tri.row(m), make_bm_bounds(m), 1, m).report;
    if (id == "jensen") return check_jensen_cubic(tri, m);
    throw std::invalid_argument("unknown check id '" + id + "'");
}

std::vector<CheckReport> run_sweep(const BMTriangle& tri, const std::vector<std::string>& ids,
                                   long m_max, unsigned jobs) {
    struct Task {
        const std::string* id;
        long m;
    };
    std::vector<Task> tasks;
    for (const auto& id : ids) {
        const CheckSpec& spec = check_spec(id);
        if (m_max + (spec.needs_next_row ? 1 : 0) > tri.max_m()) {
            throw std::invalid_argument("triangle too small for check '" + id + "'");
        }
        for (long m = spec.min_m; m <= m_max; ++m) {
            tasks.push_back({&id, m});
        }
    }
    std::vector<CheckReport> out(tasks.size());
    // Large m first keeps the pool busy; placement by index keeps order fixed.
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        const Task& t = tasks[tasks.size() - 1 - i];
        out[tasks.size() - 1 - i] = run_check(*t.id, tri, t.m);
    });
    return out;
}

}  // namespace bmturan
