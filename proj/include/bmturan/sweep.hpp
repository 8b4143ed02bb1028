#pragma once

#include <string>
#include <vector>

#include "bmturan/coeffs.hpp"
#include "bmturan/report.hpp"

namespace bmturan {

struct CheckSpec {
    std::string id;
    long min_m;          ///< first m in the check's domain
    bool needs_next_row; ///< reads row m+1
};

/// All sweepable checks, in default order.
const std::vector<CheckSpec>& check_catalogue();
bool is_check_id(const std::string& id);
const CheckSpec& check_spec(const std::string& id);

/// One check at one m. The triangle must contain the rows the check reads.
CheckReport run_check(const std::string& id, const BMTriangle& tri, long m);

/// Runs every id over its min_m ≤ m ≤ m_max in parallel.
/// Output order is (position of id in `ids`, m), independent of `jobs`.
/// Throws std::invalid_argument for unknown ids before doing any work.
std::vector<CheckReport> run_sweep(const BMTriangle& tri, const std::vector<std::string>& ids,
                                   long m_max, unsigned jobs = 1);

}  // namespace bmturan
