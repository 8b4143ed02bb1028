#pragma once

#include <iosfwd>
#include <string>

#include "bmturan/coeffs.hpp"

namespace bmturan {

// CSV: a "# method=<name>" comment line, then the header
// "m,l,numerator,denominator" and one line per coefficient.
void write_triangle_csv(std::ostream& os, const BMTriangle& tri);
BMTriangle read_triangle_csv(std::istream& is);

// JSON: {"method": <name>, "m_max": M, "rows": [["num/den", ...], ...]}.
void write_triangle_json(std::ostream& os, const BMTriangle& tri);
BMTriangle read_triangle_json(std::istream& is);

}  // namespace bmturan
