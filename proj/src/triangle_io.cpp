#include "bmturan/triangle_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bmturan {

namespace {

constexpr const char* kCsvHeader = "m,l,numerator,denominator";
constexpr const char* kMethodPrefix = "# method=";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

long parse_index(const std::string& text, std::size_t line_no) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw std::invalid_argument("triangle csv line " + std::to_string(line_no) +
                                    ": bad index '" + text + "'");
    }
    return value;
}

}  // namespace

void write_triangle_csv(std::ostream& os, const BMTriangle& tri) {
    os << kMethodPrefix << to_string(tri.method()) << '\n' << kCsvHeader << '\n';
    for (long m = 0; m <= tri.max_m(); ++m) {
        for (long l = 0; l <= m; ++l) {
            const Rational& value = tri.at(m, l);
            os << m << ',' << l << ',' << value.numerator().get_str() << ','
               << value.denominator().get_str() << '\n';
        }
    }
}

BMTriangle read_triangle_csv(std::istream& is) {
    CoeffMethod method = CoeffMethod::Recurrence;
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.rfind(kMethodPrefix, 0) == 0) {
            method = coeff_method_from_string(line.substr(std::string(kMethodPrefix).size()));
            continue;
        }
        if (line[0] == '#') {
            continue;
        }
        if (!seen_header) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("triangle csv: expected header '" +
                                            std::string(kCsvHeader) + "'");
            }
            seen_header = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 4) {
            throw std::invalid_argument("triangle csv line " + std::to_string(line_no) +
                                        ": expected 4 fields");
        }
        const long m = parse_index(fields[0], line_no);
        const long l = parse_index(fields[1], line_no);
        const bool starts_row = l == 0 && m == static_cast<long>(rows.size());
        const bool continues_row = l > 0 && !rows.empty() &&
                                   m == static_cast<long>(rows.size()) - 1 &&
                                   l == static_cast<long>(rows.back().size());
        if (!starts_row && !continues_row) {
            throw std::invalid_argument("triangle csv line " + std::to_string(line_no) +
                                        ": entries must appear in (m, l) order");
        }
        if (starts_row) {
            rows.emplace_back();
        }
        rows.back().push_back(Rational::parse(fields[2] + "/" + fields[3]));
    }
    return {std::move(rows), method};
}

void write_triangle_json(std::ostream& os, const BMTriangle& tri) {
    nlohmann::ordered_json doc;
    doc["method"] = to_string(tri.method());
    doc["m_max"] = tri.max_m();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : tri.rows()) {
        auto entries = nlohmann::ordered_json::array();
        for (const auto& value : row) {
            entries.push_back(value.str());
        }
        rows.push_back(std::move(entries));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump() << '\n';
}

BMTriangle read_triangle_json(std::istream& is) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
        std::vector<Row> rows;
        for (const auto& entries : doc.at("rows")) {
            Row row;
            for (const auto& value : entries) {
                row.push_back(Rational::parse(value.get<std::string>()));
            }
            rows.push_back(std::move(row));
        }
        if (doc.contains("m_max") &&
            doc.at("m_max").get<long>() != static_cast<long>(rows.size()) - 1) {
            throw std::invalid_argument("triangle json: m_max does not match row count");
        }
        const auto method = coeff_method_from_string(doc.value("method", "recurrence"));
        return {std::move(rows), method};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("triangle json: ") + e.what());
    }
}

}  // namespace bmturan
