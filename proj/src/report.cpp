#include "bmturan/report.hpp"

#include <stdexcept>

namespace bmturan {

const char* to_string(Verdict verdict) {
    return verdict == Verdict::Pass ? "pass" : "fail";
}

const char* to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::Violation: return "violation";
    case WitnessKind::Equality: return "equality";
    case WitnessKind::Sample: return "sample";
    }
    return "violation";
}

namespace {

WitnessKind kind_from_string(const std::string& text) {
    if (text == "violation") {
        return WitnessKind::Violation;
    }
    if (text == "equality") {
        return WitnessKind::Equality;
    }
    if (text == "sample") {
        return WitnessKind::Sample;
    }
    throw std::invalid_argument("unknown witness kind '" + text + "'");
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

const Witness* headline(const CheckReport& report) {
    for (auto kind : {WitnessKind::Violation, WitnessKind::Equality, WitnessKind::Sample}) {
        for (const auto& w : report.witnesses) {
            if (w.kind == kind) {
                return &w;
            }
        }
    }
    return nullptr;
}

}  // namespace

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json record;
    record["check"] = report.check_id;
    record["m"] = optional_json(report.m);
    const Witness* head = headline(report);
    record["l"] = head ? optional_json(head->l) : nlohmann::json(nullptr);
    record["verdict"] = to_string(report.verdict);
    record["lhs"] = head ? nlohmann::json(head->lhs) : nlohmann::json(nullptr);
    record["rhs"] = head ? nlohmann::json(head->rhs) : nlohmann::json(nullptr);
    record["note"] = report.note;
    record["count"] = report.count;
    record["params"] = report.params;
    auto witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"m", optional_json(w.m)},
                             {"l", optional_json(w.l)},
                             {"lhs", w.lhs},
                             {"rhs", w.rhs},
                             {"kind", to_string(w.kind)},
                             {"label", w.label}});
    }
    record["witnesses"] = std::move(witnesses);
    return record;
}

CheckReport report_from_json(const nlohmann::json& record) {
    try {
        CheckReport report;
        report.check_id = record.at("check").get<std::string>();
        if (!record.at("m").is_null()) {
            report.m = record.at("m").get<long>();
        }
        const auto verdict = record.at("verdict").get<std::string>();
        if (verdict != "pass" && verdict != "fail") {
            throw std::invalid_argument("verdict must be pass or fail");
        }
        report.verdict = verdict == "pass" ? Verdict::Pass : Verdict::Fail;
        report.note = record.value("note", "");
        report.count = record.value("count", std::size_t{0});
        report.params = record.value("params", "");
        if (record.contains("witnesses")) {
            for (const auto& w : record.at("witnesses")) {
                Witness witness;
                if (!w.at("m").is_null()) {
                    witness.m = w.at("m").get<long>();
                }
                if (!w.at("l").is_null()) {
                    witness.l = w.at("l").get<long>();
                }
                witness.lhs = w.at("lhs").get<std::string>();
                witness.rhs = w.at("rhs").get<std::string>();
                witness.kind = kind_from_string(w.at("kind").get<std::string>());
                witness.label = w.value("label", "");
                report.witnesses.push_back(std::move(witness));
            }
        } else if (!record.at("l").is_null() || !record.at("lhs").is_null()) {
            Witness witness;
            witness.m = report.m;
            if (!record.at("l").is_null()) {
                witness.l = record.at("l").get<long>();
            }
            witness.lhs = record.at("lhs").is_null() ? "" : record.at("lhs").get<std::string>();
            witness.rhs = record.at("rhs").is_null() ? "" : record.at("rhs").get<std::string>();
            witness.kind = report.passed() ? WitnessKind::Sample : WitnessKind::Violation;
            report.witnesses.push_back(std::move(witness));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report record: ") + e.what());
    }
}

}  // namespace bmturan
