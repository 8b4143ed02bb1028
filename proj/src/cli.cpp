#include "bmturan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "bmturan/certificates.hpp"
#include "bmturan/coeffs.hpp"
#include "bmturan/registry.hpp"
#include "bmturan/report.hpp"
#include "bmturan/surd.hpp"
#include "bmturan/sweep.hpp"
#include "bmturan/triangle_io.hpp"

namespace bmturan {
namespace {

struct Operational : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out_path;
    std::string jobs_text;
};

unsigned parse_jobs(const std::string& text) {
    if (text.empty() || text == "auto") {
        return 0;
    }
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 1) {
        throw Operational("invalid job count '" + text + "'");
    }
    return static_cast<unsigned>(value);
}

unsigned resolve_job_flag(const std::string& flag) {
    if (!flag.empty()) {
        return parse_jobs(flag);
    }
    if (const char* env = std::getenv("BMTURAN_JOBS")) {
        return parse_jobs(env);
    }
    return 0;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

// Opens the destination up front so an unwritable path fails before work.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw Operational("cannot open '" + path + "' for writing");
            }
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    void close() {
        stream_->flush();
        if (!*stream_) {
            throw Operational("write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

// Recurrence rows must match the direct sum on {0..10, top}.
void cross_validate(const BMTriangle& tri) {
    if (tri.method() != CoeffMethod::Recurrence) {
        return;
    }
    std::set<long> rows;
    for (long m = 0; m <= std::min<long>(10, tri.max_m()); ++m) {
        rows.insert(m);
    }
    rows.insert(tri.max_m());
    for (long m : rows) {
        if (tri.row(m) != row_direct(m)) {
            throw Operational("recurrence disagrees with direct sum at row " + std::to_string(m));
        }
    }
}

int cmd_compute(long m_max, const std::string& format, const std::string& method,
                const Common& c, std::ostream& out) {
    if (m_max < 0) {
        throw Operational("--m-max must be >= 0");
    }
    const unsigned jobs = resolve_job_flag(c.jobs_text);
    Sink sink(c.out_path, out);
    const BMTriangle tri = BMTriangle::compute(m_max, coeff_method_from_string(method), jobs);
    cross_validate(tri);
    if (format == "json") {
        write_triangle_json(sink.stream(), tri);
    } else {
        write_triangle_csv(sink.stream(), tri);
    }
    sink.close();
    return ExitPass;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch;
        if (ch == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

void write_report(std::ostream& os, const CheckReport& r, bool csv) {
    if (!csv) {
        os << to_json(r).dump() << '\n';
        return;
    }
    const nlohmann::json j = to_json(r);
    const auto field = [&](const char* key) -> std::string {
        const auto& v = j.at(key);
        if (v.is_null()) return "";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    os << csv_field(field("check")) << ',' << field("m") << ',' << field("verdict") << ','
       << field("count") << ',' << field("l") << ',' << csv_field(field("lhs")) << ','
       << csv_field(field("rhs")) << ',' << csv_field(field("note")) << '\n';
}

int cmd_verify(long m_max, const std::string& checks, const std::string& format, bool fail_fast,
               const Common& c, std::ostream& out, std::ostream& err) {
    if (m_max < 1) {
        throw Operational("--m-max must be >= 1");
    }
    std::vector<std::string> ids = split_list(checks);
    if (ids.empty()) {
        for (const auto& s : check_catalogue()) {
            ids.push_back(s.id);
        }
    }
    for (const auto& id : ids) {
        if (!is_check_id(id)) {
            throw Operational("unknown check id '" + id + "'");
        }
    }
    const unsigned jobs = resolve_job_flag(c.jobs_text);
    Sink sink(c.out_path, out);
    const bool csv = format == "csv";
    if (csv) {
        sink.stream() << "check,m,verdict,count,l,lhs,rhs,note\n";
    }

    const BMTriangle tri = BMTriangle::compute(m_max + 1, CoeffMethod::Recurrence, jobs);
    cross_validate(tri);

    std::size_t reports = 0;
    std::size_t instances = 0;
    std::size_t failed = 0;
    std::vector<std::string> vacuous;
    for (const auto& id : ids) {
        const std::vector<CheckReport> batch = run_sweep(tri, {id}, m_max, jobs);
        std::size_t id_count = 0;
        bool stop = false;
        for (const auto& r : batch) {
            write_report(sink.stream(), r, csv);
            ++reports;
            instances += r.count;
            id_count += r.count;
            if (!r.passed()) {
                ++failed;
                if (fail_fast) {
                    stop = true;
                    break;
                }
            }
        }
        if (id_count == 0 && !stop) {
            vacuous.push_back(id);
        }
        if (stop) {
            break;
        }
    }
    sink.close();

    err << "verify: " << reports << " reports, " << instances << " instances, " << failed
        << " failed";
    if (!vacuous.empty()) {
        err << "; vacuous pass (no instances in domain):";
        for (const auto& id : vacuous) {
            err << ' ' << id;
        }
    }
    err << '\n';
    return failed == 0 ? ExitPass : ExitCheckFailed;
}

int cmd_certify(const std::string& checks, const std::vector<std::string>& overrides,
                const Common& c, std::ostream& out, std::ostream& err) {
    Registry registry = Registry::standard();
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw Operational("override must be NAME=EXPR");
        }
        registry = registry.with_override(o.substr(0, eq), o.substr(eq + 1));
    }

    const std::vector<std::string> wanted = split_list(checks);
    const std::vector<std::string> id_names = identity_names();
    std::vector<std::string> pos_names;
    for (const auto& t : positivity_targets()) {
        pos_names.push_back(t.name);
    }
    std::vector<std::string> id_only;
    std::vector<std::string> pos_only;
    for (const auto& w : wanted) {
        if (std::find(id_names.begin(), id_names.end(), w) != id_names.end()) {
            id_only.push_back(w);
        } else if (std::find(pos_names.begin(), pos_names.end(), w) != pos_names.end()) {
            pos_only.push_back(w);
        } else {
            throw Operational("unknown certificate '" + w + "'");
        }
    }
    const unsigned jobs = resolve_job_flag(c.jobs_text);
    Sink sink(c.out_path, out);

    std::vector<CheckReport> identities;
    std::vector<PositivityCertificate> positivity;
    if (wanted.empty() || !id_only.empty()) {
        identities = verify_identity_suite(registry, id_only, jobs);
    }
    if (wanted.empty() || !pos_only.empty()) {
        positivity = positivity_suite(registry, pos_only, jobs);
    }
    sink.stream() << certificate_document(identities, positivity).dump(2) << '\n';
    sink.close();

    for (const auto& r : identities) {
        if (!r.passed()) {
            err << "certify: identity '" << r.check_id << "' failed\n";
            return ExitCheckFailed;
        }
    }
    for (const auto& p : positivity) {
        if (!p.passed()) {
            err << "certify: positivity certificate '" << p.name << "' failed\n";
            return ExitCheckFailed;
        }
    }
    err << "certify: " << identities.size() << " identities, " << positivity.size()
        << " positivity certificates, all pass\n";
    return ExitPass;
}

// Display-only rendering of an exact wire value.
std::string approx(const std::string& wire) {
    if (wire.empty()) {
        return "";
    }
    try {
        if (wire.find("sqrt") != std::string::npos) {
            const RationalInterval iv = surd_bracket(QuadraticSurd::parse(wire), 48);
            return "[" + iv.lo.decimal(10) + ", " + iv.hi.decimal(10) + "]";
        }
        return Rational::parse(wire).decimal(10);
    } catch (const std::exception&) {
        return "?";
    }
}

struct TableRow {
    std::string check;
    std::optional<long> m_lo;
    std::optional<long> m_hi;
    std::size_t reports = 0;
    std::size_t instances = 0;
    std::size_t failed = 0;
    std::vector<Witness> violations;
};

int cmd_report(const std::string& input, const Common& c, std::istream& in, std::ostream& out) {
    std::ifstream file;
    std::istream* src = &in;
    if (input != "-") {
        file.open(input);
        if (!file) {
            throw Operational("cannot read '" + input + "'");
        }
        src = &file;
    }
    std::vector<TableRow> rows;
    std::map<std::string, std::size_t> index;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*src, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        CheckReport r;
        try {
            r = report_from_json(nlohmann::json::parse(line));
        } catch (const std::exception& e) {
            throw Operational("line " + std::to_string(line_no) + ": malformed report (" +
                              e.what() + ")");
        }
        auto [it, fresh] = index.try_emplace(r.check_id, rows.size());
        if (fresh) {
            rows.push_back(TableRow{r.check_id, std::nullopt, std::nullopt, 0, 0, 0, {}});
        }
        TableRow& row = rows[it->second];
        if (r.m) {
            row.m_lo = row.m_lo ? std::min(*row.m_lo, *r.m) : *r.m;
            row.m_hi = row.m_hi ? std::max(*row.m_hi, *r.m) : *r.m;
        }
        ++row.reports;
        row.instances += r.count;
        if (!r.passed()) {
            ++row.failed;
            for (const auto& w : r.witnesses) {
                if (w.kind == WitnessKind::Violation) {
                    row.violations.push_back(w);
                }
            }
        }
    }

    Sink sink(c.out_path, out);
    std::ostream& os = sink.stream();
    if (rows.empty()) {
        os << "no reports\n";
        sink.close();
        return ExitPass;
    }
    std::stable_partition(rows.begin(), rows.end(), [](const TableRow& r) { return r.failed > 0; });

    os << std::left << std::setw(16) << "check" << std::setw(12) << "m-range" << std::setw(9)
       << "verdict" << std::setw(10) << "reports" << "instances\n";
    for (const auto& r : rows) {
        std::string m_range = "-";
        if (r.m_lo) {
            m_range = std::to_string(*r.m_lo) + ".." + std::to_string(*r.m_hi);
        }
        os << std::left << std::setw(16) << r.check << std::setw(12) << m_range << std::setw(9)
           << (r.failed > 0 ? "fail" : "pass") << std::setw(10) << r.reports << r.instances
           << '\n';
        constexpr std::size_t shown = 5;
        for (std::size_t i = 0; i < r.violations.size() && i < shown; ++i) {
            const Witness& w = r.violations[i];
            os << "    witness m=" << (w.m ? std::to_string(*w.m) : "-")
               << " l=" << (w.l ? std::to_string(*w.l) : "-");
            if (!w.label.empty()) {
                os << " [" << w.label << "]";
            }
            os << " lhs=" << w.lhs << " rhs=" << w.rhs << "  (approx lhs " << approx(w.lhs)
               << ", rhs " << approx(w.rhs) << ")\n";
        }
        if (r.violations.size() > shown) {
            os << "    ... " << (r.violations.size() - shown) << " more\n";
        }
    }
    os << "decimals are display-only approximations\n";
    sink.close();
    return ExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact Boros-Moll coefficient and inequality verifier", "bmturan"};
    app.require_subcommand(1);

    Common common;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out_path, "Output path (default stdout)");
        sub->add_option("--jobs", common.jobs_text,
                        "Worker threads, or 'auto' (fallback: BMTURAN_JOBS)");
    };

    long m_max = -1;
    std::string format = "csv";
    std::string method = "recurrence";
    CLI::App* compute = app.add_subcommand("compute", "Write the triangle d_l(m), 0 <= m <= m-max");
    compute->add_option("--m-max", m_max, "Largest m")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--method", method)
        ->check(CLI::IsMember({"recurrence", "direct", "double_sum"}));
    add_common(compute);

    long verify_m_max = 300;
    std::string checks;
    std::string verify_format = "json";
    bool fail_fast = false;
    CLI::App* verify = app.add_subcommand("verify", "Run inequality checks over 1 <= m <= m-max");
    verify->add_option("--m-max", verify_m_max, "Largest m (default 300)");
    verify->add_option("--checks", checks, "Comma-separated check ids (default all)");
    verify->add_option("--format", verify_format, "json (JSON lines) or csv")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_flag("--fail-fast", fail_fast, "Stop after the first failing report");
    add_common(verify);

    std::string cert_checks;
    std::vector<std::string> overrides;
    CLI::App* certify = app.add_subcommand("certify", "Symbolic identity and positivity certificates");
    certify->add_option("--checks", cert_checks, "Comma-separated certificate names");
    certify->add_option("--override", overrides, "NAME=EXPR registry replacement")
        ->group("");
    add_common(certify);

    std::string input = "-";
    CLI::App* report = app.add_subcommand("report", "Summarise a JSON-lines report stream");
    report->add_option("input", input, "Report file ('-' for stdin)");
    add_common(report);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ExitPass : ExitError;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(m_max, format, method, common, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_m_max, checks, verify_format, fail_fast, common, out, err);
        }
        if (certify->parsed()) {
            return cmd_certify(cert_checks, overrides, common, out, err);
        }
        return cmd_report(input, common, in, out);
    } catch (const std::exception& e) {
        err << "bmturan: " << e.what() << '\n';
        return ExitError;
    }
}

}  // namespace bmturan
