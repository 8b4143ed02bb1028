#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bmturan/cli.hpp"
#include "bmturan/coeffs.hpp"
#include "bmturan/triangle_io.hpp"

using namespace bmturan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        n += line.empty() ? 0 : 1;
    }
    return n;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bmturan_test_" + name);
}

}  // namespace

TEST_CASE("compute") {
    const Run r3 = run({"compute", "--m-max", "3", "--format", "csv"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("\n3,1,43,4\n") != std::string::npos);
    CHECK(r3.out.find("# method=recurrence\nm,l,numerator,denominator\n") == 0);
    CHECK(count_lines(r3.out) == 2 + 10);

    const Run r0 = run({"compute", "--m-max", "0"});
    CHECK(r0.code == 0);
    CHECK(r0.out == "# method=recurrence\nm,l,numerator,denominator\n0,0,1,1\n");

    const Run j = run({"compute", "--m-max", "1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find(R"("rows":[["1/1"],["3/2","1/1"]])") != std::string::npos);

    const Run d = run({"compute", "--m-max", "6", "--method", "double_sum"});
    CHECK(d.out.find("# method=double_sum") == 0);
}

TEST_CASE("compute round trips through files") {
    const auto csv = temp_file("tri.csv");
    const auto json = temp_file("tri.json");
    CHECK(run({"compute", "--m-max", "30", "--out", csv.string()}).code == 0);
    CHECK(run({"compute", "--m-max", "30", "--format", "json", "--out", json.string()}).code == 0);
    std::ifstream a(csv);
    std::ifstream b(json);
    const BMTriangle expected = BMTriangle::compute(30);
    CHECK(read_triangle_csv(a) == expected);
    CHECK(read_triangle_json(b) == expected);
    std::filesystem::remove(csv);
    std::filesystem::remove(json);
}

TEST_CASE("verify") {
    const Run vac = run({"verify", "--m-max", "2", "--checks", "hot"});
    CHECK(vac.code == 0);
    CHECK(vac.out.empty());
    CHECK(vac.err.find("vacuous") != std::string::npos);

    const Run hot = run({"verify", "--m-max", "40", "--checks", "hot"});
    CHECK(hot.code == 0);
    CHECK(count_lines(hot.out) == 38);
    CHECK(hot.err.find(std::to_string(38 * 39 / 2) + " instances") != std::string::npos);

    const Run csv = run({"verify", "--m-max", "5", "--checks", "log_concavity", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("check,m,verdict,count,l,lhs,rhs,note\n") == 0);
    CHECK(count_lines(csv.out) == 6);
}

TEST_CASE("verify output is identical for any job count") {
    const Run a = run({"verify", "--m-max", "30", "--jobs", "1"});
    const Run b = run({"verify", "--m-max", "30", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    ::setenv("BMTURAN_JOBS", "3", 1);
    const Run c = run({"verify", "--m-max", "30"});
    ::setenv("BMTURAN_JOBS", "zero", 1);
    const Run bad = run({"verify", "--m-max", "3"});
    ::unsetenv("BMTURAN_JOBS");
    CHECK(c.out == a.out);
    CHECK(bad.code == 2);
}

TEST_CASE("exit-code contract for operational errors") {
    CHECK(run({"verify", "--checks", "hot,bogus"}).code == 2);
    CHECK(run({"verify", "--m-max", "0"}).code == 2);
    CHECK(run({"verify", "--m-max", "x"}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"compute", "--m-max", "-1"}).code == 2);
    CHECK(run({"compute", "--m-max", "3", "--format", "xml"}).code == 2);
    CHECK(run({"compute", "--m-max", "3", "--out", "/nonexistent-dir/x.csv"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"certify", "--checks", "bogus"}).code == 2);
    CHECK(run({"certify", "--override", "C1"}).code == 2);
    CHECK(run({"certify", "--override", "C1=m+"}).code == 2);
}

TEST_CASE("certify") {
    const Run all = run({"certify"});
    CHECK(all.code == 0);
    const auto doc = nlohmann::json::parse(all.out);
    CHECK(doc["summary"]["identities_passed"] == doc["summary"]["identities_total"]);
    CHECK(doc["summary"]["positivity_passed"] == 8);

    const Run one = run({"certify", "--checks", "lemma23_id2"});
    CHECK(one.code == 0);
    const auto single = nlohmann::json::parse(one.out);
    CHECK(single["identities"].size() == 1);
    CHECK(single["positivity"].empty());

    const Run broken = run({"certify", "--override", "C2=(m+l^2)(4m^2+7m-2l^2+4)"});
    CHECK(broken.code == 1);
    CHECK(broken.err.find("lemma23_") != std::string::npos);

    const Run not_positive = run({"certify", "--checks", "F", "--override", "F=m-2n"});
    CHECK(not_positive.code == 1);
    CHECK(not_positive.err.find("'F'") != std::string::npos);
}

TEST_CASE("report") {
    const Run empty = run({"report"}, "");
    CHECK(empty.code == 0);
    CHECK(empty.out == "no reports\n");

    const Run stream = run({"verify", "--m-max", "6", "--checks", "hot"});
    const Run one = run({"report"}, stream.out);
    CHECK(one.code == 0);
    CHECK(count_lines(one.out) == 3);  // header, one row, trailer
    CHECK(one.out.find("hot             3..6") != std::string::npos);

    const std::string fail_line =
        R"j({"check":"log_concavity","m":4,"l":2,"verdict":"fail","lhs":"1/2","rhs":"1/1 + 1/2*sqrt(2/1)","note":"","count":3,"params":"l=1..3","witnesses":[{"m":4,"l":2,"lhs":"1/2","rhs":"1/1 + 1/2*sqrt(2/1)","kind":"violation","label":""}]})j";
    const Run mixed = run({"report"}, stream.out + fail_line + "\n");
    CHECK(mixed.code == 0);
    const auto fail_pos = mixed.out.find("log_concavity");
    const auto pass_pos = mixed.out.find("hot ");
    CHECK(fail_pos < pass_pos);
    CHECK(mixed.out.find("witness m=4 l=2") != std::string::npos);
    CHECK(mixed.out.find("[1.7071067811, 1.7071067811]") != std::string::npos);

    const Run bad = run({"report"}, stream.out + "{not json\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 5") != std::string::npos);
    CHECK(run({"report", "/nonexistent/file"}).code == 2);
}
