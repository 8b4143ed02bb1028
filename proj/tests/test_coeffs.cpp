#include <doctest.h>

#include <sstream>

#include "bmturan/coeffs.hpp"
#include "bmturan/triangle_io.hpp"

using namespace bmturan;

namespace {

Row parse_row(std::initializer_list<const char*> items) {
    Row row;
    for (const char* s : items) {
        row.push_back(Rational::parse(s));
    }
    return row;
}

}  // namespace

TEST_CASE("oracle rows 0..4") {
    const std::vector<Row> expected{
        parse_row({"1"}),
        parse_row({"3/2", "1"}),
        parse_row({"21/8", "15/4", "3/2"}),
        parse_row({"77/16", "43/4", "35/4", "5/2"}),
        parse_row({"1155/128", "885/32", "1095/32", "315/16", "35/8"}),
    };
    for (const auto method : {CoeffMethod::DirectSum, CoeffMethod::DoubleSum, CoeffMethod::Recurrence}) {
        const BMTriangle tri = BMTriangle::compute(4, method);
        for (long m = 0; m <= 4; ++m) {
            CHECK(tri.row(m) == expected[m]);
        }
    }
    CHECK(d_direct(3, 1) == Rational(43, 4));
}

TEST_CASE("binomial and corner values") {
    CHECK(binom(10, 3) == 120);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(3, -1) == 0);
    CHECK_THROWS(binom(-1, 0));
    for (long m = 0; m <= 30; ++m) {
        CHECK(corner_value(m) == d_direct(m, m));
    }
    CHECK_THROWS_AS(d_direct(2, 3), std::out_of_range);
}

TEST_CASE("three methods agree up to m = 60") {
    const BMTriangle rec = BMTriangle::compute(60, CoeffMethod::Recurrence);
    const BMTriangle direct = BMTriangle::compute(60, CoeffMethod::DirectSum, 2);
    const BMTriangle dbl = BMTriangle::compute(60, CoeffMethod::DoubleSum, 3);
    CHECK(compare_triangles(rec, direct).passed());
    CHECK(compare_triangles(rec, dbl).passed());
}

TEST_CASE("triangle invariants and mixed recurrences") {
    const BMTriangle tri = BMTriangle::compute(40);
    CHECK(check_triangle_invariants(tri).passed());
    const CheckReport rec = check_mixed_recurrences(tri);
    CHECK(rec.passed());
    CHECK(rec.check_id == "mixed_rec");
    const CheckReport at3 = check_mixed_recurrences_at(tri, 3);
    CHECK(at3.count == 2 * 5);  // l = 0..4, two identities each
}

TEST_CASE("perturbed entry breaks a mixed recurrence at that entry") {
    const BMTriangle tri = BMTriangle::compute(12);
    const BMTriangle bad = tri.with_entry(7, 3, tri.at(7, 3) + pow2(-14));
    CHECK_FALSE((check_triangle_invariants(bad).passed() && check_mixed_recurrences(bad).passed()));
    const CheckReport r = check_mixed_recurrences(bad);
    REQUIRE_FALSE(r.passed());
    bool touches = false;
    for (const auto& w : r.witnesses) {
        touches = touches || ((w.m == 7 || w.m == 6) && w.l.has_value());
    }
    CHECK(touches);
    const CheckReport cmp = compare_triangles(tri, bad);
    CHECK_FALSE(cmp.passed());
    REQUIRE(cmp.witnesses.size() == 1);
    CHECK(cmp.witnesses[0].m == 7);
    CHECK(cmp.witnesses[0].l == 3);
}

TEST_CASE("ratios") {
    const BMTriangle tri = BMTriangle::compute(5);
    CHECK(vertical_ratio(tri, 2, 1) == Rational(43, 15));
    CHECK(vertical_ratio(tri, 2, 2) == Rational(35, 6));
    CHECK(vertical_ratio(tri, 3, 2) == Rational(219, 56));
    CHECK(turan_ratio(tri, 2, 1) == Rational(25, 7));
    CHECK(turan_ratio(tri, 3, 1) == Rational(7396, 2695));
    CHECK(turan_ratio(tri, 3, 2) == Rational(245, 86));
    CHECK(tri.at_or_zero(3, -1) == Rational(0));
    CHECK(tri.at_or_zero(3, 4) == Rational(0));
    CHECK_THROWS_AS((void)tri.at(3, 4), std::out_of_range);
}

TEST_CASE("recurrence step validates its inputs") {
    const Row r0 = row_direct(3);
    const Row r1 = row_direct(4);
    CHECK(row_from_recurrence(r0, r1, 3) == row_direct(5));
    CHECK_THROWS_AS(row_from_recurrence(r1, r0, 3), std::invalid_argument);
}

TEST_CASE("csv and json round trip") {
    const BMTriangle tri = BMTriangle::compute(25);
    std::stringstream csv;
    write_triangle_csv(csv, tri);
    CHECK(read_triangle_csv(csv) == tri);
    std::stringstream json;
    write_triangle_json(json, tri);
    const BMTriangle back = read_triangle_json(json);
    CHECK(back == tri);
    CHECK(back.method() == CoeffMethod::Recurrence);

    std::stringstream broken("m,l,numerator,denominator\n0,0,1,1\n1,1,1,1\n");
    CHECK_THROWS(read_triangle_csv(broken));
    std::stringstream bad_json(R"({"method":"direct","m_max":1,"rows":[["1/1"]]})");
    CHECK_THROWS(read_triangle_json(bad_json));
}
