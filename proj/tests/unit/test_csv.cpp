#include <stdexcept>
#include <string>

#include "dicke/csv.hpp"
#include "doctest.h"

using namespace dicke;

namespace {

RecordRow sample_row() {
    RecordRow row;
    row.lambda = 0.4;
    row.record.e0 = -0.2;
    row.record.gap = 0.6;
    row.record.n_photon = 1.0 / 15.0;
    row.record.var_n = 0.123456789012345;
    row.record.q = 17.0 / 15.0;
    row.record.var_x1 = 5.0 / 12.0;
    row.record.var_x2 = 0.15;
    row.record.converged = true;
    row.record.cutoff = 64;
    row.status = "ok";
    return row;
}

}  // namespace

TEST_CASE("numeric formatting uses 12 significant digits") {
    CHECK(format_value(0.0) == "0");
    CHECK(format_value(-0.2) == "-0.2");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(format_value(1.0 / 15.0) == "0.0666666666667");
    CHECK(format_value(123456789012.0) == "123456789012");
    CHECK(format_value(1e-300) == "1e-300");
    CHECK(format_value(-2.5e20) == "-2.5e+20");

    CHECK(format_optional(std::nullopt) == "NA");
    CHECK(format_optional(0.15) == "0.15");
    CHECK(std::string(kNaToken) == "NA");
}

TEST_CASE("record rows round-trip through format and parse") {
    const std::string header(kRecordHeader);
    CHECK(header == "lambda,e0,gap,n_photon,var_n,q,var_x1,var_x2,converged,cutoff,status");

    RecordRow row = sample_row();
    SUBCASE("engaged q, converged") {}
    SUBCASE("undefined q") { row.record.q.reset(); }
    SUBCASE("not converged") {
        row.record.converged = false;
        row.status = "not_converged";
    }
    SUBCASE("pinned cutoff") { row.status = "fixed_cutoff"; }
    SUBCASE("pole") {
        row.status = "pole";
        row.record.q.reset();
    }

    const std::string line = format_record_row(row);
    const RecordRow back = parse_record_row(line);
    CHECK(back.lambda == doctest::Approx(row.lambda).epsilon(1e-12));
    CHECK(back.record.converged == row.record.converged);
    CHECK(back.record.cutoff == row.record.cutoff);
    CHECK(back.record.q.has_value() == row.record.q.has_value());
    CHECK(back.status == row.status);
    // byte-exact second pass: parse(format(x)) formats to the same line
    CHECK(format_record_row(back) == line);
}

TEST_CASE("a formatted row has the documented shape") {
    const std::string line = format_record_row(sample_row());
    CHECK(line ==
          "0.4,-0.2,0.6,0.0666666666667,0.123456789012,1.13333333333,"
          "0.416666666667,0.15,1,64,ok");
}

TEST_CASE("malformed rows are rejected") {
    const std::string good = format_record_row(sample_row());
    CHECK_NOTHROW(parse_record_row(good));

    // wrong field count
    CHECK_THROWS_AS(parse_record_row("0.4,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row(good + ",extra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row(good + ","), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row(""), std::invalid_argument);

    // converged must be exactly 0 or 1
    CHECK_THROWS_AS(parse_record_row("0.4,-0.2,0.6,0.1,0.1,NA,0.4,0.15,2,64,ok"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row("0.4,-0.2,0.6,0.1,0.1,NA,0.4,0.15,true,64,ok"),
                    std::invalid_argument);

    // numeric fields must parse completely
    CHECK_THROWS_AS(parse_record_row("x,-0.2,0.6,0.1,0.1,NA,0.4,0.15,1,64,ok"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row("0.4z,-0.2,0.6,0.1,0.1,NA,0.4,0.15,1,64,ok"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row("0.4,-0.2,0.6,0.1,0.1,0.3q,0.4,0.15,1,64,ok"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record_row("0.4,-0.2,0.6,0.1,0.1,NA,0.4,0.15,1,6.5,ok"),
                    std::invalid_argument);

    // status must be non-empty
    CHECK_THROWS_AS(parse_record_row("0.4,-0.2,0.6,0.1,0.1,NA,0.4,0.15,1,64,"),
                    std::invalid_argument);
}
