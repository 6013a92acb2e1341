#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "output.hpp"

using namespace weber::cli;

TEST_CASE("number formatting") {
    CHECK(format_number(0.0, 15) == "0");
    CHECK(format_number(-0.5, 15) == "-0.5");
    CHECK(format_number(-0.125001664979454, 15) == "-0.125001664979454");
    CHECK(format_number(123456.0, 15) == "123456");
    CHECK(format_number(1e6, 15) == "1e+06");
    CHECK(format_number(4.16244863521431e-07, 15) == "4.16244863521431e-07");
    CHECK(format_number(1e-6, 15) == "0.000001");
    CHECK(format_number(1.0 / 3.0, 6) == "0.333333");
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN(), 15) == "nan");
    CHECK(format_number(-std::numeric_limits<double>::infinity(), 15) == "-inf");
}

TEST_CASE("json numbers") {
    CHECK(json_number(1.0 / 3.0, 6).get<double>() == 0.333333);
    CHECK(json_number(std::numeric_limits<double>::quiet_NaN(), 15).is_null());
}

TEST_CASE("csv writer") {
    std::ostringstream os;
    CsvWriter w(os, 15);
    w.comment("test v1");
    w.header({"a", "b", "c"});
    w.field(0.5).field(3L).field(std::string("x,y"));
    w.end_row();
    w.field(std::string("say \"hi\"")).field(1e-9).field(std::string("ok"));
    w.end_row();
    CHECK(os.str() == "# test v1\na,b,c\n0.5,3,\"x,y\"\n\"say \"\"hi\"\"\",1e-09,ok\n");
}
