#include <gtest/gtest.h>

#include <sstream>

#include "qlambda/qlambda.hpp"

using namespace qlambda;
using namespace qlambda::io;

namespace {

OutputRecord rational_record() {
    OutputRecord r;
    r.family = "E";
    r.indices = {3};
    r.params = {{"q", "1/2"}, {"lambda", "rou:1/0"}, {"x", "0"}};
    r.value = Rational(-7, 12);
    r.mode = "closed";
    return r;
}

OutputRecord complex_record() {
    OutputRecord r = rational_record();
    r.params = {{"q", "0.3"}, {"lambda", "rou:3/1"}, {"x", "0.5"}};
    r.value = Complex(0.1 + 0.2, -1.0 / 3.0);
    r.mode = "series";
    return r;
}

OutputRecord padic_record() {
    OutputRecord r;
    r.family = "fermionic";
    r.indices = {2};
    r.params = {{"p", "5"}, {"N", "3"}, {"M", "12"}, {"q", "1+p"}, {"lambda", "6"}, {"c", "-1"}, {"x0", "0"}};
    r.value = PAdicValue::from(padic::PAdicNumber::from_rational(5, Rational(250, 7), 12));
    r.mode = "riemann-sum";
    r.extra = {{"residual_valuation", "3"}};
    return r;
}

OutputRecord error_record() {
    OutputRecord r = rational_record();
    r.value = std::monostate{};
    r.error = ErrorInfo{"pole", "euler_q: lambda = -1, with a \"quote\", and a comma"};
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l)) out.push_back(l);
    return out;
}

} // namespace

TEST(Jsonl, RoundTripIsExact) {
    for (const auto& r : {rational_record(), complex_record(), padic_record(), error_record()}) {
        const std::string line = render_jsonl(r);
        EXPECT_EQ(line.find('\n'), std::string::npos);
        EXPECT_EQ(parse_jsonl(line), r) << line;
    }
}

TEST(Jsonl, CarriesSchemaVersionAndExactRationals) {
    const auto j = nlohmann::json::parse(render_jsonl(rational_record()));
    EXPECT_EQ(j.at("schema"), std::string(kSchemaVersion));
    EXPECT_EQ(j.at("value").at("num"), "-7");
    EXPECT_EQ(j.at("value").at("den"), "12");
}

TEST(Jsonl, MalformedInputIsParseError) {
    EXPECT_THROW(parse_jsonl("{not json"), ParseError);
    EXPECT_THROW(parse_jsonl(R"({"schema":"other/9"})"), ParseError);
}

TEST(Csv, ScalarRoundTrip) {
    for (const auto& r : {rational_record(), complex_record(), error_record()}) {
        const std::string row = render_csv_row(r, false);
        EXPECT_EQ(parse_csv_row(row, false), r) << row;
    }
}

TEST(Csv, PAdicRoundTrip) {
    const auto r = padic_record();
    EXPECT_EQ(parse_csv_row(render_csv_row(r, true), true), r);
}

TEST(Csv, HeaderFirstAndOneRowPerRecord) {
    const auto out = lines(render({rational_record(), complex_record()}, Format::Csv));
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0].rfind("family,n,q,lambda,x,mode,value_re,value_im", 0), 0u);
    const auto p = lines(render({padic_record()}, Format::Csv));
    EXPECT_EQ(p[0].rfind("family,n,p,N,M,q,lambda,mode,val,unit,precision", 0), 0u);
}

TEST(Csv, QuotingSurvivesCommasAndQuotes) {
    const std::vector<std::string> cells = {"a,b", "say \"hi\"", "", "plain"};
    EXPECT_EQ(csv_split(csv_join(cells)), cells);
}

TEST(Table, AlignsColumnsAndShowsErrors) {
    const auto out = lines(render({rational_record(), error_record()}, Format::Table));
    ASSERT_GE(out.size(), 3u);
    EXPECT_NE(out.back().find("pole"), std::string::npos);
    EXPECT_NE(render({rational_record()}, Format::Table).find("-7/12"), std::string::npos);
}

TEST(FloatFormatting, SeventeenDigitsRoundTrip) {
    for (double v : {0.1 + 0.2, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Validation, AcceptsWellFormedRecords) {
    for (const auto& r : {rational_record(), complex_record(), padic_record(), error_record()})
        EXPECT_TRUE(validate_record(r).empty());
}

TEST(Validation, RejectsMalformedRecords) {
    OutputRecord both = rational_record();
    both.error = ErrorInfo{"pole", "x"};
    EXPECT_FALSE(validate_record(both).empty());

    OutputRecord neither = rational_record();
    neither.value = std::monostate{};
    EXPECT_FALSE(validate_record(neither).empty());

    OutputRecord nan = complex_record();
    nan.value = Complex(std::nan(""), 0.0);
    EXPECT_FALSE(validate_record(nan).empty());

    OutputRecord bad_unit = padic_record();
    std::get<PAdicValue>(bad_unit.value).unit = 25;
    EXPECT_FALSE(validate_record(bad_unit).empty());

    OutputRecord unnamed = rational_record();
    unnamed.family.clear();
    EXPECT_FALSE(validate_record(unnamed).empty());
}

TEST(ParameterGrammar, Rationals) {
    EXPECT_EQ(std::get<Rational>(parse_q("1/2")), Rational(1, 2));
    EXPECT_EQ(std::get<Rational>(parse_q("-6/4")), Rational(-3, 2));
    EXPECT_EQ(std::get<Rational>(parse_lambda("+3")), Rational(3));
    EXPECT_THROW(parse_q("1/0"), ParseError);
}

TEST(ParameterGrammar, RootsOfUnity) {
    EXPECT_EQ(std::get<RootOfUnity>(parse_lambda("rou:3/1")), RootOfUnity(3, 1));
    EXPECT_TRUE(std::get<RootOfUnity>(parse_lambda("rou:2/1")).is_minus_one());
    EXPECT_THROW(parse_lambda("rou:3"), ParseError);
    EXPECT_THROW(parse_lambda("rou:0/1"), Error);
    EXPECT_THROW(parse_q("rou:3/1"), ParseError);
}

TEST(ParameterGrammar, ComplexAndReal) {
    EXPECT_EQ(std::get<Complex>(parse_lambda("0.5,-1.5")), Complex(0.5, -1.5));
    EXPECT_EQ(std::get<Complex>(parse_q("0.25")), Complex(0.25, 0.0));
    EXPECT_DOUBLE_EQ(parse_real("3/4"), 0.75);
    EXPECT_THROW(parse_real("1,2"), ParseError);
    EXPECT_THROW(parse_complex("abc"), ParseError);
    EXPECT_THROW(parse_complex("1,"), ParseError);
}

TEST(Formats, ParseNames) {
    EXPECT_EQ(parse_format("jsonl"), Format::Jsonl);
    EXPECT_EQ(to_string(Format::Csv), "csv");
    EXPECT_THROW(parse_format("xml"), ParseError);
}
