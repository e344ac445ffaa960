#include "hypcox/report.hpp"

#include <doctest.h>

using namespace hypcox;
using namespace hypcox::report;

namespace {

const TableReport& cached_table()
{
    static const TableReport t = table(RunConfig{});
    return t;
}

}  // namespace

TEST_CASE("exact decimals")
{
    CHECK(decimal_string(Rational(1, 3), 4) == "0.3333");
    CHECK(decimal_string(Rational(2, 3), 4) == "0.6667");
    CHECK(decimal_string(Rational(1, 8), 2) == "0.13");
    CHECK(decimal_string(Rational(-1, 8), 2) == "-0.13");
    CHECK(decimal_string(Rational(-1, 1000), 2) == "0.00");
    CHECK(decimal_string(Rational(7), 0) == "7");
    CHECK(decimal_string(Rational(5, 2), 0) == "3");
    CHECK(decimal_string(Rational(100), 2) == "100.00");
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("37/1440") == Rational(37, 1440));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(to_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("format names")
{
    CHECK(parse_format("text") == OutputFormat::Text);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("structured") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("component forms and metadata")
{
    CHECK(component_form(0).diagonal_entries() == IntVector{-1, 1, 1, 1, 1});
    CHECK(component_form(2).diagonal_entries() == IntVector{-1, 1, 1, 3, 3});
    CHECK(component_form(4).diagonal_entries() == IntVector{-1, 3, 3, 3, 3});
    CHECK_THROWS_AS(component_form(5), std::out_of_range);
    CHECK(component_metadata(0).real_lines == 27);
    CHECK(component_metadata(1).real_lines == 15);
    CHECK(component_metadata(2).real_lines == 7);
    CHECK(component_metadata(3).real_lines == 3);
    CHECK(component_metadata(4).real_lines == 3);
    CHECK(component_metadata(0).topology == "RP2 + 3 handles");
    CHECK(component_metadata(4).topology == "RP2 u S2");
    CHECK_FALSE(component_metadata(3).orbifold_group.has_value());
    CHECK_FALSE(component_metadata(4).orbifold_group.has_value());
    CHECK_THROWS_AS(component_metadata(-1), std::out_of_range);
}

TEST_CASE("table rows")
{
    const auto& t = cached_table();
    REQUIRE(t.rows.size() == 5);
    const std::vector<Rational> chi{Rational(1, 1920), Rational(1, 288), Rational(5, 576), Rational(1, 96),
                                    Rational(1, 384)};
    const std::vector<std::string> pct{"2.03", "13.51", "33.78", "40.54", "10.14"};
    Rational sum = 0;
    for (std::size_t j = 0; j < 5; ++j) {
        const auto& r = t.rows[j];
        CHECK(r.j == static_cast<int>(j));
        CHECK(r.chi_pgamma == chi[j]);
        CHECK(r.chi_pgamma * static_cast<long>(r.automorphism_order) == r.chi_w);
        CHECK(r.volume_coefficient == Rational(4, 3) * chi[j]);
        CHECK(r.percentage == pct[j]);
        CHECK(r.facet_count == r.roots.size());
        CHECK(r.metadata == component_metadata(static_cast<int>(j)));
        sum += r.fraction;
    }
    CHECK(sum == 1);
    CHECK(t.totals.chi == Rational(37, 1440));
    CHECK(t.totals.volume_coefficient == Rational(37, 1080));
    CHECK(t.totals.volume_numeric == "0.33813");
    CHECK(t.totals.percentage == "100.00");
}

TEST_CASE("text table")
{
    const std::string text = serialize(cached_table(), OutputFormat::Text);
    CHECK(text.find("total  37/1440  0.33813  100.00%\n") != std::string::npos);
    CHECK(text.find("5/576") != std::string::npos);
    CHECK(text.find("# diagram j=4") != std::string::npos);
    CHECK(text.find("RP2 + 3 handles") != std::string::npos);
    CHECK(serialize(cached_table(), OutputFormat::Text) == text);
}

TEST_CASE("json round trip")
{
    const auto& t = cached_table();
    const std::string json = serialize(t, OutputFormat::Json);
    const TableReport back = parse_table_json(json);
    CHECK(back == t);
    CHECK(serialize(back, OutputFormat::Json) == json);
    CHECK_THROWS_AS(parse_table_json("{"), FormatError);
    CHECK_THROWS_AS(parse_table_json("{\"precision\": 5}"), FormatError);
    CHECK_THROWS_AS(parse_table_json("[]"), FormatError);
}

TEST_CASE("precision controls volume decimals only")
{
    RunConfig cfg;
    cfg.precision = 12;
    const auto t = table(cfg);
    CHECK(t.totals.volume_numeric == "0.338125335963");
    CHECK(t.rows[0].volume_numeric == "0.006853891945");
    CHECK(t.rows[2].percentage == "33.78");
}

TEST_CASE("a component that hits its limits names itself")
{
    RunConfig cfg;
    cfg.limits.max_roots = 5;
    try {
        table(cfg);
        FAIL("expected ComponentError");
    } catch (const ComponentError& e) {
        CHECK(e.component() == 1);
        CHECK(std::string(e.what()).find("component j=1") != std::string::npos);
        CHECK(e.partial().accepted.size() == 6);
    }
}

TEST_CASE("vinberg report")
{
    const auto q = QuadraticForm::diagonal({-1, 1, 1});
    const auto state = run_vinberg(q, {1, 0, 0});
    const std::string text = serialize_vinberg(state, OutputFormat::Text);
    CHECK(text.find("root 1,-1,-1 norm=1 height=1\n") != std::string::npos);
    CHECK(text.find("bond 0 2 inf") != std::string::npos);
    const std::string json = serialize_vinberg(state, OutputFormat::Json);
    CHECK(json.find("\"complete\": true") != std::string::npos);
}
