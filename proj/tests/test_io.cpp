#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "lcvanish/instance_io.hpp"

using namespace lcv;

TEST_CASE("instance text parses with all keys") {
    const std::string text =
        "# a comment\n"
        "name = demo\n"
        "n = 2\n"
        "generators = [\"x1\", \"x1*x2 - 3\"]\n"
        "expected = NONVANISHING\n";
    InstanceFile f = parse_instance_text(text, "demo.inst");
    CHECK(f.name == "demo");
    CHECK(f.n == 2);
    REQUIRE(f.generators.size() == 2);
    CHECK(f.generator_text[1] == "x1*x2 - 3");
    CHECK(f.expected == "NONVANISHING");
}

TEST_CASE("instance parse errors are anchored") {
    auto message_of = [](const std::string& text) {
        try {
            parse_instance_text(text, "bad.inst");
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    // unknown variable inside a generator: column is reported
    std::string m =
        message_of("n = 2\ngenerators = [\"x1 + x7\"]\n");
    CHECK(m.find("bad.inst") != std::string::npos);
    CHECK(m.find("column") != std::string::npos);
    // missing n
    CHECK(message_of("generators = [\"x1\"]\n").find("'n'") != std::string::npos);
    // missing generators
    CHECK(message_of("n = 1\n").find("generators") != std::string::npos);
    // malformed list with its line number
    CHECK(message_of("n = 1\ngenerators = x1\n").find(":2:") != std::string::npos);
    // unknown key
    CHECK(message_of("n = 1\ngenerators = [\"x1\"]\nfoo = 1\n").find("foo") !=
          std::string::npos);
    // bad expected value
    CHECK(!message_of("n = 1\ngenerators = [\"x1\"]\nexpected = MAYBE\n").empty());
}

TEST_CASE("reports serialize to well-formed JSON with a stable schema") {
    Report r;
    r.instance_name = "demo";
    r.p = 3;
    r.degree = 2;
    r.verdict.result = ResultKind::NONVANISHING;
    r.verdict.mode = Mode::compare;
    r.verdict.witness = Witness{1, {0, 1}, 0};
    r.verdict.r = 1;
    r.verdict.u = 2;
    r.verdict.counters.tuples = 9;
    r.warnings.push_back("note");
    r.wall_ms = 1.5;

    auto j = nlohmann::json::parse(r.to_json(true));
    CHECK(j["instance"] == "demo");
    CHECK(j["p"] == 3);
    CHECK(j["degree"] == 2);
    CHECK(j["verdict"] == "NONVANISHING");
    CHECK(j["mode"] == "compare");
    CHECK(j["witness"]["j"] == 1);
    CHECK(j["witness"]["offset"] == nlohmann::json({0, 1}));
    CHECK(j["witness"]["generator_index"] == 0);
    CHECK(j["r"] == 1);
    CHECK(j["u"] == 2);
    CHECK(j["counters"]["tuples"] == 9);
    CHECK(j["warnings"][0] == "note");
    CHECK(j.contains("wall_ms"));

    auto j2 = nlohmann::json::parse(r.to_json(false));
    CHECK(!j2.contains("wall_ms"));

    // without timings the serialization is byte-stable
    CHECK(r.to_json(false) == r.to_json(false));

    Report v;
    v.verdict.result = ResultKind::VANISHES;
    auto jv = nlohmann::json::parse(v.to_json(false));
    CHECK(jv["witness"].is_null());
    CHECK(jv["r"].is_null());
}

TEST_CASE("csv rows line up with the header") {
    auto count_fields = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',') + 1;
    };
    Report r;
    r.p = 5;
    r.verdict.result = ResultKind::VANISHES;
    CHECK(count_fields(report_csv_header()) == count_fields(report_csv_row(r, true)));
    CHECK(count_fields(report_csv_header()) ==
          count_fields(report_csv_row(r, false)));
    CHECK(report_csv_row(r, false).find("VANISHES") != std::string::npos);
}

TEST_CASE("summary mentions the verdict") {
    Report r;
    r.instance_name = "demo";
    r.p = 2;
    r.degree = 1;
    r.verdict.result = ResultKind::INCONCLUSIVE;
    r.verdict.reason = "because";
    std::string s = report_summary(r);
    CHECK(s.find("INCONCLUSIVE") != std::string::npos);
    CHECK(s.find("because") != std::string::npos);
}
