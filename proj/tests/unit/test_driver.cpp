#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frobvol/driver/descriptor.hpp"
#include "frobvol/driver/problem.hpp"
#include "frobvol/driver/tasks.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/poly/text.hpp"

using namespace frobvol;
using namespace frobvol::driver;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bundled descriptors round-trip and match the built-ins") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto d = builtin_descriptor(name);
        CHECK(parse_descriptor(print_descriptor(d)) == d);
        const std::string path = std::string(FROBVOL_DESCRIPTOR_DIR) + "/" + name + ".json";
        const auto text = read_file(path);
        REQUIRE_FALSE(text.empty());
        CHECK(parse_descriptor(text) == d);
        CHECK(load_descriptor(path) == d);
    }
}

TEST_CASE("descriptor parse errors carry a position") {
    try {
        parse_descriptor("{\n  \"name\": \"x\",\n  \"ring\": [1,,2]\n}");
        FAIL("no error");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("column") != std::string::npos);
    }
    auto j = descriptor_to_json(builtin_descriptor("pfaffian3"));
    j["bogus"] = 1;
    CHECK_THROWS_AS(descriptor_from_json(j), ParseError);
    j = descriptor_to_json(builtin_descriptor("pfaffian3"));
    j["ring"]["field"]["kind"] = "real";
    CHECK_THROWS_AS(descriptor_from_json(j), ParseError);
}

TEST_CASE("core directives") {
    auto b = build_core("pfaffian:m=3");
    CHECK(poly::to_string(b.core) == "z1_2*z1_3*z2_3");
    CHECK(build_core("tom:S=[0]").core.size() == 16);
    CHECK(build_core("jerry:S=[1]").core.size() > 0);
    CHECK(build_core("char3pfaffian:abc=(3,4,5)").core.size() > 0);
    CHECK_THROWS_AS(build_core("nonsense:x=1"), UnknownCore);
    CHECK_THROWS_AS(build_core("tom:S=[7]"), Error);
    CHECK(is_directive("tom:S=[0]"));
    CHECK_FALSE(is_directive("x^2"));
}

TEST_CASE("resolution specs round-trip through complexes") {
    const auto d = builtin_descriptor("pfaffian5");
    const auto pr = materialize(d);
    const auto cx = complex_from_spec(*d.resolution, pr.inst.ring, pr.inst.field);
    CHECK(complex_to_spec(cx) == *d.resolution);
}

TEST_CASE("hilbert numerators from twists") {
    CHECK(hilbert_from_twists({{0}, {-2, -2, -2, -2, -2}, {-3, -3, -3, -3, -3}, {-5}}) ==
          std::vector<int64_t>{1, 3, 1});
    CHECK(hilbert_from_twists({{0}, std::vector<int>(9, -2), std::vector<int>(16, -3), std::vector<int>(9, -4), {-6}}) ==
          std::vector<int64_t>{1, 4, 1});
    CHECK(hilbert_from_twists({{0}, {-2}}) == std::vector<int64_t>{1, 1});
    CHECK_THROWS_AS(hilbert_from_twists({{0}, {-2, -2}, {-3}}), InvalidInput);
}

TEST_CASE("reports") {
    RunOptions opt;
    auto d = builtin_descriptor("pfaffian3");
    d.tasks.clear();
    auto empty = run_descriptor(d, opt);
    CHECK(empty["tasks"].empty());
    CHECK(exit_code(empty) == 0);
    CHECK(Json::parse(emit_report(empty, "json")) == empty);

    d.tasks = {TaskSpec{"hilbert", Json{{"expect", Json::array({1, 2})}}}};
    auto bad = run_descriptor(d, opt);
    CHECK(exit_code(bad) == 1);
    const auto& t = bad["tasks"][0];
    CHECK(t["verdict"] == "FAIL");
    REQUIRE(t.contains("witness"));
    CHECK(t["witness"].get<std::string>().find("expected [1,2]") != std::string::npos);

    d.tasks = {TaskSpec{"no-such-task", Json::object()}};
    auto unknown = run_descriptor(d, opt);
    CHECK(unknown["tasks"][0]["verdict"] == "FAIL");
    CHECK(unknown["tasks"][0].contains("error"));
    CHECK_THROWS_AS(emit_report(unknown, "xml"), InvalidInput);
}

TEST_CASE("pfaffian-core on the bundled instance") {
    auto d = builtin_descriptor("pfaffian5");
    d.tasks = {TaskSpec{"pfaffian-core", Json::object()}};
    auto rep = run_descriptor(d, RunOptions{});
    CHECK(rep["tasks"][0]["verdict"] == "PASS");
}

TEST_CASE("runs are deterministic and seeded") {
    auto d = builtin_descriptor("pfaffian5");
    d.tasks = {TaskSpec{"hilbert", Json::object()}, TaskSpec{"check-lefschetz", Json::object()}};
    RunOptions a;
    RunOptions b;
    b.parallel = true;
    CHECK(emit_report(run_descriptor(d, a), "json") == emit_report(run_descriptor(d, b), "json"));
    RunOptions c;
    c.seed = 99;
    const auto other = run_descriptor(d, c);
    CHECK(other["seed"] == 99);
    CHECK(exit_code(other) == 0);
}
