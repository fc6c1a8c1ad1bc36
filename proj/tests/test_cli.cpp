#include "toricic/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using toricic::cli::json;

namespace {

const std::string fixtures = TORICIC_FIXTURES;

struct Result {
    int code;
    std::string out;
    std::string err;
    json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "toricic");
    std::ostringstream out, err;
    const int code = toricic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("toricic_test_" + name)).string();
}

}  // namespace

TEST_CASE("faces lists the square cone") {
    const auto r = run({"faces", "--cone", fixtures + "/square.json"});
    REQUIRE(r.code == 0);
    const auto j = r.j();
    CHECK(j["faces"].size() == 10);
    CHECK(j["faces"][0]["dim"] == 0);
    CHECK(j["faces"][9]["dim"] == 3);
    CHECK(j["covers"].size() == 4 + 8 + 4);
}

TEST_CASE("decompose defaults to the star pipeline") {
    auto r = run({"decompose", "--cone", fixtures + "/cube.json", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("tau 27: F = ") != std::string::npos);
    CHECK(r.out.find("D = q^-2 + 5 + q^2") != std::string::npos);
    CHECK(r.out.find("H~(0,27) = q^-4 + 4*q^-2") != std::string::npos);

    r = run({"decompose", "--cone", fixtures + "/cube.json", "--subdivision", "barycentric"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["faces"][27]["D"]["text"] == "q^-2 + 17 + q^2");
}

TEST_CASE("icdr on the square cone") {
    auto r = run({"icdr", "--cone", fixtures + "/square.json", "--mu", "0", "--tau", "9"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["dR"][0]["dR"]["text"] == "L^-3 + K^-1*L^-1");

    r = run({"icdr", "--cone", fixtures + "/square.json", "--tau", "9", "--chi-y", "--verify"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["dR"][0]["chi_y"]["text"] == "-1 + y");
    CHECK(r.j()["verified_faces"] == 10);

    r = run({"icdr", "--cone", "builtin:square"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["dR"].size() == 10);
}

TEST_CASE("fibers print the multiplicity table") {
    const auto r = run({"fibers", "--cone", "builtin:square"});
    REQUIRE(r.code == 0);
    const auto j = r.j();
    CHECK(std::find(j["d"].begin(), j["d"].end(), json{{"tau", 9}, {"l", 2}, {"count", 8}}) != j["d"].end());
    CHECK(j["fibers"][9]["F"]["text"] == "1 + 6*q^2 + q^4");
}

TEST_CASE("subdivide output feeds omega and shelling") {
    for (bool perturbed : {false, true}) {
        std::vector<std::string> args{"subdivide", "--cone", fixtures + "/square.json"};
        if (perturbed) args.push_back("--perturbed");
        const auto sub = run(args);
        REQUIRE(sub.code == 0);
        CHECK(sub.j()["rays"].size() == 9);
        CHECK(sub.j()["added_rays"].size() == 5);
        CHECK(sub.j()["maximal_cones"].size() == 8);
        const auto path = temp_path(perturbed ? "fan_perturbed.json" : "fan.json");
        std::ofstream(path) << sub.out;

        const auto omega = run({"omega", "--fan", path, "--tau", "9", "--check"});
        REQUIRE(omega.code == 0);
        CHECK(omega.j()["agree"] == true);
        CHECK(omega.j()["oracle"]["text"] == "L^-3 + 6*K^-1*L^-1 + K^-2*L");

        const auto sh = run({"shelling", "--fan", path});
        REQUIRE(sh.code == 0);
        CHECK(sh.j()["order"].size() == 8);
        std::remove(path.c_str());
    }
}

TEST_CASE("shelling of a barycentric complex") {
    const auto r = run({"shelling", "--cone", fixtures + "/cube.json"});
    REQUIRE(r.code == 0);
    const auto j = r.j();
    CHECK(j["order"].size() == 48);
    CHECK(j["histogram"][0] == json{{"type", 0}, {"count", 1}});
}

TEST_CASE("verify reports instead of throwing") {
    auto r = run({"verify", "--cone", fixtures + "/non_pointed.json"});
    CHECK(r.code == 1);
    const auto j = r.j();
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["status"] == "fail");
    CHECK(j["checks"][0]["detail"].get<std::string>().starts_with("NotStronglyConvex"));

    r = run({"verify", "--cone", "builtin:hexagon", "--cone", fixtures + "/square.json", "--serial"});
    CHECK(r.code == 0);
    CHECK(r.j()["passed"] == true);
}

TEST_CASE("verify runs the closed-form checks on fixtures") {
    const auto r = run({"verify", "--cone", fixtures + "/octahedron.json", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass  octahedron/closed_forms") != std::string::npos);
}

TEST_CASE("error exit codes") {
    auto r = run({"faces", "--cone", fixtures + "/malformed.json"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["kind"] == "MalformedInput");

    CHECK(run({"faces", "--cone", fixtures + "/missing.json"}).code == 2);
    CHECK(run({"faces", "--cone", "builtin:nonagon"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"faces"}).code == 2);
    CHECK(run({"faces", "--cone", "builtin:square", "--format", "xml"}).code == 2);
    CHECK(run({"omega", "--cone", "builtin:square", "--tau", "99"}).code == 2);

    r = run({"faces", "--cone", fixtures + "/non_pointed.json"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"]["kind"] == "NotStronglyConvex");

    r = run({"icdr", "--cone", "builtin:square", "--mu", "1", "--tau", "2"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"]["kind"] == "NotComparable");

    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"decompose", "--cone", "builtin:octahedron"}, {"subdivide", "--cone", "builtin:cube", "--kind", "appendix"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
