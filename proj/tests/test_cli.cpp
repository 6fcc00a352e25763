#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "sofic/cli.hpp"
#include "sofic/io.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sofic");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = sofic::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SOFIC_DATA_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("corpus listing") {
    auto r = run({"corpus", "--list"});
    CHECK(r.code == sofic::cli::ok);
    CHECK(r.out.find("even_shift") != std::string::npos);
    auto show = run({"corpus", "--show", "bfg"});
    CHECK(show.code == 0);
    CHECK(sofic::parse_presentation(show.out).vertex_count() == 2);
    CHECK(run({"corpus", "--show", "nope"}).code == sofic::cli::input_error);
}

TEST_CASE("cover documents") {
    auto r = run({"cover", data("even_shift"), "--kind", "krieger", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 3);
    auto dot = run({"cover", data("even_shift"), "--kind", "fischer-left", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(run({"cover", data("even_shift"), "--kind", "nope"}).code == sofic::cli::input_error);
    auto one = run({"cover", data("jsb"), "--kind", "fischer-right", "--json"});
    CHECK(one.code == 0);
}

TEST_CASE("inspect") {
    auto r = run({"inspect", data("bfg"), "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["aft"] == "false");
    CHECK(j["strictly_sofic"] == "true");
    CHECK(j["shift_irreducible"] == true);
    auto table = run({"inspect", data("even_shift")});
    CHECK(table.out.find("aft") != std::string::npos);
}

TEST_CASE("pc, expand, higher-block and word") {
    auto pc = run({"pc", data("jsb"), "--of-cover", "krieger"});
    CHECK(pc.code == 0);
    CHECK(nlohmann::json::parse(pc.out)["nodes"].size() >= 2);

    auto ex = run({"expand", data("even_shift"), "--symbol", "1", "--new", "s"});
    REQUIRE(ex.code == 0);
    CHECK(sofic::parse_presentation(ex.out).vertex_count() == 3);
    CHECK(run({"expand", data("even_shift"), "--symbol", "1", "--new", "0"}).code == sofic::cli::input_error);

    auto hb = run({"higher-block", data("even_shift"), "-n", "2"});
    REQUIRE(hb.code == 0);
    CHECK(sofic::parse_presentation(hb.out).edge_count() == 5);
    CHECK(run({"higher-block", data("even_shift"), "-n", "1"}).code == sofic::cli::input_error);

    auto w = run({"word", data("even_shift"), "1001"});
    CHECK(w.code == 0);
    CHECK(w.out.find("true") != std::string::npos);
}

TEST_CASE("check") {
    auto c = run({"check", "--corpus"});
    CHECK(c.code == sofic::cli::ok);
    CHECK(run({"check", "--corpus"}).out == c.out);
    auto f = run({"check", data("bfg")});
    CHECK(f.code == 0);
    auto rnd = run({"check", "--random", "5", "--seed", "3"});
    CHECK(rnd.code == 0);
    CHECK(nlohmann::json::parse(rnd.out)["summary"]["subjects"] == 5);
}

TEST_CASE("input errors") {
    CHECK(run({"inspect", "/nonexistent/file.json"}).code == sofic::cli::input_error);
    CHECK(run({"frobnicate"}).code == sofic::cli::input_error);
    CHECK(run({}).code == sofic::cli::input_error);
    CHECK(run({"--help"}).code == sofic::cli::ok);
}
