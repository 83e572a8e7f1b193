#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dlsim/cli.hpp"
#include "dlsim/generator.hpp"
#include "dlsim/parser.hpp"
#include "support.hpp"

using namespace dlsim;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("dlsim-cli-" + name + ".dlkb");
    std::ofstream(path) << text;
    return path.string();
}

const std::string kFamily = testing::data_path("family.dlkb");
const std::string kFathers = testing::data_path("father.dlkb");

}  // namespace

TEST_CASE("check") {
    auto r = run({"check", kFamily});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "consistent, 10 definitions, 35 assertions, 10 individuals\n");

    r = run({"check", kFamily, "--backend", "entail", "--format", "json"});
    CHECK(r.code == exit_code::ok);
    auto j = json::parse(r.out);
    CHECK(j["role_assertions"] == 25);
    CHECK(j["consistent"] == true);

    r = run({"check", scratch("inconsistent", "D := not C\nC(a)\nD(a)\n")});
    CHECK(r.code == exit_code::negative);
    CHECK(r.out.rfind("inconsistent", 0) == 0);

    r = run({"check", scratch("cycle", "A := A and B\n")});
    CHECK(r.code == exit_code::error);
    CHECK(r.err.find(":1:1: CYCLE:") != std::string::npos);

    r = run({"check", scratch("empty", "")});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "consistent, 0 definitions, 0 assertions, 0 individuals\n");

    r = run({"check", testing::data_path("missing.dlkb")});
    CHECK(r.code == exit_code::error);
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("subsumes") {
    CHECK(run({"subsumes", kFathers, "Father", "Parent"}).code == exit_code::ok);
    CHECK(run({"subsumes", kFathers, "Father", "Parent"}).out == "Father <= Parent: holds\n");
    CHECK(run({"subsumes", kFathers, "Parent", "Father"}).code == exit_code::negative);
    CHECK(run({"subsumes", kFathers, "Bottom", "FatherWithoutSons"}).code == exit_code::ok);
    CHECK(run({"subsumes", kFathers, "FatherWithoutSons", "Father"}).code == exit_code::ok);
    CHECK(run({"subsumes", kFathers, "Father and", "Parent"}).code == exit_code::error);
}

TEST_CASE("retrieve") {
    auto r = run({"retrieve", kFamily, "Father"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "Antonio\nAntonioB\nLeonardo\n");
    CHECK(run({"retrieve", kFamily, "Bottom"}).out.empty());
    CHECK(run({"retrieve", kFamily, "Grandparent"}).out == "Antonio\nAntonioB\n");
    CHECK(run({"retrieve", kFamily, "Father", "--backend", "entail"}).out == "Antonio\nAntonioB\nLeonardo\n");

    auto j = json::parse(run({"retrieve", kFamily, "Father", "--format", "json"}).out);
    CHECK(j["concept"] == "Father");
    CHECK(j["backend"] == "canonical");
    CHECK(j["members"] == json{"Antonio", "AntonioB", "Leonardo"});
}

TEST_CASE("msc") {
    auto r = run({"msc", kFamily, "Claudia", "--depth", "0"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.rfind("Child and Female and Human and Sibling and Woman\n", 0) == 0);
    CHECK(r.out.find("Claudia") != std::string::npos);

    auto j = json::parse(run({"msc", kFamily, "Vito", "--depth", "2", "--format", "json"}).out);
    CHECK(j["depth"] == 2);
    CHECK(std::find(j["members"].begin(), j["members"].end(), "Vito") != j["members"].end());

    auto fresh = scratch("fresh", "r(a, b)\n");
    CHECK(run({"msc", fresh, "b"}).out.rfind("Top\n", 0) == 0);
    CHECK(run({"msc", kFamily, "Nobody"}).code == exit_code::error);
    CHECK(run({"msc", kFamily, "Claudia", "--depth", "-1"}).code == exit_code::error);
}

TEST_CASE("sim") {
    auto r = run({"sim", kFamily, "Grandparent", "Father"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out ==
          "similarity: 0.6667 (2/3)\n"
          "extensions: 2 3 2\n"
          "backend: canonical\n"
          "extension_computations: 3\n"
          "msc_computations: 0\n");

    CHECK(run({"sim", kFamily, "ind:Claudia", "ind:Claudia"}).out.rfind("similarity: 1.0000", 0) == 0);
    CHECK(run({"sim", kFamily, "Woman", "Bottom"}).out.rfind("similarity: 0.0000", 0) == 0);
    CHECK(run({"sim", kFamily, "Claudia", "Tiziana"}).out.rfind("similarity: 0.5000 (1/2)", 0) == 0);

    auto j = json::parse(run({"sim", kFamily, "Grandparent", "Father", "--format", "json"}).out);
    CHECK(j["ext_c"] == 2);
    CHECK(j["extension_computations"] == 3);
    CHECK(j["msc_depth"].is_null());
    CHECK(j["value"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    auto twin = scratch("twin", "Ann(Ann)\n");
    r = run({"sim", twin, "Ann", "Top"});
    CHECK(r.code == exit_code::error);
    CHECK(r.err.find("ind:Ann") != std::string::npos);
    CHECK(run({"sim", twin, "ind:Ann", "concept:Ann"}).code == exit_code::ok);
    CHECK(run({"sim", kFamily, "ind:Nobody", "Woman"}).code == exit_code::error);
}

TEST_CASE("matrix") {
    auto r = run({"matrix", kFamily, "Grandparent", "Father", "--format", "csv"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out ==
          ",Grandparent,Father\n"
          "Grandparent,1,0.66666666666666663\n"
          "Father,0.66666666666666663,1\n");

    CHECK(run({"matrix", kFamily, "Woman", "--format", "csv"}).out == ",Woman\nWoman,1\n");
    CHECK(run({"matrix", kFamily, "exists HasChild.Human", "Woman", "--format", "csv"}).out.rfind(
              ",exists HasChild.Human,Woman\n", 0) == 0);

    auto j = json::parse(run({"matrix", kFamily, "Claudia", "Tiziana", "Woman", "--format", "json"}).out);
    CHECK(j["msc_computations"] == 2);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) CHECK(j["values"][x][y] == j["values"][y][x]);
    CHECK(run({"matrix", kFamily, "Woman and"}).code == exit_code::error);
}

TEST_CASE("cluster") {
    auto r = run({"cluster", kFamily, "Woman"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "Woman\n");

    auto blocks = scratch("blocks", "P(x)\nP(y)\nQ(x)\nR(z)\nS(z)\nS(w)\n");
    r = run({"cluster", blocks, "P", "Q", "R", "S", "--linkage", "single"});
    CHECK(r.out.find("+ 0.0000\n  + 0.5000\n    P\n    Q\n") != std::string::npos);

    auto j = json::parse(run({"cluster", blocks, "P", "Q", "R", "S", "--format", "json"}).out);
    CHECK(j["merges"].size() == 3);
    CHECK(j["linkage"] == "complete");
    CHECK(run({"cluster", blocks, "P", "--linkage", "ward"}).code == exit_code::error);
}

TEST_CASE("gen") {
    auto a = run({"gen", "--seed", "42"});
    CHECK(a.code == exit_code::ok);
    CHECK(a.out == run({"gen", "--seed", "42"}).out);
    CHECK(a.out != run({"gen", "--seed", "43"}).out);
    CHECK_NOTHROW(parse_kb(a.out));
    CHECK(run({"gen"}).code == exit_code::error);

    auto small = parse_kb(run({"gen", "--seed", "1", "--individuals", "3", "--concepts", "2"}).out);
    CHECK(small.individuals().size() <= 3);
    CHECK(small.tbox.size() <= 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == exit_code::error);
    CHECK(run({"frobnicate"}).code == exit_code::error);
    CHECK(run({"check", kFamily, "--backend", "oracle"}).code == exit_code::error);
    CHECK(run({"sim", kFamily, "Woman", "Man", "--depth", "deep"}).code == exit_code::error);
    CHECK(run({"retrieve", kFamily, "Woman", "--format", "xml"}).code == exit_code::error);
    CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("JSON reports round trip") {
    Generator gen(1);
    for (int i = 0; i < 200; ++i) {
        SimilarityReport rep;
        rep.ext_c = gen.uniform(0, 50);
        rep.ext_d = gen.uniform(0, 50);
        rep.ext_i = gen.uniform(0, std::min(rep.ext_c, rep.ext_d));
        rep.exact = sim_formula(rep.ext_c, rep.ext_d, rep.ext_i);
        rep.value = rep.exact.value();
        rep.backend = gen.chance(50) ? Backend::Entail : Backend::Canonical;
        rep.extension_computations = gen.uniform(0, 1000);
        rep.msc_computations = gen.uniform(0, 2);
        if (gen.chance(50)) rep.msc_depth = gen.uniform(0, 9);
        json j = rep;
        CHECK(json::parse(j.dump()).get<SimilarityReport>() == rep);
    }

    auto out = run({"sim", kFamily, "ind:Claudia", "Woman", "--format", "json"}).out;
    auto rep = json::parse(out).get<SimilarityReport>();
    CHECK(rep.msc_computations == 1);
    CHECK(rep.msc_depth == 9);
    CHECK(json(rep) == json::parse(out));
}
