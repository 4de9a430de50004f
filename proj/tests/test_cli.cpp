/**************************************************************************
 * tests/test_cli.cpp
 *
 * Copyright 2026 The centra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "centra/cli.hpp"

using namespace centra;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "centra");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "centra_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("check exit codes") {
    auto a7 = run({"check", "--group", "A7", "--pi", "2,3,5,7"});
    REQUIRE(a7.code == 0);
    REQUIRE(nlohmann::json::parse(a7.out)["outcome"] == "holds");
    auto a8 = run({"check", "--group", "A8", "--pi", "3"});
    REQUIRE(a8.code == 1);
    auto j = nlohmann::json::parse(a8.out);
    REQUIRE(j["witness"]["order"] == 3);
    REQUIRE(run({"check", "--group", "M22", "--pi", "2", "--cap", "100000"}).code == 3);
}

TEST_CASE("usage errors exit with 2") {
    REQUIRE(run({}).code == 2);
    REQUIRE(run({"check"}).code == 2);
    REQUIRE(run({"check", "--group", "nonsense"}).code == 2);
    REQUIRE(run({"check", "--group", "A5", "--pi", "4"}).code == 2);
    REQUIRE(run({"check", "--group", "A5", "--cap", "0"}).code == 2);
    REQUIRE(run({"tables", "--query", "bogus"}).code == 2);
    REQUIRE(run({"frobnicate"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs and re-verify") {
    const auto a = scratch("a.json"), b = scratch("b.json");
    REQUIRE(run({"check", "--group", "A9", "--pi", "2", "--seed", "3", "--out", a.string()}).code == 1);
    REQUIRE(run({"check", "--group", "A9", "--pi", "2", "--seed", "3", "--out", b.string()}).code == 1);
    REQUIRE(slurp(a) == slurp(b));
    auto rep = report_from_json(read_json(a.string()));
    REQUIRE(rep.witness);
    REQUIRE(verify_witness(build("A9"), rep.pi, *rep.witness).empty());
    auto timed = run({"check", "--group", "A5", "--timing"});
    REQUIRE(nlohmann::json::parse(timed.out)["elapsed_ms"].is_number());
}

TEST_CASE("groups resolve from generator files") {
    const auto f = scratch("s4.gens");
    std::ofstream(f) << "degree 4\norder 24\n2 1 3 4\n2 3 4 1\n";
    auto r = run({"check", "--group", f.string(), "--pi", "2"});
    REQUIRE(r.code == 0);
}

TEST_CASE("table queries") {
    REQUIRE(run({"tables", "--query", "thickness", "--p", "2"}).out == "8\n");
    REQUIRE(run({"tables", "--query", "xalt", "--n", "7", "--pi", "3"}).out == "true\n");
    REQUIRE(run({"tables", "--query", "xalt", "--n", "8", "--pi", "3"}).out == "false\n");
    REQUIRE(run({"tables", "--query", "xspor", "--group", "J2", "--pi", "7"}).out == "true\n");
    REQUIRE(run({"tables", "--query", "Q", "--q", "27"}).out == "true\n");
    REQUIRE(run({"tables", "--query", "psp", "--pi", "2"}).out == "16\n");
    REQUIRE(run({"tables", "--query", "spor-alt", "--group", "J1"}).out == "5\n");
    auto v = run({"tables", "--query", "verify"});
    REQUIRE(v.code == 0);
    REQUIRE(v.out.rfind("match ", 0) == 0);
}

TEST_CASE("ncgraph, h1 and catalogue commands") {
    auto nc = run({"ncgraph", "--group", "A5", "--domination"});
    REQUIRE(nc.code == 0);
    auto j = nlohmann::json::parse(nc.out);
    REQUIRE(j["vertex_count"] == 59);
    REQUIRE(j["degrees"] == nlohmann::json::parse("[[55,24],[56,15],[57,20]]"));
    REQUIRE(j["domination"].is_array());
    auto h = run({"h1", "--group", "L2(7)", "--module", data_dir() + "/modules/L2_7_natural_F2.mod", "--p", "2"});
    REQUIRE(h.code == 0);
    REQUIRE(nlohmann::json::parse(h.out)["dim_h1"] == 1);
    auto d = nlohmann::json::parse(run({"h1", "--group", "A5", "--module", "deleted", "--p", "5"}).out);
    REQUIRE(d["dimension"] == 3);
    auto cat = run({"catalogue", "--list"});
    REQUIRE(cat.code == 0);
    REQUIRE(cat.out.find("M22\t443520\tsimple\tM22") != std::string::npos);
}
