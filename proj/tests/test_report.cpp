// Copyright 2026 the galilei-lab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <doctest.h>
#include <json.hpp>

#include "galilei/suites.hpp"
#include "galilei/version.hpp"

using namespace galilei;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig small_config() {
    RunConfig cfg = default_config();
    cfg.suites = {"ccr"};
    cfg.csv_dir = (std::filesystem::temp_directory_path() / "galilei_report_test").string();
    return cfg;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("the catalogue is nonempty and order stable") {
    const auto &cat = suite_catalogue();
    REQUIRE(cat.size() == 16);
    CHECK(cat.front().name == "duality");
    CHECK(cat.back().name == "dynamics");
    CHECK(suite_exists("weyl"));
    CHECK_FALSE(suite_exists("nonsense"));
}

TEST_CASE("unknown suite selections are rejected") {
    RunConfig cfg = small_config();
    cfg.suites = {"ccr", "nonsense"};
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
}

TEST_CASE("reports carry the catalogue results in order") {
    const RunConfig cfg = small_config();
    const Report rep = run_suites(cfg);
    CHECK(rep.version == version_string);
    CHECK(rep.schema == report_schema);
    REQUIRE(rep.results.size() == 4);
    CHECK(rep.results[0].suite == "ccr");
    CHECK(rep.results[0].name == "xp");
    CHECK(rep.all_pass);
    for (const CheckResult &r : rep.results) {
        CHECK(r.pass);
        CHECK(r.measured <= r.tolerance);
        CHECK_FALSE(r.anchor.empty());
    }
}

TEST_CASE("emitted json is byte stable and excludes wall times") {
    const RunConfig cfg = small_config();
    const Report rep1 = run_suites(cfg);
    const Report rep2 = run_suites(cfg);
    const auto dir = std::filesystem::temp_directory_path() / "galilei_report_test";
    std::filesystem::create_directories(dir);
    const std::string p1 = (dir / "a.json").string();
    const std::string p2 = (dir / "b.json").string();
    emit_report_json(rep1, p1);
    emit_report_json(rep2, p2);
    const std::string s1 = slurp(p1);
    const std::string s2 = slurp(p2);
    CHECK(s1 == s2);
    CHECK(!s1.empty());
    CHECK(s1.find("seconds") == std::string::npos);

    const auto parsed = nlohmann::json::parse(s1);
    CHECK(parsed["schema"] == report_schema);
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["checks"].is_array());
    CHECK(parsed["checks"].size() == 4);
    CHECK(parsed["config"]["grid"]["n"] == 512);
    std::filesystem::remove_all(dir);
}

TEST_CASE("selections preserve catalogue order regardless of request order") {
    RunConfig cfg = small_config();
    cfg.suites = {"ccr", "weyl"}; // catalogue lists weyl first
    const Report rep = run_suites(cfg);
    REQUIRE(!rep.results.empty());
    CHECK(rep.results.front().suite == "weyl");
    CHECK(rep.results.back().suite == "ccr");
}

} // TEST_SUITE
