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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "galilei/suites.hpp"

namespace galilei {

namespace {

using ordered_json = nlohmann::ordered_json;

// Non-finite defects (a thrown check) have no JSON number; null keeps the
// report parseable and byte-stable.
ordered_json json_number(double v) {
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

} // namespace

void emit_report_json(const Report &rep, const std::string &path) {
    ordered_json j;
    j["schema"] = rep.schema;
    j["version"] = rep.version;

    ordered_json cfg;
    cfg["grid"]["n"] = rep.config.grid_n;
    cfg["grid"]["length"] = rep.config.grid_length;
    cfg["rotation_grid"]["n"] = rep.config.rot_n;
    cfg["rotation_grid"]["length"] = rep.config.rot_length;
    cfg["rotation_grid"]["two_s"] = rep.config.rot_two_s;
    cfg["physics"]["hbar"] = rep.config.hbar;
    cfg["physics"]["mass"] = rep.config.mass;
    cfg["physics"]["energy_offset"] = rep.config.energy_offset;
    cfg["tolerances"]["exact"] = rep.config.tol_exact;
    cfg["tolerances"]["spectral"] = rep.config.tol_spectral;
    cfg["tolerances"]["fit"] = rep.config.tol_fit;
    cfg["run"]["seed"] = rep.config.seed;
    cfg["run"]["suites"] = rep.config.suites;
    j["config"] = cfg;

    j["all_pass"] = rep.all_pass;

    ordered_json checks = ordered_json::array();
    for (const CheckResult &r : rep.results) {
        ordered_json entry;
        entry["suite"] = r.suite;
        entry["name"] = r.name;
        entry["anchor"] = r.anchor;
        entry["measured"] = json_number(r.measured);
        entry["tolerance"] = r.tolerance;
        entry["pass"] = r.pass;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open report path: " + path);
    out << j.dump(2) << '\n';
}

int print_report(const Report &rep) {
    int failed = 0;
    for (const CheckResult &r : rep.results) {
        if (!r.pass)
            ++failed;
        std::printf("[%s] %s/%s  measured %.3e  tol %.3e  (%.2fs)\n",
                    r.pass ? " ok " : "FAIL", r.suite.c_str(), r.name.c_str(),
                    r.measured, r.tolerance, r.seconds);
        if (!r.pass)
            std::printf("       %s\n", r.anchor.c_str());
    }
    std::printf("%zu checks, %d failed\n", rep.results.size(), failed);
    return failed == 0 ? 0 : 1;
}

} // namespace galilei
