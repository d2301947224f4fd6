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

/**
 * @file suites.hpp
 * The check catalogue: every verified identity as a named, tolerance-pinned
 * check grouped into suites. Suites execute on a small worker pool but
 * results are reduced in catalogue order, so reports are order-stable.
 *
 * Each check records the identity it exercises as a plain formula string,
 * the measured defect, and the tolerance it was held to. Per-check wall
 * times are kept for console display only; the JSON report omits them so
 * identical runs produce identical bytes.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "galilei/config.hpp"

namespace galilei {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string anchor; // the identity under test, as a formula
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0; // excluded from the JSON report
};

struct SuiteDef {
    std::string name;
    std::function<std::vector<CheckResult>(const RunConfig &)> run;
};

/// Catalogue in dependency order; fixed at build time.
const std::vector<SuiteDef> &suite_catalogue();

bool suite_exists(const std::string &name);

struct Report {
    std::string version;
    std::string schema;
    RunConfig config;
    std::vector<CheckResult> results;
    bool all_pass = false;
};

/**
 * Run the selected suites ("all" expands to the whole catalogue). Workers
 * run concurrently, capped by the GALILEI_THREADS environment variable.
 * Throws on unknown suite names.
 */
Report run_suites(const RunConfig &cfg);

/// Deterministic JSON emission with stable key order.
void emit_report_json(const Report &rep, const std::string &path);

/// One console line per check plus a summary; returns the process exit code.
int print_report(const Report &rep);

} // namespace galilei
