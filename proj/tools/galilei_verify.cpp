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
 * galilei_verify: run the check catalogue and write a JSON report.
 *
 * The report is byte-stable: the same configuration and seed produce the
 * same file, whatever the thread count or output path.
 */

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galilei/config.hpp"
#include "galilei/suites.hpp"
#include "galilei/version.hpp"

int main(int argc, char **argv) {
    CLI::App app{"verification laboratory for a one-particle quantum system "
                 "with Galilean symmetry"};
    app.set_version_flag("--version", std::string(galilei::version_string));

    auto *run = app.add_subcommand("run", "run check suites and emit a report");
    std::string config_path;
    std::vector<std::string> suites;
    std::vector<std::string> overrides;
    std::string out_path;
    long long seed = -1;
    run->add_option("--config", config_path, "configuration file (ini format)")
        ->check(CLI::ExistingFile);
    run->add_option("--suite", suites, "suite to run (repeatable; default all)");
    run->add_option("--out", out_path, "report path (overrides the config)");
    run->add_option("--seed", seed, "base seed (overrides the config)");
    run->add_option("--set", overrides, "override a config key, e.g. grid.n=256");

    auto *list = app.add_subcommand("list", "list the available suites");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const galilei::SuiteDef &d : galilei::suite_catalogue())
            std::printf("%s\n", d.name.c_str());
        return 0;
    }

    try {
        galilei::RunConfig cfg = config_path.empty()
                                     ? galilei::default_config()
                                     : galilei::load_config(config_path);
        for (const std::string &kv : overrides)
            galilei::apply_override(cfg, kv);
        if (!suites.empty())
            cfg.suites = suites;
        if (seed >= 0)
            cfg.seed = static_cast<std::uint64_t>(seed);
        if (!out_path.empty())
            cfg.report_path = out_path;

        const galilei::Report rep = galilei::run_suites(cfg);
        galilei::emit_report_json(rep, cfg.report_path);
        return galilei::print_report(rep);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
