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

#include "galilei/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace galilei {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string &key, const std::string &value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad numeric value for " + key + ": " + value);
    }
    if (used != value.size())
        throw std::invalid_argument("trailing junk in value for " + key + ": " + value);
    return out;
}

long long parse_int(const std::string &key, const std::string &value) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad integer value for " + key + ": " + value);
    }
    if (used != value.size())
        throw std::invalid_argument("trailing junk in value for " + key + ": " + value);
    return out;
}

std::vector<std::string> split_list(const std::string &value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

void set_field(RunConfig &cfg, const std::string &key, const std::string &value) {
    if (key == "grid.n")
        cfg.grid_n = static_cast<int>(parse_int(key, value));
    else if (key == "grid.length")
        cfg.grid_length = parse_double(key, value);
    else if (key == "rotation_grid.n")
        cfg.rot_n = static_cast<int>(parse_int(key, value));
    else if (key == "rotation_grid.length")
        cfg.rot_length = parse_double(key, value);
    else if (key == "rotation_grid.two_s")
        cfg.rot_two_s = static_cast<int>(parse_int(key, value));
    else if (key == "physics.hbar")
        cfg.hbar = parse_double(key, value);
    else if (key == "physics.mass")
        cfg.mass = parse_double(key, value);
    else if (key == "physics.energy_offset")
        cfg.energy_offset = parse_double(key, value);
    else if (key == "tolerances.exact")
        cfg.tol_exact = parse_double(key, value);
    else if (key == "tolerances.spectral")
        cfg.tol_spectral = parse_double(key, value);
    else if (key == "tolerances.fit")
        cfg.tol_fit = parse_double(key, value);
    else if (key == "run.seed")
        cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "run.suites")
        cfg.suites = split_list(value);
    else if (key == "run.report_path")
        cfg.report_path = value;
    else if (key == "run.csv_dir")
        cfg.csv_dir = value;
    else
        throw std::invalid_argument("unknown configuration key: " + key);
}

} // namespace

RunConfig default_config() { return RunConfig{}; }

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    RunConfig cfg = default_config();
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("unterminated section header at line " +
                                            std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw std::invalid_argument("empty section name at line " +
                                            std::to_string(lineno));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("empty key at line " + std::to_string(lineno));
        if (section.empty())
            throw std::invalid_argument("key outside any section at line " +
                                        std::to_string(lineno));
        set_field(cfg, section + "." + key, value);
    }
    validate(cfg);
    return cfg;
}

void apply_override(RunConfig &cfg, const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override must look like section.key=value: " + assignment);
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (key.empty())
        throw std::invalid_argument("empty override key: " + assignment);
    set_field(cfg, key, value);
}

void validate(const RunConfig &cfg) {
    const auto power_of_two = [](int n) { return n >= 8 && (n & (n - 1)) == 0; };
    if (!power_of_two(cfg.grid_n))
        throw std::invalid_argument("grid.n must be a power of two, at least 8");
    if (!power_of_two(cfg.rot_n))
        throw std::invalid_argument("rotation_grid.n must be a power of two, at least 8");
    if (!(cfg.grid_length > 0.0) || !std::isfinite(cfg.grid_length))
        throw std::invalid_argument("grid.length must be positive and finite");
    if (!(cfg.rot_length > 0.0) || !std::isfinite(cfg.rot_length))
        throw std::invalid_argument("rotation_grid.length must be positive and finite");
    if (cfg.rot_two_s < 0 || cfg.rot_two_s > 12)
        throw std::invalid_argument("rotation_grid.two_s must lie in [0, 12]");
    if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar))
        throw std::invalid_argument("physics.hbar must be positive and finite");
    if (!(cfg.mass > 0.0) || !std::isfinite(cfg.mass))
        throw std::invalid_argument("physics.mass must be positive and finite");
    if (!std::isfinite(cfg.energy_offset))
        throw std::invalid_argument("physics.energy_offset must be finite");
    for (double tol : {cfg.tol_exact, cfg.tol_spectral, cfg.tol_fit})
        if (!(tol > 0.0) || !std::isfinite(tol))
            throw std::invalid_argument("tolerances must be positive and finite");
    if (cfg.suites.empty())
        throw std::invalid_argument("run.suites must name at least one suite");
    if (cfg.report_path.empty())
        throw std::invalid_argument("run.report_path must not be empty");
    if (cfg.csv_dir.empty())
        throw std::invalid_argument("run.csv_dir must not be empty");
}

} // namespace galilei
