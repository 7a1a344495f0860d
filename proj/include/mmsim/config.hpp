#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mmsim/backend.hpp"
#include "mmsim/llg.hpp"
#include "mmsim/problems.hpp"

namespace mmsim {

// A resolved run: built-in problem defaults with user overrides applied.
struct RunConfig {
    ProblemSpec problem;
    Backend backend = Backend::serial;
    Precision precision = Precision::f64;
    std::string output = "trajectory.tsv";
    bool crlf = false;                     // emit \r\n line endings in trajectories
    std::optional<double> stop_torque;     // early-stop criterion, off by default
};

// Parses the flat key-value config format (UTF-8, `key = value`, `#` comments,
// schedule stages as `stage.<i>.start/end/hx/hy/hz/ramp/alpha`). Unknown keys
// and type mismatches raise config_error; `problem` is required.
RunConfig parse_config(const std::string& text);

// parse_config over a file's contents.
RunConfig load_config(const std::string& path);

// The config document that reproduces `cfg` (built-in specs serialized so
// users can start from one and edit).
std::string serialize_config(const RunConfig& cfg);

} // namespace mmsim
