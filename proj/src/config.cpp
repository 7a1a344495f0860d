#include "mmsim/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "mmsim/errors.hpp"

namespace mmsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw config_error("key '" + key + "': expected an integer, got '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw config_error("key '" + key + "': expected true or false, got '" + value + "'");
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    for (int prec = 1; prec <= 17; ++prec) {
        std::ostringstream os;
        os.precision(prec);
        os << v;
        if (std::stod(os.str()) == v) return os.str();
    }
    return std::to_string(v);
}

struct StageDraft {
    std::optional<std::int64_t> start, end;
    double hx = 0.0, hy = 0.0, hz = 0.0;
    bool ramp = false;
    std::optional<double> alpha;
};

const char* const kKnownKeys[] = {
    "problem", "n",     "backend", "precision", "output", "crlf",   "stop_torque",
    "dt",      "steps", "cadence", "nx",        "ny",     "nz",     "delta",
    "a_ex",    "ms",    "hk",      "alpha",     "init_x", "init_y", "init_z",
};

bool is_known_plain_key(const std::string& key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

// stage.<i>.<field> -> (i, field); nullopt when the key is not stage-shaped.
std::optional<std::pair<int, std::string>> parse_stage_key(const std::string& key) {
    if (key.rfind("stage.", 0) != 0) return std::nullopt;
    const std::size_t dot = key.find('.', 6);
    if (dot == std::string::npos) return std::nullopt;
    const std::string idx = key.substr(6, dot - 6);
    int i = 0;
    const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
    if (ec != std::errc{} || ptr != idx.data() + idx.size() || i < 0) return std::nullopt;
    return std::make_pair(i, key.substr(dot + 1));
}

} // namespace

RunConfig parse_config(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("line " + std::to_string(lineno) +
                                   ": expected 'key = value', got '" + line + "'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty())
                throw config_error("line " + std::to_string(lineno) + ": empty key or value");
            for (const auto& [k, v] : pairs)
                if (k == key) throw config_error("duplicate key '" + key + "'");
            pairs.emplace_back(key, value);
        }
    }

    // Reject unknown keys before anything else so typos never half-apply.
    for (const auto& [key, value] : pairs) {
        if (is_known_plain_key(key)) continue;
        const auto stage = parse_stage_key(key);
        if (!stage)
            throw config_error("unknown key '" + key + "'");
        const std::string& f = stage->second;
        if (f != "start" && f != "end" && f != "hx" && f != "hy" && f != "hz" && f != "ramp" &&
            f != "alpha")
            throw config_error("unknown stage field '" + f + "' in key '" + key + "'");
    }

    auto find = [&](const char* key) -> const std::string* {
        for (const auto& [k, v] : pairs)
            if (k == key) return &v;
        return nullptr;
    };

    const std::string* problem = find("problem");
    if (!problem) throw config_error("missing required key 'problem' (sp4 or sp3)");

    RunConfig cfg;
    if (*problem == "sp4") {
        if (find("n")) throw config_error("key 'n' applies to problem sp3 only");
        cfg.problem = standard_problem_4();
    } else if (*problem == "sp3") {
        int n = 16;
        if (const std::string* nv = find("n")) {
            const std::int64_t parsed = parse_int("n", *nv);
            if (parsed < 1) throw config_error("key 'n': must be >= 1");
            n = static_cast<int>(parsed);
        }
        cfg.problem = standard_problem_3_benchmark(n);
    } else {
        throw config_error("unknown problem '" + *problem + "' (expected sp4 or sp3)");
    }

    // Grid overrides are gathered first so one Grid validation covers them.
    int nx = cfg.problem.grid.nx, ny = cfg.problem.grid.ny, nz = cfg.problem.grid.nz;
    double delta = cfg.problem.grid.delta;
    Vec3 init = cfg.problem.initial_direction;
    std::map<int, StageDraft> stage_drafts;

    for (const auto& [key, value] : pairs) {
        if (key == "problem" || key == "n") continue;
        if (key == "backend")
            cfg.backend = backend_from_string(value);
        else if (key == "precision")
            cfg.precision = precision_from_string(value);
        else if (key == "output")
            cfg.output = value;
        else if (key == "crlf")
            cfg.crlf = parse_bool(key, value);
        else if (key == "stop_torque")
            cfg.stop_torque = parse_double(key, value);
        else if (key == "dt")
            cfg.problem.dt = parse_double(key, value);
        else if (key == "steps")
            cfg.problem.steps = parse_int(key, value);
        else if (key == "cadence")
            cfg.problem.cadence = parse_int(key, value);
        else if (key == "nx")
            nx = static_cast<int>(parse_int(key, value));
        else if (key == "ny")
            ny = static_cast<int>(parse_int(key, value));
        else if (key == "nz")
            nz = static_cast<int>(parse_int(key, value));
        else if (key == "delta")
            delta = parse_double(key, value);
        else if (key == "a_ex")
            cfg.problem.material.a_ex = parse_double(key, value);
        else if (key == "ms")
            cfg.problem.material.ms = parse_double(key, value);
        else if (key == "hk")
            cfg.problem.material.hk = parse_double(key, value);
        else if (key == "alpha")
            cfg.problem.material.alpha = parse_double(key, value);
        else if (key == "init_x")
            init.x = parse_double(key, value);
        else if (key == "init_y")
            init.y = parse_double(key, value);
        else if (key == "init_z")
            init.z = parse_double(key, value);
        else if (const auto stage = parse_stage_key(key)) {
            StageDraft& d = stage_drafts[stage->first];
            const std::string& f = stage->second;
            if (f == "start")
                d.start = parse_int(key, value);
            else if (f == "end")
                d.end = parse_int(key, value);
            else if (f == "hx")
                d.hx = parse_double(key, value);
            else if (f == "hy")
                d.hy = parse_double(key, value);
            else if (f == "hz")
                d.hz = parse_double(key, value);
            else if (f == "ramp")
                d.ramp = parse_bool(key, value);
            else if (f == "alpha")
                d.alpha = parse_double(key, value);
        }
    }

    try {
        cfg.problem.grid = Grid(nx, ny, nz, delta);
        cfg.problem.material.validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    cfg.problem.initial_direction = init;
    if (cfg.problem.dt <= 0.0) throw config_error("key 'dt': must be > 0");
    if (cfg.problem.steps < 0) throw config_error("key 'steps': must be >= 0");
    if (cfg.problem.cadence < 1) throw config_error("key 'cadence': must be >= 1");

    // Any stage key replaces the built-in schedule wholesale. `ramp = true`
    // means a linear ramp from (hx,hy,hz) at `start` down to zero at `end`.
    if (!stage_drafts.empty()) {
        std::vector<ScheduleStage> stages;
        for (const auto& [idx, d] : stage_drafts) {
            if (!d.start || !d.end)
                throw config_error("stage." + std::to_string(idx) +
                                   ": both start and end are required");
            ScheduleStage s;
            s.start = *d.start;
            s.end = *d.end;
            s.field = {d.hx, d.hy, d.hz};
            s.ramp = d.ramp;
            s.field_end = {0.0, 0.0, 0.0};
            s.alpha_override = d.alpha;
            stages.push_back(s);
        }
        try {
            cfg.problem.schedule = FieldSchedule(std::move(stages));
        } catch (const std::invalid_argument& e) {
            throw config_error(e.what());
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "problem = " << cfg.problem.name << "\n";
    os << "backend = " << to_string(cfg.backend) << "\n";
    os << "precision = " << to_string(cfg.precision) << "\n";
    os << "output = " << cfg.output << "\n";
    if (cfg.crlf) os << "crlf = true\n";
    if (cfg.stop_torque) os << "stop_torque = " << format_double(*cfg.stop_torque) << "\n";
    os << "dt = " << format_double(cfg.problem.dt) << "\n";
    os << "steps = " << cfg.problem.steps << "\n";
    os << "cadence = " << cfg.problem.cadence << "\n";
    os << "nx = " << cfg.problem.grid.nx << "\n";
    os << "ny = " << cfg.problem.grid.ny << "\n";
    os << "nz = " << cfg.problem.grid.nz << "\n";
    os << "delta = " << format_double(cfg.problem.grid.delta) << "\n";
    os << "a_ex = " << format_double(cfg.problem.material.a_ex) << "\n";
    os << "ms = " << format_double(cfg.problem.material.ms) << "\n";
    os << "hk = " << format_double(cfg.problem.material.hk) << "\n";
    os << "alpha = " << format_double(cfg.problem.material.alpha) << "\n";
    os << "init_x = " << format_double(cfg.problem.initial_direction.x) << "\n";
    os << "init_y = " << format_double(cfg.problem.initial_direction.y) << "\n";
    os << "init_z = " << format_double(cfg.problem.initial_direction.z) << "\n";
    int i = 0;
    for (const ScheduleStage& s : cfg.problem.schedule.stages()) {
        const std::string p = "stage." + std::to_string(i++) + ".";
        os << p << "start = " << s.start << "\n";
        os << p << "end = " << s.end << "\n";
        os << p << "hx = " << format_double(s.field.x) << "\n";
        os << p << "hy = " << format_double(s.field.y) << "\n";
        os << p << "hz = " << format_double(s.field.z) << "\n";
        if (s.ramp) os << p << "ramp = true\n";
        if (s.alpha_override) os << p << "alpha = " << format_double(*s.alpha_override) << "\n";
    }
    return os.str();
}

} // namespace mmsim
