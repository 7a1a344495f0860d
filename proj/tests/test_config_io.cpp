#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mmsim/config.hpp"
#include "mmsim/errors.hpp"
#include "mmsim/trajectory.hpp"

using namespace mmsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("a bare problem key resolves to the built-in defaults") {
    const RunConfig cfg = parse_config("problem = sp4\n");
    CHECK(cfg.problem.grid.nx == 166);
    CHECK(cfg.problem.steps == 150000);
    CHECK(cfg.backend == Backend::serial);
    CHECK(cfg.precision == Precision::f64);
    CHECK(cfg.output == "trajectory.tsv");
    CHECK(!cfg.crlf);
    CHECK(!cfg.stop_torque);
}

TEST_CASE("single override on top of a built-in") {
    const RunConfig cfg = parse_config("problem = sp4\nsteps = 1000\n");
    CHECK(cfg.problem.steps == 1000);
    CHECK(cfg.problem.grid.nx == 166); // everything else untouched
}

TEST_CASE("sp3 size selection") {
    const RunConfig cfg = parse_config("problem = sp3\nn = 16\n");
    CHECK(cfg.problem.grid.nx == 16);
    CHECK(cfg.problem.grid.ny == 16);
    CHECK(cfg.problem.grid.nz == 16);
    CHECK(cfg.problem.material.ms == 1000.0);
    CHECK(cfg.problem.material.hk == 100.0);
}

TEST_CASE("comments, blank lines, and spacing are tolerated") {
    const RunConfig cfg = parse_config(
        "# switching run\n"
        "\n"
        "problem = sp4   # built-in\n"
        "  steps=500\n"
        "backend =parallel\n"
        "precision= f32\n");
    CHECK(cfg.problem.steps == 500);
    CHECK(cfg.backend == Backend::parallel);
    CHECK(cfg.precision == Precision::f32);
}

TEST_CASE("malformed configs are rejected with config_error") {
    CHECK_THROWS_AS(parse_config(""), config_error);                         // no problem
    CHECK_THROWS_AS(parse_config("steps = 10\n"), config_error);             // no problem
    CHECK_THROWS_AS(parse_config("problem = sp9\n"), config_error);          // unknown problem
    CHECK_THROWS_AS(parse_config("problem = sp4\nsteps = ten\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp4\nstepz = 10\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp4\nsteps = 1\nsteps = 2\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp4\nn = 8\n"), config_error);   // n is sp3-only
    CHECK_THROWS_AS(parse_config("problem = sp4\nno equals sign\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp4\nstage.0.bogus = 1\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp4\nstage.0.hx = 5\n"), config_error); // no range
    CHECK_THROWS_AS(parse_config("problem = sp4\ndt = -1\n"), config_error);
    CHECK_THROWS_AS(parse_config("problem = sp3\nn = 0\n"), config_error);
}

TEST_CASE("stage keys replace the built-in schedule") {
    const RunConfig cfg = parse_config(
        "problem = sp4\n"
        "stage.0.start = 0\n"
        "stage.0.end = 100\n"
        "stage.0.hx = 10\n"
        "stage.0.hy = -4\n"
        "stage.1.start = 100\n"
        "stage.1.end = 300\n"
        "stage.1.hx = 10\n"
        "stage.1.ramp = true\n"
        "stage.1.alpha = 0.1\n");
    const auto& stages = cfg.problem.schedule.stages();
    REQUIRE(stages.size() == 2);
    CHECK(stages[0].field.x == 10.0);
    CHECK(stages[0].field.y == -4.0);
    CHECK(!stages[0].ramp);
    CHECK(stages[1].ramp);
    CHECK(stages[1].value_at(200).x == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(stages[1].value_at(300).x == 0.0); // ramps land on zero
    REQUIRE(stages[1].alpha_override.has_value());
    CHECK(*stages[1].alpha_override == 0.1);
    // The built-in reversal stage is gone.
    CHECK(cfg.problem.schedule.at(60000).field.x == 0.0);
}

TEST_CASE("material, grid, and run knobs are overridable") {
    const RunConfig cfg = parse_config(
        "problem = sp3\n"
        "n = 4\n"
        "nz = 2\n"
        "delta = 2.5\n"
        "a_ex = 2e7\n"
        "ms = 750\n"
        "hk = 0\n"
        "alpha = 0.25\n"
        "dt = 2e-5\n"
        "cadence = 50\n"
        "init_x = 0\n"
        "init_z = 1\n"
        "output = out.tsv\n"
        "stop_torque = 1e-4\n"
        "crlf = true\n");
    CHECK(cfg.problem.grid.nx == 4);
    CHECK(cfg.problem.grid.nz == 2);
    CHECK(cfg.problem.grid.delta == 2.5);
    CHECK(cfg.problem.material.a_ex == 2e7);
    CHECK(cfg.problem.material.ms == 750.0);
    CHECK(cfg.problem.material.alpha == 0.25);
    CHECK(cfg.problem.dt == 2e-5);
    CHECK(cfg.problem.cadence == 50);
    CHECK(cfg.problem.initial_direction.x == 0.0);
    CHECK(cfg.problem.initial_direction.z == 1.0);
    CHECK(cfg.output == "out.tsv");
    REQUIRE(cfg.stop_torque.has_value());
    CHECK(*cfg.stop_torque == 1e-4);
    CHECK(cfg.crlf);
}

TEST_CASE("serialize round-trips through parse") {
    for (const char* text : {"problem = sp4\n", "problem = sp3\nn = 12\nprecision = f32\n"}) {
        const RunConfig cfg = parse_config(text);
        const std::string doc = serialize_config(cfg);
        const RunConfig again = parse_config(doc);
        CHECK(serialize_config(again) == doc);
    }
}

TEST_CASE("trajectory lines are step TAB then fixed six-digit components") {
    std::vector<TrajectoryRecord> records{{1000, 0.967, -0.0125, 1.0}};
    CHECK(format_trajectory(records) == "1000\t0.967000\t-0.012500\t1.000000\n");
    CHECK(format_trajectory(records, true) == "1000\t0.967000\t-0.012500\t1.000000\r\n");
    CHECK(format_trajectory({}).empty());
}

TEST_CASE("trajectory files round-trip") {
    const std::string path = "test_trajectory_roundtrip.tsv";
    std::vector<TrajectoryRecord> records;
    for (int i = 1; i <= 150; ++i)
        records.push_back({i * 1000, 0.5 - i * 0.001, -0.25 + i * 0.002, 0.001 * i});
    write_trajectory(records, path);

    const std::string text = slurp(path);
    CHECK(text.find("\r\n") == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 150);

    const auto back = read_trajectory(path);
    REQUIRE(back.size() == records.size());
    CHECK(back[0].step == 1000);
    CHECK(back[149].step == 150000);
    CHECK(back[10].my == doctest::Approx(records[10].my).epsilon(1e-6));

    write_trajectory(records, path, true);
    CHECK(slurp(path).find("\r\n") != std::string::npos);
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_trajectory(records, "no_such_dir/x.tsv"), io_error);
}
