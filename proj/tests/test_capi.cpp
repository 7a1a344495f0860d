#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "mmsim.h"
#include "mmsim/trajectory.hpp"

namespace {

struct Collected {
    std::vector<long long> steps;
    std::vector<double> mx;
};

void collect(void* user, long long step, double mx, double, double) {
    auto* c = static_cast<Collected*>(user);
    c->steps.push_back(step);
    c->mx.push_back(mx);
}

} // namespace

TEST_CASE("config parse, describe, and free through the C surface") {
    mmsim_config* cfg = nullptr;
    REQUIRE(mmsim_config_parse("problem = sp3\nn = 4\nsteps = 20\n", &cfg) == MMSIM_OK);
    REQUIRE(cfg != nullptr);

    char* text = nullptr;
    REQUIRE(mmsim_config_describe(cfg, &text) == MMSIM_OK);
    CHECK(std::strstr(text, "problem = sp3") != nullptr);
    CHECK(std::strstr(text, "nx = 4") != nullptr);
    mmsim_string_free(text);
    mmsim_config_free(cfg);
}

TEST_CASE("bad configs surface MMSIM_ERROR_CONFIG with a message") {
    mmsim_config* cfg = nullptr;
    CHECK(mmsim_config_parse("problem = sp4\nbogus = 1\n", &cfg) == MMSIM_ERROR_CONFIG);
    CHECK(cfg == nullptr);
    CHECK(std::strlen(mmsim_last_error()) > 0);

    CHECK(mmsim_config_parse(nullptr, &cfg) == MMSIM_ERROR_ARGUMENT);
    CHECK(mmsim_config_load("definitely_missing.cfg", &cfg) == MMSIM_ERROR_IO);
}

TEST_CASE("simulation lifecycle through the C surface") {
    mmsim_config* cfg = nullptr;
    REQUIRE(mmsim_config_parse("problem = sp3\nn = 4\nsteps = 40\ncadence = 10\n", &cfg) ==
            MMSIM_OK);
    mmsim_sim* sim = nullptr;
    REQUIRE(mmsim_sim_create(cfg, &sim) == MMSIM_OK);

    double avg[3] = {0, 0, 0};
    REQUIRE(mmsim_sim_average(sim, avg) == MMSIM_OK);
    CHECK(avg[0] == doctest::Approx(1.0).epsilon(1e-12)); // starts uniform +x

    REQUIRE(mmsim_sim_step(sim, 5) == MMSIM_OK);
    long long idx = 0;
    REQUIRE(mmsim_sim_step_index(sim, &idx) == MMSIM_OK);
    CHECK(idx == 5);

    double energy = 0.0, torque = 0.0;
    REQUIRE(mmsim_sim_energy(sim, &energy) == MMSIM_OK);
    REQUIRE(mmsim_sim_max_torque(sim, &torque) == MMSIM_OK);
    CHECK(std::isfinite(energy));
    CHECK(torque >= 0.0);

    Collected c;
    long long done = -1;
    REQUIRE(mmsim_sim_run(sim, 20, 10, collect, &c, &done) == MMSIM_OK);
    CHECK(done == 20);
    REQUIRE(c.steps.size() == 2);
    CHECK(c.steps[0] == 10); // cadence counts completed steps
    CHECK(c.steps[1] == 20);
    CHECK(std::abs(c.mx[0]) <= 1.0 + 1e-12);

    mmsim_sim_free(sim);
    mmsim_config_free(cfg);
}

TEST_CASE("null handles are rejected") {
    CHECK(mmsim_sim_create(nullptr, nullptr) == MMSIM_ERROR_ARGUMENT);
    CHECK(mmsim_sim_step(nullptr, 1) == MMSIM_ERROR_ARGUMENT);
    CHECK(mmsim_sim_average(nullptr, nullptr) == MMSIM_ERROR_ARGUMENT);
    CHECK(mmsim_simulate(nullptr, nullptr) == MMSIM_ERROR_ARGUMENT);
    CHECK(std::string(mmsim_status_string(MMSIM_ERROR_CONFIG)) == "configuration error");
}

TEST_CASE("mmsim_simulate writes the configured trajectory file") {
    const char* path = "capi_trajectory.tsv";
    mmsim_config* cfg = nullptr;
    REQUIRE(mmsim_config_parse("problem = sp3\nn = 4\nsteps = 30\ncadence = 10\n", &cfg) ==
            MMSIM_OK);
    REQUIRE(mmsim_simulate(cfg, path) == MMSIM_OK);
    mmsim_config_free(cfg);

    const auto records = mmsim::read_trajectory(path);
    REQUIRE(records.size() == 3);
    CHECK(records[0].step == 10);
    CHECK(records[2].step == 30);
    std::remove(path);
}

TEST_CASE("benchmark through the C surface on toy sizes") {
    char* table = nullptr;
    char* tsv = nullptr;
    REQUIRE(mmsim_benchmark("2,3", "serial", "f64", 1, 2, &table, &tsv) == MMSIM_OK);
    CHECK(std::strstr(table, "2^3") != nullptr);
    CHECK(std::strstr(table, "serial f64") != nullptr);
    CHECK(std::strstr(tsv, "2^3\tserial\tf64\t") != nullptr);
    mmsim_string_free(table);
    mmsim_string_free(tsv);

    CHECK(mmsim_benchmark(nullptr, nullptr, nullptr, 0, 1, nullptr, nullptr) ==
          MMSIM_ERROR_ARGUMENT);
}
