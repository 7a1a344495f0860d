#pragma once

#include <cstdint>
#include <string>

#include "mmsim/grid.hpp"
#include "mmsim/material.hpp"
#include "mmsim/schedule.hpp"

namespace mmsim {

// Complete run description: geometry, material, initial state, field program,
// and integration parameters. Built-ins are returned by value; callers may
// override any field.
struct ProblemSpec {
    std::string name;
    Grid grid;
    MaterialParams material;
    Vec3 initial_direction{1.0, 0.0, 0.0}; // uniform initial magnetization
    FieldSchedule schedule;
    double dt = 0.0;            // ns
    std::int64_t steps = 0;
    std::int64_t cadence = 1;   // trajectory output every this many steps
};

// muMAG standard problem #4 (thin-film switching, field 1): 166x42x1 cells of
// 3 nm, permalloy-like material, three-stage schedule (saturate along (1,1,1),
// ramp down, reversal field with reduced damping).
ProblemSpec standard_problem_4();

// muMAG standard problem #3 geometry as a scaling benchmark: n^3 cube,
// Ms = 1000 kA/m, Hk = 100 kA/m, high damping, no applied field.
ProblemSpec standard_problem_3_benchmark(int n);

} // namespace mmsim
