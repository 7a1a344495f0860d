#include "mmsim/problems.hpp"

#include <stdexcept>

namespace mmsim {

ProblemSpec standard_problem_4() {
    ProblemSpec p;
    p.name = "sp4";
    p.grid = Grid(166, 42, 1, 3.0);
    p.material.a_ex = 1.3e7; // 1.3e-11 J/m
    p.material.ms = 800.0;
    p.material.hk = 0.0;     // no anisotropy in this problem
    p.material.alpha = 0.5;  // relaxation damping; lowered for the reversal
    p.initial_direction = {1.0, 0.0, 0.0};
    p.dt = 5e-6;
    p.steps = 150000;
    p.cadence = 1000;

    // Saturate along (1,1,1), ramp the field to zero, then switch with the
    // reverse field (-24.6 mT, 4.3 mT, 0) / mu0 at low damping.
    ScheduleStage saturate;
    saturate.start = 0;
    saturate.end = 4000;
    saturate.field = {100.0, 100.0, 100.0};

    ScheduleStage ramp_down;
    ramp_down.start = 4000;
    ramp_down.end = 6000;
    ramp_down.field = {100.0, 100.0, 100.0};
    ramp_down.ramp = true;
    ramp_down.field_end = {0.0, 0.0, 0.0};

    ScheduleStage reverse;
    reverse.start = 50001;
    reverse.end = p.steps + 1;
    reverse.field = {-19.576, 3.422, 0.0};
    reverse.alpha_override = 0.02;

    p.schedule = FieldSchedule({saturate, ramp_down, reverse});
    return p;
}

ProblemSpec standard_problem_3_benchmark(int n) {
    if (n < 1) throw std::invalid_argument("standard_problem_3_benchmark: n must be >= 1");
    ProblemSpec p;
    p.name = "sp3";
    p.grid = Grid(n, n, n, 1.0);
    p.material.a_ex = 1e7; // 1e-11 J/m
    p.material.ms = 1000.0;
    p.material.hk = 100.0;
    p.material.alpha = 0.5; // large damping, relaxation toward the energy minimum
    p.initial_direction = {1.0, 0.0, 0.0};
    p.dt = 1e-5;
    p.steps = 20000;
    p.cadence = 100;
    return p;
}

} // namespace mmsim
