#include <cmath>
#include <random>

#include "doctest.h"
#include "mmsim/local_fields.hpp"
#include "mmsim/problems.hpp"

using namespace mmsim;

namespace {

MaterialParams sp4_material() {
    MaterialParams p;
    p.a_ex = 1.3e7;
    p.ms = 800.0;
    p.hk = 0.0;
    p.alpha = 0.5;
    return p;
}

VectorField<double> random_field(const Grid& grid, double scale, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorField<double> m(grid);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.x[i] = scale * dist(rng);
        m.y[i] = scale * dist(rng);
        m.z[i] = scale * dist(rng);
    }
    return m;
}

} // namespace

TEST_CASE("exchange field vanishes exactly for uniform magnetization") {
    const Grid grid(6, 4, 3, 2.0);
    const auto m = init_uniform<double>(grid, {0.3, -0.5, 0.8}, 800.0);
    const auto h = exchange_field(m, sp4_material(), grid);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.x[i] == 0.0);
        CHECK(h.y[i] == 0.0);
        CHECK(h.z[i] == 0.0);
    }
}

TEST_CASE("exchange stencil on a 3x1x1 line with Neumann ends") {
    const Grid grid(3, 1, 1, 2.0);
    const MaterialParams params = sp4_material();
    const double v = 13.5;
    VectorField<double> m(grid);
    m.x[0] = 0.0;
    m.x[1] = v;
    m.x[2] = 0.0;
    const auto h = exchange_field(m, params, grid);
    // Oracle: hand evaluation of the boundary-specialized stencil. End cells
    // see one live neighbor (difference v), the middle cell two (each -v).
    const double c = params.exchange_coefficient(grid.delta);
    CHECK(h.x[0] == doctest::Approx(c * v).epsilon(1e-14));
    CHECK(h.x[1] == doctest::Approx(-2.0 * c * v).epsilon(1e-14));
    CHECK(h.x[2] == doctest::Approx(c * v).epsilon(1e-14));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(h.y[i] == 0.0);
        CHECK(h.z[i] == 0.0);
    }
}

TEST_CASE("exchange coefficient for the switching-problem constants") {
    // Oracle: 2A/(mu0 Ms^2) with A = 1.3e7, Ms = 800.
    const MaterialParams params = sp4_material();
    const double c = 2.0 * 1.3e7 / (kMu0 * 800.0 * 800.0);
    CHECK(params.exchange_coefficient(1.0) == doctest::Approx(c).epsilon(1e-15));
    CHECK(std::abs(c - 32.33) <= 0.01);
}

TEST_CASE("exchange field sums to zero over the grid") {
    const MaterialParams params = sp4_material();
    for (const Grid& grid : {Grid(6, 5, 4, 1.0), Grid(166, 42, 1, 3.0)}) {
        const auto m = random_field(grid, 800.0, 31u + static_cast<unsigned>(grid.nx));
        const auto h = exchange_field(m, params, grid);
        double sx = 0.0, sy = 0.0, sz = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            sx += h.x[i];
            sy += h.y[i];
            sz += h.z[i];
            scale = std::max({scale, std::abs(h.x[i]), std::abs(h.y[i]), std::abs(h.z[i])});
        }
        CHECK(std::abs(sx) <= 1e-12 * scale * grid.cell_count());
        CHECK(std::abs(sy) <= 1e-12 * scale * grid.cell_count());
        CHECK(std::abs(sz) <= 1e-12 * scale * grid.cell_count());
    }
}

TEST_CASE("exchange field is linear in M") {
    const Grid grid(4, 3, 3, 1.0);
    const MaterialParams params = sp4_material();
    const auto m1 = random_field(grid, 1.0, 51u);
    const auto m2 = random_field(grid, 1.0, 52u);
    VectorField<double> combo(grid);
    const double a = 2.0, b = -3.5;
    for (std::size_t i = 0; i < combo.size(); ++i) {
        combo.x[i] = a * m1.x[i] + b * m2.x[i];
        combo.y[i] = a * m1.y[i] + b * m2.y[i];
        combo.z[i] = a * m1.z[i] + b * m2.z[i];
    }
    const auto h1 = exchange_field(m1, params, grid);
    const auto h2 = exchange_field(m2, params, grid);
    const auto hc = exchange_field(combo, params, grid);
    for (std::size_t i = 0; i < hc.size(); ++i) {
        CHECK(hc.x[i] == doctest::Approx(a * h1.x[i] + b * h2.x[i]).epsilon(1e-10));
        CHECK(hc.y[i] == doctest::Approx(a * h1.y[i] + b * h2.y[i]).epsilon(1e-10));
        CHECK(hc.z[i] == doctest::Approx(a * h1.z[i] + b * h2.z[i]).epsilon(1e-10));
    }
}

TEST_CASE("anisotropy field projects the x component only") {
    MaterialParams params = sp4_material();
    params.hk = 100.0;
    const Grid grid(2, 2, 1, 1.0);

    auto m = init_uniform<double>(grid, {1.0, 0.0, 0.0}, params.ms);
    auto h = anisotropy_field(m, params);
    CHECK(h.x[0] == doctest::Approx(100.0).epsilon(1e-14));

    m.fill(0.0, 345.0, -120.0);
    h = anisotropy_field(m, params);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.x[i] == 0.0);
        CHECK(h.y[i] == 0.0);
        CHECK(h.z[i] == 0.0);
    }

    m.fill(400.0, 17.0, -9.0);
    h = anisotropy_field(m, params);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.x[i] == doctest::Approx(50.0).epsilon(1e-14)); // hk Mx / ms
        CHECK(h.y[i] == 0.0);
        CHECK(h.z[i] == 0.0);
    }
}

TEST_CASE("applied field follows the staged program") {
    const FieldSchedule schedule = standard_problem_4().schedule;

    AppliedField a = schedule.at(1000);
    CHECK(a.field.x == 100.0);
    CHECK(a.field.y == 100.0);
    CHECK(a.field.z == 100.0);
    CHECK(!a.alpha_override);

    a = schedule.at(5000);
    CHECK(a.field.x == doctest::Approx(50.0).epsilon(1e-14));
    CHECK(a.field.y == doctest::Approx(50.0).epsilon(1e-14));

    a = schedule.at(60000);
    CHECK(a.field.x == doctest::Approx(-19.576).epsilon(1e-14));
    CHECK(a.field.y == doctest::Approx(3.422).epsilon(1e-14));
    CHECK(a.field.z == 0.0);
    REQUIRE(a.alpha_override.has_value());
    CHECK(*a.alpha_override == 0.02);

    // Stage boundaries: constant stage ends where the ramp picks up the same
    // value; the ramp's limit value at its end is zero; uncovered steps are
    // field free.
    CHECK(schedule.at(3999).field.x == 100.0);
    CHECK(schedule.at(4000).field.x == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(schedule.at(6000).field.x == 0.0);
    CHECK(schedule.at(20000).field.y == 0.0);
    const ScheduleStage& ramp = schedule.stages()[1];
    CHECK(ramp.value_at(ramp.end).x == 0.0);
}

TEST_CASE("schedule stages must be disjoint and nonempty") {
    ScheduleStage a;
    a.start = 0;
    a.end = 10;
    ScheduleStage b;
    b.start = 5;
    b.end = 15;
    CHECK_THROWS_AS(FieldSchedule({a, b}), std::invalid_argument);

    ScheduleStage empty;
    empty.start = 10;
    empty.end = 10;
    CHECK_THROWS_AS(FieldSchedule({empty}), std::invalid_argument);

    const FieldSchedule none;
    CHECK(none.at(123).field.x == 0.0);
    CHECK(!none.at(123).alpha_override);
}

TEST_CASE("effective field assembles the three terms plus the applied field") {
    const Grid grid(2, 1, 1, 1.0);
    VectorField<double> hd(grid), he(grid), ha(grid);

    SUBCASE("all zero") {
        const auto h = effective_field(hd, he, ha, Vec3{});
        CHECK(h.x[0] == 0.0);
        CHECK(h.y[1] == 0.0);
    }
    SUBCASE("applied field broadcasts to every cell") {
        const auto h = effective_field(hd, he, ha, Vec3{1.0, 2.0, 3.0});
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(h.x[i] == 1.0);
            CHECK(h.y[i] == 2.0);
            CHECK(h.z[i] == 3.0);
        }
    }
    SUBCASE("componentwise sum") {
        hd.x[0] = 1.0;
        he.y[0] = 1.0;
        ha.z[0] = 1.0;
        const auto h = effective_field(hd, he, ha, Vec3{1.0, 1.0, 1.0});
        CHECK(h.x[0] == 2.0);
        CHECK(h.y[0] == 2.0);
        CHECK(h.z[0] == 2.0);
    }
    SUBCASE("shape mismatch") {
        const VectorField<double> other(Grid(3, 1, 1, 1.0));
        CHECK_THROWS_AS(effective_field(hd, he, other, Vec3{}), std::invalid_argument);
    }
}
