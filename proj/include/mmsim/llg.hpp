#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "mmsim/backend.hpp"
#include "mmsim/demag.hpp"
#include "mmsim/energy.hpp"
#include "mmsim/grid.hpp"
#include "mmsim/problems.hpp"
#include "mmsim/vector_field.hpp"

namespace mmsim {

// Euler step scaling factors; recomputed whenever the damping constant
// changes. prefactor1 multiplies M x H, prefactor2 the double cross product.
struct IntegratorParams {
    double dt = 0.0;
    double prefactor1 = 0.0; // -gamma_mu0 * dt / (1 + alpha^2)
    double prefactor2 = 0.0; // prefactor1 * alpha / ms

    static IntegratorParams make(double dt, double alpha, double ms) {
        IntegratorParams p;
        p.dt = dt;
        p.prefactor1 = -kGammaMu0 * dt / (1.0 + alpha * alpha);
        p.prefactor2 = p.prefactor1 * alpha / ms;
        return p;
    }
};

enum class Precision { f32, f64 };

const char* to_string(Precision p);
Precision precision_from_string(const std::string& name);

// One trajectory record: completed-step count and unit-normalized averages.
struct TrajectoryRecord {
    std::int64_t step = 0;
    double mx = 0.0, my = 0.0, mz = 0.0;
};

using TrajectorySink = std::function<void(const TrajectoryRecord&)>;

struct RunOptions {
    std::int64_t steps = 0;
    std::int64_t cadence = 1;
    TrajectorySink sink;                    // may be empty
    std::optional<double> stop_torque;      // stop when max|MxH|/ms^2 drops below
};

// Precision-erased simulation front end behind which Simulation<float> /
// Simulation<double> live. One instance owns its state exclusively; field
// kernels may use internal data parallelism per the chosen backend.
class SimulationBase {
public:
    virtual ~SimulationBase() = default;

    virtual void step() = 0;
    // Advances up to opts.steps steps, emitting a record every opts.cadence
    // completed steps. Returns the number of steps actually executed (fewer
    // than requested only when the torque criterion stops the run early).
    virtual std::int64_t run(const RunOptions& opts) = 0;

    virtual std::int64_t step_index() const = 0;
    virtual Vec3 average_unit() const = 0;    // <M>/ms, componentwise
    virtual double energy() = 0;              // total energy diagnostic, internal units
    virtual double max_torque() = 0;          // max_cell |M x H_eff| / ms^2
    virtual const ProblemSpec& spec() const = 0;
    virtual Backend backend() const = 0;
    virtual Precision precision() const = 0;
};

// Full per-step pipeline on concrete scalar type T: spectral demag + exchange
// + anisotropy + scheduled applied field, cross products, Euler update,
// renormalization.
template <typename T>
class Simulation : public SimulationBase {
public:
    Simulation(const ProblemSpec& spec, Backend backend);
    // Shares a prebuilt spectral tensor (it is immutable) instead of building
    // its own; grid/delta must match the spec.
    Simulation(const ProblemSpec& spec, Backend backend,
               std::shared_ptr<const SpectralTensor<T>> spectral);

    void step() override;
    std::int64_t run(const RunOptions& opts) override;

    std::int64_t step_index() const override { return step_; }
    Vec3 average_unit() const override;
    double energy() override;
    double max_torque() override;
    const ProblemSpec& spec() const override { return spec_; }
    Backend backend() const override { return backend_; }
    Precision precision() const override;

    const VectorField<T>& magnetization() const { return m_; }
    VectorField<T>& magnetization() { return m_; }

private:
    void assemble_effective_field(); // into heff_, using schedule at step_
    void update_alpha(double alpha);

    ProblemSpec spec_;
    Backend backend_;
    double alpha_;
    IntegratorParams integ_;
    VectorField<T> m_;
    VectorField<T> heff_;
    VectorField<T> hdemag_; // energy/torque diagnostics
    DemagSolver<T> demag_;
    std::int64_t step_ = 0;
    double last_torque_sq_ = 0.0; // max |M x H|^2 seen in the latest step
};

std::unique_ptr<SimulationBase> make_simulation(const ProblemSpec& spec, Backend backend,
                                                Precision precision);

extern template class Simulation<float>;
extern template class Simulation<double>;

} // namespace mmsim
