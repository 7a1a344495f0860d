#include "mmsim/llg.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "mmsim/errors.hpp"
#include "mmsim/local_fields.hpp"

namespace mmsim {

const char* to_string(Precision p) {
    return p == Precision::f32 ? "f32" : "f64";
}

Precision precision_from_string(const std::string& name) {
    if (name == "f32") return Precision::f32;
    if (name == "f64") return Precision::f64;
    throw std::invalid_argument("unknown precision '" + name + "' (expected f32 or f64)");
}

template <typename T>
Simulation<T>::Simulation(const ProblemSpec& spec, Backend backend)
    : Simulation(spec, backend,
                 std::make_shared<const SpectralTensor<T>>(
                     spectral_prepare(build_demag_tensor<T>(spec.grid, backend)))) {}

template <typename T>
Simulation<T>::Simulation(const ProblemSpec& spec, Backend backend,
                          std::shared_ptr<const SpectralTensor<T>> spectral)
    : spec_(spec), backend_(backend), alpha_(spec.material.alpha),
      integ_(IntegratorParams::make(spec.dt, spec.material.alpha, spec.material.ms)),
      m_(init_uniform<T>(spec.grid, spec.initial_direction, spec.material.ms)),
      heff_(spec.grid), hdemag_(spec.grid), demag_(std::move(spectral), backend) {
    spec_.material.validate();
    if (!demag_.grid().same_shape(spec_.grid))
        throw std::invalid_argument("Simulation: spectral tensor grid does not match spec grid");
}

template <typename T>
void Simulation<T>::update_alpha(double alpha) {
    alpha_ = alpha;
    integ_ = IntegratorParams::make(spec_.dt, alpha, spec_.material.ms);
}

template <typename T>
void Simulation<T>::assemble_effective_field() {
    const AppliedField applied = spec_.schedule.at(step_);
    if (applied.alpha_override && *applied.alpha_override != alpha_)
        update_alpha(*applied.alpha_override);

    demag_.compute(m_, heff_);
    add_exchange_field(m_, spec_.material, spec_.grid, backend_, heff_);
    add_anisotropy_field(m_, spec_.material, backend_, heff_);
    add_uniform_field(applied.field, backend_, heff_);
}

template <typename T>
void Simulation<T>::step() {
    assemble_effective_field();

    const T p1 = static_cast<T>(integ_.prefactor1);
    const T p2 = static_cast<T>(integ_.prefactor2);
    T* mx = m_.x.data();
    T* my = m_.y.data();
    T* mz = m_.z.data();
    const T* hx = heff_.x.data();
    const T* hy = heff_.y.data();
    const T* hz = heff_.z.data();

    // Torque T = M x H, damping term M x T, explicit Euler update. The
    // per-block torque maximum rides along for the optional stop criterion.
    const std::size_t n = m_.size();
    const std::size_t nblocks = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
    std::vector<double> torque_sq(nblocks, 0.0);
    double* tmax = torque_sq.data();
    for_range(backend_, nblocks, [=](std::size_t b0, std::size_t b1) {
        for (std::size_t blk = b0; blk < b1; ++blk) {
            const std::size_t lo = blk * detail::kReduceBlock;
            const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
            double block_max = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                const T tx = my[i] * hz[i] - mz[i] * hy[i];
                const T ty = mz[i] * hx[i] - mx[i] * hz[i];
                const T tz = mx[i] * hy[i] - my[i] * hx[i];
                const T dx = p1 * tx + p2 * (my[i] * tz - mz[i] * ty);
                const T dy = p1 * ty + p2 * (mz[i] * tx - mx[i] * tz);
                const T dz = p1 * tz + p2 * (mx[i] * ty - my[i] * tx);
                block_max = std::max(block_max,
                                     double(tx) * tx + double(ty) * ty + double(tz) * tz);
                mx[i] += dx;
                my[i] += dy;
                mz[i] += dz;
            }
            tmax[blk] = block_max;
        }
    });
    double torque_max = 0.0;
    for (double t : torque_sq) torque_max = std::max(torque_max, t);
    last_torque_sq_ = torque_max;

    try {
        renormalize(m_, spec_.material.ms, backend_);
    } catch (const numerical_error& e) {
        throw numerical_error(std::string(e.what()) + " at step " + std::to_string(step_));
    }
    ++step_;
}

template <typename T>
std::int64_t Simulation<T>::run(const RunOptions& opts) {
    const double ms2 = spec_.material.ms * spec_.material.ms;
    std::int64_t done = 0;
    for (; done < opts.steps; ) {
        step();
        ++done;
        if (opts.sink && opts.cadence > 0 && step_ % opts.cadence == 0) {
            const Vec3 avg = average_unit();
            opts.sink(TrajectoryRecord{step_, avg.x, avg.y, avg.z});
        }
        if (opts.stop_torque && std::sqrt(last_torque_sq_) / ms2 < *opts.stop_torque) break;
    }
    return done;
}

template <typename T>
Vec3 Simulation<T>::average_unit() const {
    const Vec3 avg = average_magnetization(m_, backend_);
    const double inv_ms = 1.0 / spec_.material.ms;
    return {avg.x * inv_ms, avg.y * inv_ms, avg.z * inv_ms};
}

template <typename T>
double Simulation<T>::energy() {
    const AppliedField applied = spec_.schedule.at(step_);
    demag_.compute(m_, hdemag_);
    return total_energy(m_, hdemag_, applied.field, spec_.material, spec_.grid, backend_);
}

template <typename T>
double Simulation<T>::max_torque() {
    assemble_effective_field();
    const T* mx = m_.x.data();
    const T* my = m_.y.data();
    const T* mz = m_.z.data();
    const T* hx = heff_.x.data();
    const T* hy = heff_.y.data();
    const T* hz = heff_.z.data();
    const double sq = blocked_max(backend_, m_.size(), [=](std::size_t i) {
        const double tx = double(my[i]) * hz[i] - double(mz[i]) * hy[i];
        const double ty = double(mz[i]) * hx[i] - double(mx[i]) * hz[i];
        const double tz = double(mx[i]) * hy[i] - double(my[i]) * hx[i];
        return tx * tx + ty * ty + tz * tz;
    });
    return std::sqrt(sq) / (spec_.material.ms * spec_.material.ms);
}

template <typename T>
Precision Simulation<T>::precision() const {
    return sizeof(T) == sizeof(double) ? Precision::f64 : Precision::f32;
}

std::unique_ptr<SimulationBase> make_simulation(const ProblemSpec& spec, Backend backend,
                                                Precision precision) {
    if (precision == Precision::f32)
        return std::make_unique<Simulation<float>>(spec, backend);
    return std::make_unique<Simulation<double>>(spec, backend);
}

template class Simulation<float>;
template class Simulation<double>;

} // namespace mmsim
