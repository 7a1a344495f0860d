#pragma once

#include <stdexcept>

namespace mmsim {

// Internal unit system: lengths in nm, times in ns, magnetization and fields
// in kA/m. In these units the exchange constant is the SI J/m value times
// 1e18, and the two constants below close the system.
inline constexpr double kMu0 = 1.256636;      // mT per kA/m (= 4*pi/10)
inline constexpr double kGammaMu0 = 0.221;    // gyromagnetic prefactor, (kA/m)^-1 ns^-1

struct MaterialParams {
    double a_ex = 0.0;  // exchange constant, J/m * 1e18
    double ms = 1.0;    // saturation magnetization, kA/m
    double hk = 0.0;    // uniaxial anisotropy field, kA/m; easy axis fixed along +x
    double alpha = 1.0; // Gilbert damping, dimensionless

    void validate() const {
        if (!(ms > 0.0)) throw std::invalid_argument("MaterialParams: ms must be > 0");
        if (a_ex < 0.0) throw std::invalid_argument("MaterialParams: a_ex must be >= 0");
        if (hk < 0.0) throw std::invalid_argument("MaterialParams: hk must be >= 0");
        if (!(alpha > 0.0)) throw std::invalid_argument("MaterialParams: alpha must be > 0");
    }

    // 2A/(mu0 Ms^2 delta^2), the six-neighbor stencil coefficient.
    double exchange_coefficient(double delta) const {
        return 2.0 * a_ex / (kMu0 * ms * ms * delta * delta);
    }

    // Anisotropy energy density K_u recovered from the field parameterization,
    // H_K = 2 K_u / (mu0 Ms).
    double ku() const { return 0.5 * hk * kMu0 * ms; }
};

} // namespace mmsim
