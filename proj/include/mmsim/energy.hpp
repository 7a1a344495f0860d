#pragma once

#include "mmsim/backend.hpp"
#include "mmsim/grid.hpp"
#include "mmsim/material.hpp"
#include "mmsim/vector_field.hpp"

namespace mmsim {

// Total magnetic energy (internal units): exchange + anisotropy + demag +
// Zeeman densities summed over cells times delta^3. The exchange density uses
// forward-difference bonds with the Neumann convention, consistent with the
// exchange field's stencil; demag enters as -1/2 mu0 H_demag.M and Zeeman as
// -mu0 H_ext.M. A diagnostic, not a field source.
template <typename T>
double total_energy(const VectorField<T>& m, const VectorField<T>& h_demag, Vec3 h_ext,
                    const MaterialParams& params, const Grid& grid,
                    Backend backend = Backend::serial);

// The exchange part alone (>= 0 for every field).
template <typename T>
double exchange_energy(const VectorField<T>& m, const MaterialParams& params, const Grid& grid,
                       Backend backend = Backend::serial);

extern template double total_energy<float>(const VectorField<float>&, const VectorField<float>&,
                                           Vec3, const MaterialParams&, const Grid&, Backend);
extern template double total_energy<double>(const VectorField<double>&, const VectorField<double>&,
                                            Vec3, const MaterialParams&, const Grid&, Backend);
extern template double exchange_energy<float>(const VectorField<float>&, const MaterialParams&,
                                              const Grid&, Backend);
extern template double exchange_energy<double>(const VectorField<double>&, const MaterialParams&,
                                               const Grid&, Backend);

} // namespace mmsim
