// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_MINIMIZING_HPP
#define HARDYLERAY_MINIMIZING_HPP

#include <cstdint>

#include "hardyleray/field.hpp"
#include "hardyleray/params.hpp"
#include "hardyleray/polar2d.hpp"

namespace hardyleray {

/// Families of concentrating fields whose Rayleigh quotients approach the
/// sharp value from above as k grows.
enum class MinimizingKind {
  Poloidal,     // n > 2: v_theta = g_k sin(theta), v_rho completing it
  Azimuthal,    // n > 2: v_phi = g_k sin(theta)
  PlanarNuZero, // n = 2: v_phi = g_k
  PlanarNuOne,  // n = 2: v_phi = g_k cos(phi - phi0), v_rho completing it
};

const char* minimizing_kind_name(MinimizingKind k);

/// The frequency profile is a Gaussian of width 1/k, so the t profile is a
/// Gaussian of width k; doubling k quarters the quotient gap.
struct MinimizingSequenceSpec {
  MinimizingKind kind;
  double k;
  double phi0 = 0.0;  // PlanarNuOne only
  Params params;

  MinimizingSequenceSpec(MinimizingKind kind_, double k_, const Params& p,
                         double phi0_ = 0.0);
};

/// Gaussian t profile exp(-(t - center)^2 / (2 k^2)) on the grid nodes;
/// throws when it fails to decay below decay_tol at the boundaries.
Eigen::VectorXd concentration_profile(const Eigen::VectorXd& t_nodes, double k,
                                      double decay_tol = 1e-8);

/// Half-width of the t range needed for the profile of a given k to pass
/// the boundary-decay check with margin.
double suggested_t_half(double k);

/// Half-width for fields completed through the divergence constraint: the
/// constraint filter has an exp(-|n/2 - gamma| |t|) tail, so the grid must
/// leave room for it to fall below the decay threshold. Throws when gamma
/// is too close to n/2 for any reasonable grid.
double suggested_t_half_divfree(const Params& p);

/// Spec-aware range: widens the t interval when the sequence includes a
/// component completed through the divergence constraint, whose tail
/// decays like exp(-|n/2 - gamma| |t|) rather than like the Gaussian.
double suggested_t_half(const MinimizingSequenceSpec& spec);

AxisymField build_axisym_minimizer(const MinimizingSequenceSpec& spec,
                                   GridPtr grid);
PolarField2D build_planar_minimizer(const MinimizingSequenceSpec& spec,
                                    PolarGridPtr grid);

/// Random admissible axisymmetric field: smooth random v_theta and v_phi
/// (Gaussian envelopes in t times pole-vanishing angular profiles) with
/// v_rho completing the divergence constraint. Deterministic per seed.
AxisymField random_divfree_axisym(std::uint64_t seed, const Params& p,
                                  GridPtr grid);

}  // namespace hardyleray

#endif  // HARDYLERAY_MINIMIZING_HPP
