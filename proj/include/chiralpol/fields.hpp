#pragma once

#include "chiralpol/types.hpp"

namespace chiralpol {

/// A single-handedness chiral standing-wave mode.
///
/// `k_z` is the vertical wavenumber (omega_k / c for the vertical mode);
/// `eta` is the fundamental coupling sqrt(1 / (eps0 V)), the only place the
/// mode volume enters. `theta_inc` is the incidence angle of oblique modes.
struct CavityMode {
  Handedness handedness = Handedness::left;
  double omega_k = 0.09;
  double eta = 1e-3;
  double k_z = 0.09 / kSpeedOfLight;
  double z = 0.0;
  double theta_inc = 0.0;

  double lambda() const noexcept { return sign(handedness); }

  /// Vertical mode (k_par = 0) with k_z = omega_k / c.
  static CavityMode vertical(Handedness h, double omega_k, double eta, double z = 0.0);

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// (cos k_z z, -lambda sin k_z z, 0). Requires theta_inc == 0.
Vec3 standing_wave_polarization(const CavityMode& mode);

/// Oblique standing wave at in-plane position x. k_z is taken from the mode,
/// k_x = k_z tan(theta_inc).
CVec3 standing_wave_polarization_oblique(const CavityMode& mode, double x);

/// Same field written in terms of the total wavenumber k (k_z = k cos theta,
/// k_x = k sin theta). Valid for theta = pi/2 as well.
CVec3 oblique_polarization(double lambda, double k, double theta, double z, double x);

/// Gradient tensor d_a eps_b (row a, column b). Only the z row is non-zero.
Mat3 polarization_gradient(const CavityMode& mode);

/// Optical chirality density of a Fock state in the mode, lambda omega_k k_z eta^2 / 4.
/// Returned in units where the 1/V of the usual expression is replaced by eta^2
/// (eps0 folded in), so it is directly comparable across cavities with the same eta.
double optical_chirality_density(const CavityMode& mode);

}  // namespace chiralpol
