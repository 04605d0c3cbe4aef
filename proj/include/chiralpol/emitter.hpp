#pragma once

#include <cstdint>
#include <string>

#include "chiralpol/fields.hpp"
#include "chiralpol/types.hpp"

namespace chiralpol {

/// Chiral emitter with a real electric transition dipole `mu`. The magnetic
/// transition dipole is m = -i c R_mu(roll_delta) s U mu with s = xi_scale and
/// U = xi_rotation (orthogonal).
struct Emitter {
  double omega_m = 0.09;
  Vec3 mu = Vec3(4.0, 0.0, 0.0);
  Mat3 quadrupole = Mat3::Zero();
  double xi_scale = 0.0;
  Mat3 xi_rotation = Mat3::Identity();
  double roll_delta = 0.0;
  Mat3 chi_m = Mat3::Zero();

  /// Collinear electric and magnetic moments with scalar chirality xi.
  static Emitter collinear(double omega_m, const Vec3& mu, double xi);

  /// Copy with xi_scale negated (the mirror enantiomer).
  Emitter mirrored() const;

  void validate() const;
};

/// Rodrigues rotation by `angle` about `axis` (normalized internally).
Mat3 rotation_about(const Vec3& axis, double angle);

/// R_mu(delta) s U mu, i.e. m / (-i c).
Vec3 chiral_tdm_vector(const Emitter& e);

struct ReciprocityCheck {
  bool ok = true;
  double imaginary_part = 0.0;        // |Im s|
  double orthogonality_defect = 0.0;  // ||U^T U - I||_F
  std::string reason;
};

/// Onsager-Casimir constraint on xi = s U: s real and U orthogonal.
ReciprocityCheck check_reciprocity(Complex xi_scale, const Mat3& rotation, double tol = 1e-10);

/// (1 + s^2)|mu|^2 + 2 lambda s <mu|U mu>.
double orientation_bracket(const Emitter& e, double lambda);

/// Isotropic orientation average of the squared collective coupling,
/// (N/3) eta^2 w~_m w_k^2 / (2 w-_k w_m) times the bracket above.
double orientation_averaged_coupling_sq(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters);

struct OrientationSample {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of the same average over Haar-random molecular
/// orientations (cos theta, phi, roll delta uniform). Deterministic in `seed`.
OrientationSample sample_orientation_coupling(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters,
                                              std::uint64_t seed, std::uint64_t n_samples);

}  // namespace chiralpol
