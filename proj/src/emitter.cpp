#include "chiralpol/emitter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "chiralpol/model.hpp"

namespace chiralpol {

namespace {

constexpr double kTensorTol = 1e-12;

// Uniform double in [0, 1) from the top 53 bits; mt19937_64 output is fully
// specified by the standard, so the stream is reproducible across platforms.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool is_symmetric(const Mat3& m) { return (m - m.transpose()).norm() <= kTensorTol; }

}  // namespace

Emitter Emitter::collinear(double omega_m, const Vec3& mu, double xi) {
  Emitter e;
  e.omega_m = omega_m;
  e.mu = mu;
  e.xi_scale = xi;
  return e;
}

Emitter Emitter::mirrored() const {
  Emitter e = *this;
  e.xi_scale = -xi_scale;
  return e;
}

void Emitter::validate() const {
  if (!(omega_m > 0.0)) throw std::invalid_argument("omega_m must be positive");
  if (!mu.allFinite()) throw std::invalid_argument("mu must be finite");
  if (!std::isfinite(xi_scale)) throw std::invalid_argument("xi_scale must be finite");
  if ((xi_rotation.transpose() * xi_rotation - Mat3::Identity()).norm() > kTensorTol)
    throw std::invalid_argument("xi_rotation must be orthogonal");
  if (!is_symmetric(quadrupole)) throw std::invalid_argument("quadrupole must be symmetric");
  if (!is_symmetric(chi_m)) throw std::invalid_argument("chi_m must be symmetric");
  if (!(roll_delta >= 0.0 && roll_delta < 2.0 * std::numbers::pi))
    throw std::invalid_argument("roll_delta must lie in [0, 2 pi)");
}

Mat3 rotation_about(const Vec3& axis, double angle) {
  const double norm = axis.norm();
  if (norm == 0.0) {
    if (angle == 0.0) return Mat3::Identity();
    throw std::invalid_argument("rotation_about: zero axis with nonzero angle");
  }
  const Vec3 n = axis / norm;
  Mat3 skew;
  skew << 0.0, -n.z(), n.y(),
          n.z(), 0.0, -n.x(),
          -n.y(), n.x(), 0.0;
  return Mat3::Identity() + std::sin(angle) * skew + (1.0 - std::cos(angle)) * skew * skew;
}

Vec3 chiral_tdm_vector(const Emitter& e) {
  const Vec3 mapped = e.xi_scale * (e.xi_rotation * e.mu);
  if (e.roll_delta == 0.0) return mapped;
  if (e.mu.norm() == 0.0) throw std::invalid_argument("chiral_tdm_vector: mu = 0 leaves the roll axis undefined");
  return rotation_about(e.mu, e.roll_delta) * mapped;
}

ReciprocityCheck check_reciprocity(Complex xi_scale, const Mat3& rotation, double tol) {
  ReciprocityCheck check;
  check.imaginary_part = std::abs(xi_scale.imag());
  check.orthogonality_defect = (rotation.transpose() * rotation - Mat3::Identity()).norm();
  if (check.imaginary_part > 0.0) {
    check.ok = false;
    check.reason = "Im(s) = " + std::to_string(check.imaginary_part) + " breaks reciprocity";
  } else if (check.orthogonality_defect > tol) {
    check.ok = false;
    check.reason = "U is not orthogonal (||U^T U - I|| = " + std::to_string(check.orthogonality_defect) + ")";
  }
  return check;
}

double orientation_bracket(const Emitter& e, double lambda) {
  const double s = e.xi_scale;
  const double mu2 = e.mu.squaredNorm();
  return (1.0 + s * s) * mu2 + 2.0 * lambda * s * e.mu.dot(e.xi_rotation * e.mu);
}

namespace {

// eta^2 w~_m w_k^2 / (2 w-_k w_m): the coupling prefactor at the emitter's own orientation.
double orientation_prefactor(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  const DerivedCouplings c = derive_couplings(e, mode, n_emitters);
  return mode.eta * mode.eta * c.omega_m_tilde * mode.omega_k * mode.omega_k / (2.0 * c.omega_k_bar * e.omega_m);
}

}  // namespace

double orientation_averaged_coupling_sq(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  return static_cast<double>(n_emitters) / 3.0 * orientation_prefactor(e, mode, n_emitters) *
         orientation_bracket(e, mode.lambda());
}

OrientationSample sample_orientation_coupling(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters,
                                              std::uint64_t seed, std::uint64_t n_samples) {
  if (n_samples < 100) throw std::invalid_argument("sample_orientation_coupling: n_samples must be >= 100");
  const double scale = static_cast<double>(n_emitters) * orientation_prefactor(e, mode, n_emitters);
  const Vec3 eps = standing_wave_polarization(mode);

  // Body-frame combination mu + lambda m/(-ic); a rigid rotation R acts on both.
  const Vec3 body = e.mu + mode.lambda() * chiral_tdm_vector(e);
  const double mu_norm = e.mu.norm();
  const Vec3 mu_hat = mu_norm > 0.0 ? Vec3(e.mu / mu_norm) : Vec3::UnitZ();

  std::mt19937_64 rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const double cos_theta = 2.0 * uniform01(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    const double delta = 2.0 * std::numbers::pi * uniform01(rng);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const Vec3 target(sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta);

    // Minimal rotation mu_hat -> target, then the roll about the new axis.
    const Vec3 cross = mu_hat.cross(target);
    const double cross_norm = cross.norm();
    const double dot = mu_hat.dot(target);
    Mat3 align;
    if (cross_norm > 1e-15) {
      align = rotation_about(cross, std::atan2(cross_norm, dot));
    } else if (dot > 0.0) {
      align = Mat3::Identity();
    } else {
      const Vec3 perp = std::abs(mu_hat.x()) < 0.9 ? mu_hat.cross(Vec3::UnitX()) : mu_hat.cross(Vec3::UnitY());
      align = rotation_about(perp, std::numbers::pi);
    }
    const Vec3 rotated = rotation_about(target, delta) * (align * body);
    const double proj = eps.dot(rotated);
    const double value = scale * proj * proj;

    // Welford update.
    const double d = value - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (value - mean);
  }
  OrientationSample out;
  out.estimate = mean;
  out.samples = n_samples;
  out.standard_error = std::sqrt(m2 / static_cast<double>(n_samples - 1) / static_cast<double>(n_samples));
  return out;
}

}  // namespace chiralpol
