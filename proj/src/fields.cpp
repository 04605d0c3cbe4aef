#include "chiralpol/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chiralpol {

CavityMode CavityMode::vertical(Handedness h, double omega_k, double eta, double z) {
  CavityMode mode;
  mode.handedness = h;
  mode.omega_k = omega_k;
  mode.eta = eta;
  mode.k_z = omega_k / kSpeedOfLight;
  mode.z = z;
  mode.theta_inc = 0.0;
  return mode;
}

void CavityMode::validate() const {
  if (handedness != Handedness::left && handedness != Handedness::right)
    throw std::invalid_argument("cavity handedness must be +1 or -1");
  if (!(omega_k > 0.0)) throw std::invalid_argument("omega_k must be positive");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be non-negative");
  if (!std::isfinite(k_z) || !std::isfinite(z)) throw std::invalid_argument("k_z and z must be finite");
  if (!(theta_inc >= 0.0 && theta_inc < std::numbers::pi / 2))
    throw std::invalid_argument("theta_inc must lie in [0, pi/2)");
}

Vec3 standing_wave_polarization(const CavityMode& mode) {
  if (mode.theta_inc != 0.0)
    throw std::invalid_argument("standing_wave_polarization: nonzero theta_inc, use oblique variant");
  const double phase = mode.k_z * mode.z;
  return {std::cos(phase), -mode.lambda() * std::sin(phase), 0.0};
}

CVec3 oblique_polarization(double lambda, double k, double theta, double z, double x) {
  const double kz = k * std::cos(theta);
  const double kx = k * std::sin(theta);
  const double s = std::sin(kz * z);
  const CVec3 amplitude(std::cos(theta) * std::cos(kz * z), -lambda * s, Complex(0.0, -std::sin(theta) * s));
  return amplitude * std::polar(1.0, kx * x);
}

CVec3 standing_wave_polarization_oblique(const CavityMode& mode, double x) {
  const double k = mode.k_z / std::cos(mode.theta_inc);
  return oblique_polarization(mode.lambda(), k, mode.theta_inc, mode.z, x);
}

Mat3 polarization_gradient(const CavityMode& mode) {
  if (mode.theta_inc != 0.0)
    throw std::invalid_argument("polarization_gradient: nonzero theta_inc, use oblique variant");
  const double phase = mode.k_z * mode.z;
  Mat3 grad = Mat3::Zero();
  grad(2, 0) = -mode.k_z * std::sin(phase);
  grad(2, 1) = -mode.lambda() * mode.k_z * std::cos(phase);
  return grad;
}

double optical_chirality_density(const CavityMode& mode) {
  return mode.lambda() * mode.omega_k * mode.k_z * mode.eta * mode.eta / 4.0;
}

}  // namespace chiralpol
