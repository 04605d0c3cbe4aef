#include "chiralpol/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chiralpol/errors.hpp"

namespace chiralpol {

double DerivedCouplings::collective_coupling() const { return std::sqrt(static_cast<double>(n_emitters)) * g_tilde; }

double DerivedCouplings::chirality() const { return xi_tilde * sign(lambda); }

double effective_projection(const Emitter& e, const CavityMode& mode) {
  const Vec3 eps = standing_wave_polarization(mode);
  const Mat3 grad = polarization_gradient(mode);
  return e.mu.dot(eps) + e.quadrupole.cwiseProduct(grad).sum();
}

double dressed_photon_frequency(const Mat3& chi_m, const CavityMode& mode, std::uint64_t n_emitters) {
  const Vec3 eps = standing_wave_polarization(mode);
  const double contraction = eps.dot(chi_m * eps);
  const double radicand = mode.omega_k * mode.omega_k + 2.0 * static_cast<double>(n_emitters) * mode.eta * mode.eta *
                                                            mode.k_z * mode.k_z * contraction;
  if (radicand < 0.0)
    throw InstabilityError("magnetic instability: dressed photon frequency squared = " + std::to_string(radicand) +
                               " (eps.chi_m.eps = " + std::to_string(contraction) + ")",
                           radicand);
  return std::sqrt(radicand);
}

namespace {

double matter_dressing(const Emitter& e, const CavityMode& mode, double multiplicity) {
  const double proj = standing_wave_polarization(mode).dot(e.mu);
  const double sq = e.omega_m * e.omega_m + multiplicity * 2.0 * e.omega_m * mode.eta * mode.eta * proj * proj;
  assert(sq > 0.0);
  return std::sqrt(sq);
}

DerivedCouplings couplings_with_matter_frequency(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters,
                                                 double omega_m_tilde) {
  DerivedCouplings c;
  c.n_emitters = n_emitters;
  c.lambda = mode.handedness;
  c.omega_k_bar = dressed_photon_frequency(e.chi_m, mode, n_emitters);
  c.omega_m_tilde = omega_m_tilde;

  const double proj = effective_projection(e, mode);
  const double magnetic = standing_wave_polarization(mode).dot(chiral_tdm_vector(e));
  const double scale = std::max(e.mu.norm(), e.quadrupole.norm() * std::abs(mode.k_z));
  if (scale == 0.0 || std::abs(proj) <= 1e-12 * scale) {
    c.decoupled = true;
    return c;
  }
  c.g_tilde = mode.eta * std::sqrt(c.omega_k_bar * e.omega_m / (2.0 * c.omega_m_tilde)) * proj;
  c.xi_tilde = (c.omega_m_tilde * mode.omega_k) / (e.omega_m * c.omega_k_bar) * magnetic / proj;
  c.g_bar = mode.eta * std::sqrt(c.omega_k_bar / 2.0) * proj;
  c.xi_bar = mode.omega_k / c.omega_k_bar * magnetic / proj;
  return c;
}

void check_inputs(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  e.validate();
  mode.validate();
  if (mode.theta_inc != 0.0) throw std::invalid_argument("derive_couplings requires a vertical mode (theta_inc = 0)");
  if (n_emitters < 1) throw std::invalid_argument("derive_couplings requires N >= 1");
}

}  // namespace

double dressed_matter_frequency(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  return matter_dressing(e, mode, static_cast<double>(n_emitters));
}

DerivedCouplings derive_couplings(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  check_inputs(e, mode, n_emitters);
  return couplings_with_matter_frequency(e, mode, n_emitters, dressed_matter_frequency(e, mode, n_emitters));
}

DerivedCouplings derive_couplings_local_selfpol(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  check_inputs(e, mode, n_emitters);
  return couplings_with_matter_frequency(e, mode, n_emitters, matter_dressing(e, mode, 1.0));
}

}  // namespace chiralpol
