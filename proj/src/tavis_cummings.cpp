#include "chiralpol/tavis_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chiralpol {

TCSpectrum single_excitation_spectrum(double omega_photon, double omega_m, double collective_coupling,
                                      std::uint64_t n_emitters) {
  if (n_emitters < 1) throw std::invalid_argument("single_excitation_spectrum: N must be >= 1");
  const double mean = 0.5 * (omega_m + omega_photon);
  const double half_detuning = 0.5 * (omega_m - omega_photon);
  const double split = std::hypot(half_detuning, collective_coupling);
  TCSpectrum s;
  s.polariton_upper = mean + split;
  s.polariton_lower = mean - split;
  s.dark_energy = omega_m;
  s.dark_count = n_emitters - 1;
  s.effective_coupling = collective_coupling;
  return s;
}

TCSpectrum single_excitation_spectrum(const DerivedCouplings& c, double omega_m) {
  const double g = std::sqrt(static_cast<double>(c.n_emitters)) * c.g_bar * (1.0 + c.xi_bar * sign(c.lambda));
  return single_excitation_spectrum(c.omega_k_bar, omega_m, g, c.n_emitters);
}

std::vector<double> single_excitation_eigenvalues(const TCSpectrum& s) {
  std::vector<double> out;
  out.reserve(s.dark_count + 2);
  out.push_back(s.polariton_lower);
  out.insert(out.end(), s.dark_count, s.dark_energy);
  out.push_back(s.polariton_upper);
  std::sort(out.begin(), out.end());
  return out;
}

ScanTable dispersion_scan(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters,
                          const std::vector<double>& k_par_list) {
  e.validate();
  mode.validate();
  if (n_emitters < 1) throw std::invalid_argument("dispersion_scan: N must be >= 1");
  ScanTable table({"k_par", "theta_inc", "omega_photon", "coupling", "polariton_upper", "polariton_lower",
                   "dark_energy", "dark_count"});
  const Vec3 m = chiral_tdm_vector(e);
  const CVec3 dipole = (e.mu + mode.lambda() * m).cast<Complex>();
  const double sqrt_n = std::sqrt(static_cast<double>(n_emitters));
  for (const double k_par : k_par_list) {
    const double k = std::hypot(mode.k_z, k_par);
    const double theta = std::atan2(std::abs(k_par), mode.k_z);
    const double omega = kSpeedOfLight * k;
    // Emitter plane at x = 0; the in-plane phase is absorbed by momentum matching.
    const CVec3 eps = oblique_polarization(mode.lambda(), k, theta, mode.z, 0.0);
    const double g = sqrt_n * mode.eta * std::sqrt(0.5 * omega) * std::abs(eps.cwiseProduct(dipole).sum());
    const TCSpectrum s = single_excitation_spectrum(omega, e.omega_m, g, n_emitters);
    table.add_row({k_par, theta, omega, g, s.polariton_upper, s.polariton_lower, s.dark_energy,
                   static_cast<double>(s.dark_count)});
  }
  return table;
}

}  // namespace chiralpol
