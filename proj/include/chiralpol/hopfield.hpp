#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "chiralpol/emitter.hpp"
#include "chiralpol/fields.hpp"
#include "chiralpol/model.hpp"

namespace chiralpol {

/// The four numbers the chiral Hopfield spectrum depends on.
struct HopfieldParameters {
  double omega_photon = 1.0;  // w-_k
  double omega_matter = 1.0;  // w~_m
  double coupling = 0.0;      // sqrt(N) g~
  double chirality = 0.0;     // xi~ lambda
};

HopfieldParameters hopfield_parameters(const DerivedCouplings& c);

struct PolaritonFrequencies {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  bool degenerate = false;
};

/// Closed-form normal-mode frequencies, Omega_+ >= Omega_-.
/// Throws InstabilityError if the inner radicand or Omega_-^2 is negative, or
/// if the quadratic Hamiltonian is not bounded below.
PolaritonFrequencies polariton_frequencies(const HopfieldParameters& p);
PolaritonFrequencies polariton_frequencies(const DerivedCouplings& c);

/// The 4x4 matrix of the Heisenberg equation for Pi = x a + y a^+ + z B + u B^+,
/// evaluated at frequency `omega`. Rows follow (a, a^+, B, B^+).
Eigen::Matrix4cd hopfield_matrix(const HopfieldParameters& p, double omega);

/// Symplectic metric diag(1, -1, 1, -1).
Eigen::Vector4d hopfield_metric();

struct HopfieldCoefficients {
  Complex x, y, z, u;
  bool degenerate = false;
  double residual = 0.0;  // ||M(-Omega) v||

  Eigen::Vector4cd vector() const { return {x, y, z, u}; }
  double photon_fraction() const { return std::norm(x) - std::norm(y); }
  double matter_fraction() const { return std::norm(z) - std::norm(u); }
};

/// Annihilation-type polariton operator at frequency `omega` ([Pi, H] = omega Pi):
/// the null vector of hopfield_matrix(p, -omega), normalized to
/// |x|^2 - |y|^2 + |z|^2 - |u|^2 = 1 with x real and non-negative (y, then z,
/// then u when the preceding components vanish).
HopfieldCoefficients hopfield_coefficients(const HopfieldParameters& p, double omega);

/// Coefficients for both branches. At a degenerate frequency the two-dimensional
/// null space is split into a symplectically orthogonal pair.
std::array<HopfieldCoefficients, 2> hopfield_coefficient_pair(const HopfieldParameters& p,
                                                               const PolaritonFrequencies& f);

struct PolaritonSolution {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  HopfieldCoefficients coeffs_plus;
  HopfieldCoefficients coeffs_minus;
  double photon_fraction_plus = 0.0;
  double photon_fraction_minus = 0.0;
  double matter_fraction_plus = 0.0;
  double matter_fraction_minus = 0.0;
  double e_vac = 0.0;
  bool degenerate = false;
};

PolaritonSolution solve_hopfield(const HopfieldParameters& p);
PolaritonSolution solve_hopfield(const DerivedCouplings& c);

/// (Omega_+ + Omega_-) / 2, defined up to a handedness-independent constant.
double vacuum_energy(const PolaritonSolution& s);
double vacuum_energy(const PolaritonFrequencies& f);

struct Discrimination {
  double delta_omega_plus = 0.0;
  double delta_omega_minus = 0.0;
  double delta_e_vac = 0.0;
};

/// X(emitter) - X(mirror emitter), with the mirror obtained by s -> -s.
Discrimination discrimination(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters);

/// Local self-polarization variant. Throws InstabilityError (with the smallest
/// unstable N in [1, n_emitters]) once Omega_-^2 turns negative.
PolaritonFrequencies polariton_frequencies_local_selfpol(const Emitter& e, const CavityMode& mode,
                                                         std::uint64_t n_emitters);

/// Smallest N <= n_max for which the local variant is unstable, if any.
std::optional<std::uint64_t> local_selfpol_critical_n(const Emitter& e, const CavityMode& mode,
                                                      std::uint64_t n_max);

}  // namespace chiralpol
