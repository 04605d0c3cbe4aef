#include "chiralpol/hopfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chiralpol/errors.hpp"

namespace chiralpol {

namespace {

constexpr double kDegenerateRel = 1e-10;
constexpr double kNullSpaceRel = 1e-8;
constexpr double kResidualMax = 1e-8;

void check_parameters(const HopfieldParameters& p) {
  if (!(p.omega_photon > 0.0) || !(p.omega_matter > 0.0))
    throw std::invalid_argument("Hopfield frequencies must be positive");
  if (!std::isfinite(p.coupling) || !std::isfinite(p.chirality))
    throw std::invalid_argument("Hopfield coupling and chirality must be finite");
}

// Multiplies v by a unit phase so that the first non-negligible component of
// (x, y, z, u) is real and non-negative.
void fix_phase(Eigen::Vector4cd& v) {
  const double scale = v.norm();
  for (int i = 0; i < 4; ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12 * scale) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(mag, 0.0);
      return;
    }
  }
}

double symplectic_norm(const Eigen::Vector4cd& v) {
  return std::norm(v(0)) - std::norm(v(1)) + std::norm(v(2)) - std::norm(v(3));
}

HopfieldCoefficients pack(const HopfieldParameters& p, double omega, Eigen::Vector4cd v, bool degenerate) {
  fix_phase(v);
  HopfieldCoefficients out;
  out.x = v(0);
  out.y = v(1);
  out.z = v(2);
  out.u = v(3);
  out.degenerate = degenerate;
  out.residual = (hopfield_matrix(p, -omega) * v).norm();
  if (!(out.residual <= kResidualMax))
    throw NumericalFailure("Hopfield coefficient residual " + std::to_string(out.residual) + " exceeds 1e-8");
  return out;
}

// Splits a two-dimensional null space into a symplectically orthonormal pair,
// rotated so that the photon fraction is extremal (photon-like member first).
std::array<Eigen::Vector4cd, 2> split_null_space(const Eigen::Matrix<Complex, 4, 2>& basis) {
  const Eigen::DiagonalMatrix<double, 4> metric(hopfield_metric());
  const Eigen::Matrix2cd gram = basis.adjoint() * metric * basis;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> gram_eig(gram);
  const Eigen::Vector2d k = gram_eig.eigenvalues();
  if (!(k(0) > 0.0)) throw NumericalFailure("degenerate polariton null space is not symplectically positive");
  Eigen::Matrix<Complex, 4, 2> ortho = basis * gram_eig.eigenvectors();
  ortho.col(0) /= std::sqrt(k(0));
  ortho.col(1) /= std::sqrt(k(1));

  const Eigen::DiagonalMatrix<double, 4> photon(Eigen::Vector4d(1.0, -1.0, 0.0, 0.0));
  const Eigen::Matrix2cd fraction = ortho.adjoint() * photon * ortho;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> frac_eig(fraction);
  const Eigen::Matrix<Complex, 4, 2> rotated = ortho * frac_eig.eigenvectors();
  // Eigenvalues ascend; the photon-like vector is the second column.
  return {Eigen::Vector4cd(rotated.col(1)), Eigen::Vector4cd(rotated.col(0))};
}

struct NullSpace {
  Eigen::Matrix4cd v;
  Eigen::Vector4d sigma;
  bool two_dimensional = false;
};

NullSpace null_space(const HopfieldParameters& p, double omega) {
  const Eigen::Matrix4cd m = hopfield_matrix(p, -omega);
  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
  NullSpace ns;
  ns.v = svd.matrixV();
  ns.sigma = svd.singularValues();
  const double scale = ns.sigma(0);
  if (ns.sigma(3) > kNullSpaceRel * scale)
    throw std::invalid_argument("hopfield_coefficients: omega = " + std::to_string(omega) +
                                " is not a normal-mode frequency");
  ns.two_dimensional = ns.sigma(2) <= kNullSpaceRel * scale;
  return ns;
}

}  // namespace

HopfieldParameters hopfield_parameters(const DerivedCouplings& c) {
  return {c.omega_k_bar, c.omega_m_tilde, c.collective_coupling(), c.chirality()};
}

PolaritonFrequencies polariton_frequencies(const HopfieldParameters& p) {
  check_parameters(p);
  const double wp = p.omega_photon;
  const double wm = p.omega_matter;
  const double g2 = p.coupling * p.coupling;
  const double s = p.chirality;

  const double a = wp * wp + wm * wm + 8.0 * s * g2;
  const double b = (wp * wp - wm * wm) * (wp * wp - wm * wm) + 16.0 * g2 * (wp + wm * s) * (wp * s + wm);
  if (b < 0.0) throw InstabilityError("inner radicand of the polariton frequencies is negative", b);

  const double plus_sq = 0.5 * (a + std::sqrt(b));
  // Omega_+^2 Omega_-^2 = (wp wm - 4 G^2)(wp wm - 4 s^2 G^2); dividing avoids the
  // cancellation in (a - sqrt(b)) / 2.
  const double f1 = wp * wm - 4.0 * g2;
  const double f2 = wp * wm - 4.0 * s * s * g2;
  const double minus_sq = plus_sq > 0.0 ? f1 * f2 / plus_sq : 0.5 * (a - std::sqrt(b));
  if (minus_sq < 0.0) throw InstabilityError("lower polariton frequency squared is negative", minus_sq);
  if (f1 <= 0.0 || f2 <= 0.0)
    throw InstabilityError("light-matter Hamiltonian is not bounded below", std::min(f1, f2));

  PolaritonFrequencies f;
  f.omega_plus = std::sqrt(plus_sq);
  f.omega_minus = std::sqrt(minus_sq);
  if (f.omega_minus > f.omega_plus) std::swap(f.omega_plus, f.omega_minus);
  f.degenerate = f.omega_plus - f.omega_minus <= kDegenerateRel * f.omega_plus;
  return f;
}

PolaritonFrequencies polariton_frequencies(const DerivedCouplings& c) {
  return polariton_frequencies(hopfield_parameters(c));
}

Eigen::Matrix4cd hopfield_matrix(const HopfieldParameters& p, double omega) {
  const Complex ig(0.0, p.coupling);
  const Complex co = (1.0 + p.chirality) * ig;  // co-rotating weight
  const Complex cr = (1.0 - p.chirality) * ig;  // counter-rotating weight
  const double wp = p.omega_photon;
  const double wm = p.omega_matter;
  Eigen::Matrix4cd m;
  m << -wp - omega, 0.0, co, -cr,
       0.0, wp - omega, -cr, co,
       -co, -cr, -wm - omega, 0.0,
       -cr, -co, 0.0, wm - omega;
  return m;
}

Eigen::Vector4d hopfield_metric() { return {1.0, -1.0, 1.0, -1.0}; }

HopfieldCoefficients hopfield_coefficients(const HopfieldParameters& p, double omega) {
  check_parameters(p);
  const NullSpace ns = null_space(p, omega);
  if (ns.two_dimensional) {
    const auto pair = split_null_space(ns.v.rightCols<2>());
    return pack(p, omega, pair[0], true);
  }
  Eigen::Vector4cd v = ns.v.col(3);
  const double norm = symplectic_norm(v);
  if (!(norm > 0.0))
    throw NumericalFailure("polariton mode at omega = " + std::to_string(omega) +
                           " has non-positive symplectic norm");
  v /= std::sqrt(norm);
  return pack(p, omega, v, false);
}

std::array<HopfieldCoefficients, 2> hopfield_coefficient_pair(const HopfieldParameters& p,
                                                               const PolaritonFrequencies& f) {
  check_parameters(p);
  // Nearly coincident branches can share a numerically two-dimensional null
  // space even below the degeneracy threshold; split it once for both.
  const NullSpace ns = null_space(p, f.omega_plus);
  if (ns.two_dimensional) {
    const auto pair = split_null_space(ns.v.rightCols<2>());
    return {pack(p, f.omega_plus, pair[0], true), pack(p, f.omega_minus, pair[1], true)};
  }
  return {hopfield_coefficients(p, f.omega_plus), hopfield_coefficients(p, f.omega_minus)};
}

PolaritonSolution solve_hopfield(const HopfieldParameters& p) {
  const PolaritonFrequencies f = polariton_frequencies(p);
  const auto coeffs = hopfield_coefficient_pair(p, f);
  PolaritonSolution s;
  s.omega_plus = f.omega_plus;
  s.omega_minus = f.omega_minus;
  s.coeffs_plus = coeffs[0];
  s.coeffs_minus = coeffs[1];
  s.photon_fraction_plus = coeffs[0].photon_fraction();
  s.photon_fraction_minus = coeffs[1].photon_fraction();
  s.matter_fraction_plus = coeffs[0].matter_fraction();
  s.matter_fraction_minus = coeffs[1].matter_fraction();
  s.e_vac = vacuum_energy(f);
  s.degenerate = f.degenerate || coeffs[0].degenerate;
  return s;
}

PolaritonSolution solve_hopfield(const DerivedCouplings& c) { return solve_hopfield(hopfield_parameters(c)); }

double vacuum_energy(const PolaritonSolution& s) { return 0.5 * (s.omega_plus + s.omega_minus); }

double vacuum_energy(const PolaritonFrequencies& f) { return 0.5 * (f.omega_plus + f.omega_minus); }

Discrimination discrimination(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters) {
  const PolaritonFrequencies f = polariton_frequencies(derive_couplings(e, mode, n_emitters));
  const PolaritonFrequencies m = polariton_frequencies(derive_couplings(e.mirrored(), mode, n_emitters));
  Discrimination d;
  d.delta_omega_plus = f.omega_plus - m.omega_plus;
  d.delta_omega_minus = f.omega_minus - m.omega_minus;
  d.delta_e_vac = vacuum_energy(f) - vacuum_energy(m);
  return d;
}

namespace {

bool local_selfpol_stable(const Emitter& e, const CavityMode& mode, std::uint64_t n) {
  try {
    polariton_frequencies(derive_couplings_local_selfpol(e, mode, n));
    return true;
  } catch (const InstabilityError&) {
    return false;
  }
}

}  // namespace

std::optional<std::uint64_t> local_selfpol_critical_n(const Emitter& e, const CavityMode& mode,
                                                      std::uint64_t n_max) {
  if (n_max < 1 || local_selfpol_stable(e, mode, n_max)) return std::nullopt;
  if (!local_selfpol_stable(e, mode, 1)) return 1;
  // The destabilizing collective coupling grows monotonically in N at fixed
  // dressing, so bisection on [stable, unstable] finds the threshold.
  std::uint64_t lo = 1;
  std::uint64_t hi = n_max;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (local_selfpol_stable(e, mode, mid) ? lo : hi) = mid;
  }
  return hi;
}

PolaritonFrequencies polariton_frequencies_local_selfpol(const Emitter& e, const CavityMode& mode,
                                                         std::uint64_t n_emitters) {
  const DerivedCouplings c = derive_couplings_local_selfpol(e, mode, n_emitters);
  try {
    return polariton_frequencies(c);
  } catch (const InstabilityError& err) {
    throw InstabilityError(std::string("local self-polarization model: ") + err.what(), err.value(),
                           local_selfpol_critical_n(e, mode, n_emitters));
  }
}

}  // namespace chiralpol
