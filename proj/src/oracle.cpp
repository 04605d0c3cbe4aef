#include "chiralpol/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chiralpol/errors.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace chiralpol {

void FockConfig::validate() const {
  if (cutoff < 4) throw std::invalid_argument("FockConfig: cutoff must be >= 4");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("FockConfig: tol must be positive");
  if (convergence_factor < 1) throw std::invalid_argument("FockConfig: convergence_factor must be >= 1");
}

BandedHermitian::BandedHermitian(std::size_t dim, std::size_t bandwidth)
    : dim_(dim), bandwidth_(bandwidth), band_((bandwidth + 1) * dim, Complex(0.0, 0.0)) {}

Complex BandedHermitian::operator()(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw std::out_of_range("BandedHermitian index");
  if (row >= col) {
    if (row - col > bandwidth_) return {0.0, 0.0};
    return band_[(row - col) + col * (bandwidth_ + 1)];
  }
  if (col - row > bandwidth_) return {0.0, 0.0};
  return std::conj(band_[(col - row) + row * (bandwidth_ + 1)]);
}

void BandedHermitian::set_lower(std::size_t row, std::size_t col, Complex value) {
  if (row >= dim_ || col > row) throw std::out_of_range("BandedHermitian::set_lower needs row >= col");
  if (row - col > bandwidth_) throw std::out_of_range("BandedHermitian::set_lower outside the band");
  if (row == col && value.imag() != 0.0) throw std::invalid_argument("Hermitian diagonal must be real");
  band_[(row - col) + col * (bandwidth_ + 1)] = value;
}

Eigen::MatrixXcd BandedHermitian::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t col = 0; col < dim_; ++col) {
    const std::size_t last = std::min(dim_ - 1, col + bandwidth_);
    for (std::size_t row = col; row <= last; ++row) {
      const Complex v = band_[(row - col) + col * (bandwidth_ + 1)];
      h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
      h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row)) = std::conj(v);
    }
  }
  return h;
}

std::size_t fock_index(std::size_t n_photon, std::size_t n_matter, std::size_t cutoff) {
  return n_photon * (cutoff + 1) + n_matter;
}

BandedHermitian build_fock_hamiltonian(const HopfieldParameters& p, const FockConfig& config) {
  config.validate();
  const std::size_t k = config.cutoff;
  BandedHermitian h((k + 1) * (k + 1), k + 2);
  // H_int = -iG[(1+s) B^+a - (1-s) B^+a^+ + (1-s) Ba - (1+s) Ba^+]; only the
  // photon-raising terms land in the lower triangle.
  const Complex co(0.0, p.coupling * (1.0 + p.chirality));
  const Complex cr(0.0, p.coupling * (1.0 - p.chirality));
  for (std::size_t ph = 0; ph <= k; ++ph) {
    for (std::size_t m = 0; m <= k; ++m) {
      const std::size_t col = fock_index(ph, m, k);
      const double diag = p.omega_photon * (static_cast<double>(ph) + 0.5) +
                          p.omega_matter * (static_cast<double>(m) + 0.5);
      h.set_lower(col, col, Complex(diag, 0.0));
      if (ph == k) continue;
      const double sp = std::sqrt(static_cast<double>(ph + 1));
      if (m < k) h.set_lower(fock_index(ph + 1, m + 1, k), col, cr * sp * std::sqrt(static_cast<double>(m + 1)));
      if (m > 0) h.set_lower(fock_index(ph + 1, m - 1, k), col, co * sp * std::sqrt(static_cast<double>(m)));
    }
  }
  return h;
}

BandedHermitian build_fock_hamiltonian(const DerivedCouplings& c, const FockConfig& config) {
  return build_fock_hamiltonian(hopfield_parameters(c), config);
}

std::vector<double> oracle_spectrum(const BandedHermitian& h) {
  const auto n = static_cast<lapack_int>(h.dim());
  const auto kd = static_cast<lapack_int>(h.bandwidth());
  std::vector<Complex> ab = h.band();  // zhbev overwrites its input
  std::vector<double> w(h.dim());
  const lapack_int info =
      LAPACKE_zhbev(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(), kd + 1, w.data(), nullptr, 1);
  if (info != 0) throw NumericalFailure("zhbev failed with info = " + std::to_string(info));
  return w;  // ascending
}

std::vector<double> oracle_spectrum(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("oracle_spectrum: matrix is not square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("oracle_spectrum: matrix is not Hermitian");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalFailure("dense Hermitian eigensolver did not converge");
  const Eigen::VectorXd v = eig.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

namespace {

// Lower band of a real symmetric matrix in LAPACK 'L' layout.
struct RealBand {
  std::size_t dim = 0;
  std::size_t bandwidth = 0;
  std::vector<double> band;
};

std::vector<double> real_band_eigenvalues(RealBand& b) {
  std::vector<double> w(b.dim);
  if (b.dim == 0) return w;
  const auto kd = static_cast<lapack_int>(b.bandwidth);
  const lapack_int info = LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(b.dim), kd,
                                        b.band.data(), kd + 1, w.data(), nullptr, 1);
  if (info != 0) throw NumericalFailure("dsbev failed with info = " + std::to_string(info));
  return w;
}

}  // namespace

std::vector<double> fock_spectrum(const HopfieldParameters& p, std::size_t cutoff) {
  FockConfig probe;
  probe.cutoff = cutoff;
  probe.validate();
  const std::size_t k = cutoff;
  const std::size_t full = (k + 1) * (k + 1);

  // Position of every basis state inside its parity block (original order kept).
  std::vector<std::size_t> position(full);
  std::array<std::size_t, 2> size{0, 0};
  for (std::size_t ph = 0; ph <= k; ++ph)
    for (std::size_t m = 0; m <= k; ++m) position[fock_index(ph, m, k)] = size[(ph + m) % 2]++;

  std::array<RealBand, 2> blocks;
  for (int parity = 0; parity < 2; ++parity) {
    blocks[parity].dim = size[parity];
    blocks[parity].bandwidth = k / 2 + 2;
    blocks[parity].band.assign((blocks[parity].bandwidth + 1) * size[parity], 0.0);
  }
  const auto put = [&](std::size_t parity, std::size_t row, std::size_t col, double v) {
    RealBand& b = blocks[parity];
    if (row - col > b.bandwidth) throw std::logic_error("fock_spectrum: element outside the block band");
    b.band[(row - col) + col * (b.bandwidth + 1)] = v;
  };

  const double co = p.coupling * (1.0 + p.chirality);
  const double cr = p.coupling * (1.0 - p.chirality);
  for (std::size_t ph = 0; ph <= k; ++ph) {
    for (std::size_t m = 0; m <= k; ++m) {
      const std::size_t parity = (ph + m) % 2;
      const std::size_t col = position[fock_index(ph, m, k)];
      put(parity, col, col,
          p.omega_photon * (static_cast<double>(ph) + 0.5) + p.omega_matter * (static_cast<double>(m) + 0.5));
      if (ph == k) continue;
      const double sp = std::sqrt(static_cast<double>(ph + 1));
      if (m < k)
        put(parity, position[fock_index(ph + 1, m + 1, k)], col, cr * sp * std::sqrt(static_cast<double>(m + 1)));
      if (m > 0)
        put(parity, position[fock_index(ph + 1, m - 1, k)], col, co * sp * std::sqrt(static_cast<double>(m)));
    }
  }

  std::vector<double> levels = real_band_eigenvalues(blocks[0]);
  const std::vector<double> odd = real_band_eigenvalues(blocks[1]);
  levels.insert(levels.end(), odd.begin(), odd.end());
  std::sort(levels.begin(), levels.end());
  return levels;
}

namespace {

std::vector<double> ladder_gaps(double omega_minus, double omega_plus, std::size_t count) {
  std::vector<double> gaps;
  for (std::size_t n = 0; n < count; ++n)
    for (std::size_t m = 0; m < count; ++m)
      gaps.push_back(static_cast<double>(n) * omega_minus + static_cast<double>(m) * omega_plus);
  std::sort(gaps.begin(), gaps.end());
  gaps.resize(count);
  return gaps;
}

}  // namespace

LadderFit identify_ladder(const std::vector<double>& levels, double rel_tol, std::size_t fit_levels,
                         double match_window) {
  LadderFit fit;
  if (levels.size() < 3) return fit;
  fit.ground_energy = levels[0];
  const double w1 = levels[1] - levels[0];
  if (!(w1 > 0.0)) return fit;
  fit.omega_minus = w1;

  const double g2 = levels[2] - levels[0];
  if (g2 - w1 <= rel_tol * w1) {
    fit.omega_plus = w1;
    fit.degenerate = true;
    fit.found = true;
  } else {
    // Walk up the spectrum; levels explained by the pure Omega_- ladder (each
    // multiple once) are consumed, the first unexplained gap is Omega_+.
    // Truncation only raises levels, and highly occupied ones the most, so the
    // window is one-sided: up to match_window * Omega_- above n Omega_-.
    std::vector<bool> consumed;
    for (std::size_t i = 2; i < levels.size(); ++i) {
      const double g = levels[i] - levels[0];
      const auto n = static_cast<std::size_t>(std::llround(g / w1));
      const double excess = g - static_cast<double>(n) * w1;
      if (n >= 2 && excess >= -rel_tol * g && excess <= match_window * w1) {
        if (consumed.size() <= n) consumed.resize(n + 1, false);
        if (!consumed[n]) {
          consumed[n] = true;
          continue;
        }
      }
      fit.omega_plus = g;
      fit.found = true;
      break;
    }
    if (!fit.found) return fit;
    const double ratio = fit.omega_plus / fit.omega_minus;
    fit.ambiguous = std::abs(ratio - std::round(ratio)) <= match_window;
  }

  const std::size_t count = std::min(fit_levels, levels.size());
  const std::vector<double> expected = ladder_gaps(fit.omega_minus, fit.omega_plus, count);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, std::abs(levels[i] - levels[0] - expected[i]));
  fit.residual = worst / fit.omega_plus;
  return fit;
}

namespace {

LadderFit run_ladder(const HopfieldParameters& p, const FockConfig& config, std::size_t cutoff) {
  return identify_ladder(fock_spectrum(p, cutoff), config.tol);
}

double relative_deviation(double value, double reference) { return std::abs(value - reference) / reference; }

}  // namespace

OracleReport oracle_check(const HopfieldParameters& p, const FockConfig& config) {
  config.validate();
  const PolaritonFrequencies analytic = polariton_frequencies(p);

  OracleReport r;
  r.analytic_omega_plus = analytic.omega_plus;
  r.analytic_omega_minus = analytic.omega_minus;
  r.analytic_e_vac = vacuum_energy(analytic);
  r.cutoff = config.cutoff;

  const LadderFit fit = run_ladder(p, config, config.cutoff);
  r.omega_plus = fit.omega_plus;
  r.omega_minus = fit.omega_minus;
  r.ground_energy = fit.ground_energy;
  r.deviation_plus = relative_deviation(fit.omega_plus, analytic.omega_plus);
  r.deviation_minus = relative_deviation(fit.omega_minus, analytic.omega_minus);
  r.e0_offset = fit.ground_energy - r.analytic_e_vac;
  r.ladder_residual = fit.residual;
  r.degenerate = fit.degenerate || analytic.degenerate;
  r.ambiguous = fit.ambiguous;
  r.within_tolerance = fit.found && r.max_deviation() <= config.tol;

  if (config.convergence_factor > 1) {
    r.check_cutoff = config.cutoff * config.convergence_factor;
    const LadderFit check = run_ladder(p, config, r.check_cutoff);
    r.check_omega_plus = check.omega_plus;
    r.check_omega_minus = check.omega_minus;
    r.check_deviation = std::max(relative_deviation(check.omega_plus, analytic.omega_plus),
                                 relative_deviation(check.omega_minus, analytic.omega_minus));
    r.converged = check.found && r.check_deviation <= std::max(r.max_deviation(), config.tol);
  } else {
    r.converged = r.within_tolerance;
  }
  return r;
}

OracleReport oracle_check(const DerivedCouplings& c, const FockConfig& config) {
  return oracle_check(hopfield_parameters(c), config);
}

}  // namespace chiralpol
