#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chiralpol/errors.hpp"
#include "chiralpol/hopfield.hpp"

using namespace chiralpol;

namespace {

HopfieldParameters params(double wp, double wm, double g, double s) { return {wp, wm, g, s}; }

double symplectic_norm(const HopfieldCoefficients& c) {
  return std::norm(c.x) - std::norm(c.y) + std::norm(c.z) - std::norm(c.u);
}

HopfieldParameters random_stable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(0.5, 2.0), u(0.0, 1.0), s(-1.0, 1.0);
  for (;;) {
    HopfieldParameters p{w(rng), w(rng), 0.0, s(rng)};
    p.coupling = 0.3 * p.omega_matter * u(rng);
    try {
      polariton_frequencies(p);
      return p;
    } catch (const InstabilityError&) {
    }
  }
}

}  // namespace

TEST_CASE("uncoupled oscillators") {
  const PolaritonSolution s = solve_hopfield(params(1.3, 0.7, 0.0, 0.4));
  CHECK(s.omega_plus == 1.3);
  CHECK(s.omega_minus == 0.7);
  CHECK((s.coeffs_plus.vector() - Eigen::Vector4cd(1, 0, 0, 0)).norm() < 1e-14);
  CHECK((s.coeffs_minus.vector() - Eigen::Vector4cd(0, 0, 1, 0)).norm() < 1e-14);
}

TEST_CASE("resonant reference frequencies") {
  const auto plus = polariton_frequencies(params(1, 1, 0.1, 1.0));
  CHECK(std::abs(plus.omega_plus - 1.2) < 1e-12);
  CHECK(std::abs(plus.omega_minus - 0.8) < 1e-12);

  const auto zero = polariton_frequencies(params(1, 1, 0.1, 0.0));
  CHECK(zero.omega_plus == doctest::Approx(std::sqrt(1.2)).epsilon(1e-14));
  CHECK(zero.omega_minus == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));

  const auto minus = polariton_frequencies(params(1, 1, 0.1, -1.0));
  CHECK(std::abs(minus.omega_plus - std::sqrt(0.96)) < 1e-14);
  CHECK(std::abs(minus.omega_plus - minus.omega_minus) < 1e-12);
  CHECK(minus.degenerate);
}

TEST_CASE("instability detection") {
  // s = 1, 2G > w: the closed form alone yields a positive Omega_-^2 but H is unbounded.
  CHECK_THROWS_AS(polariton_frequencies(params(1, 1, 0.6, 1.0)), InstabilityError);
  CHECK_THROWS_AS(polariton_frequencies(params(1, 1, 0.55, 0.0)), InstabilityError);
  try {
    polariton_frequencies(params(1, 1, 0.55, 0.0));
  } catch (const InstabilityError& e) {
    CHECK(e.value() <= 0.0);
  }
  CHECK_THROWS_AS(polariton_frequencies(params(0.0, 1, 0.1, 0.0)), std::invalid_argument);
}

TEST_CASE("normalization and fractions on random stable parameters") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const HopfieldParameters p = random_stable(rng);
    const PolaritonSolution s = solve_hopfield(p);
    CHECK(s.omega_plus >= s.omega_minus);
    CHECK(s.omega_minus > 0.0);
    for (const auto* c : {&s.coeffs_plus, &s.coeffs_minus}) {
      CHECK(std::abs(symplectic_norm(*c) - 1.0) < 1e-10);
      CHECK(std::abs(c->photon_fraction() + c->matter_fraction() - 1.0) < 1e-10);
      CHECK(c->residual <= 1e-8);
      CHECK(c->x.imag() == 0.0);
      CHECK(c->x.real() >= 0.0);
    }
  }
}

TEST_CASE("degenerate branch pair is symplectically orthonormal") {
  const HopfieldParameters p = params(1, 1, 0.1, -1.0);
  const PolaritonSolution s = solve_hopfield(p);
  CHECK(s.degenerate);
  const Eigen::Vector4d eta = hopfield_metric();
  const Eigen::Vector4cd a = s.coeffs_plus.vector();
  const Eigen::Vector4cd b = s.coeffs_minus.vector();
  const Complex cross = (a.conjugate().array() * eta.array().cast<Complex>() * b.array()).sum();
  CHECK(std::abs(cross) < 1e-10);
  CHECK(std::abs(symplectic_norm(s.coeffs_plus) - 1.0) < 1e-10);
  CHECK(std::abs(symplectic_norm(s.coeffs_minus) - 1.0) < 1e-10);
  // Split into the pure photon-like and matter-like modes.
  // At s = -1 only the counter-rotating pairs (a, B^+) and (a^+, B) couple.
  CHECK(std::abs(s.coeffs_plus.y) < 1e-12);
  CHECK(std::abs(s.coeffs_plus.z) < 1e-12);
  CHECK(std::abs(s.coeffs_minus.x) < 1e-12);
  CHECK(std::abs(s.coeffs_minus.u) < 1e-12);
  CHECK(s.photon_fraction_plus > 1.0);
  CHECK(s.matter_fraction_minus > 1.0);
}

TEST_CASE("coefficient solve rejects a non-normal-mode frequency") {
  CHECK_THROWS_AS(hopfield_coefficients(params(1, 1, 0.1, 0.2), 1.05), std::invalid_argument);
}

TEST_CASE("fractions") {
  SUBCASE("weak resonant coupling mixes equally") {
    const PolaritonSolution s = solve_hopfield(params(1, 1, 0.01, 0.0));
    CHECK(std::abs(s.photon_fraction_plus - 0.5) < 1e-3);
    CHECK(std::abs(s.photon_fraction_minus - 0.5) < 1e-3);
  }
  SUBCASE("exact resonance stays equally mixed for every s > -1") {
    for (double s : {-0.999, -0.9, -0.5, 0.0, 0.5, 1.0}) {
      const PolaritonSolution sol = solve_hopfield(params(1, 1, 0.1, s));
      CHECK(sol.photon_fraction_plus == doctest::Approx(0.5).epsilon(1e-9));
      CHECK(sol.photon_fraction_minus == doctest::Approx(0.5).epsilon(1e-9));
    }
  }
  SUBCASE("off resonance the branches unmix as s -> -1") {
    double previous = 0.0;
    for (double s : {0.0, -0.5, -0.9, -0.99, -0.999}) {
      const PolaritonSolution sol = solve_hopfield(params(1.02, 1, 0.1, s));
      const double purity = std::abs(sol.photon_fraction_plus - 0.5);
      CHECK(purity > previous);
      previous = purity;
    }
    const PolaritonSolution end = solve_hopfield(params(1.02, 1, 0.1, -0.999));
    CHECK(std::abs(end.photon_fraction_plus - 1.0) < 0.02);
    CHECK(std::abs(end.photon_fraction_minus) < 0.02);
  }
}

TEST_CASE("handedness symmetry: only xi lambda matters") {
  const Emitter e = Emitter::collinear(0.09, Vec3(4, 0, 0), 0.37);
  const CavityMode left = CavityMode::vertical(Handedness::left, 0.095, 5e-3);
  CavityMode right = left;
  right.handedness = Handedness::right;
  const PolaritonSolution a = solve_hopfield(derive_couplings(e, left, 50));
  const PolaritonSolution b = solve_hopfield(derive_couplings(e.mirrored(), right, 50));
  CHECK(a.omega_plus == doctest::Approx(b.omega_plus).epsilon(1e-14));
  CHECK(a.omega_minus == doctest::Approx(b.omega_minus).epsilon(1e-14));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(a.coeffs_plus.vector()(i)) == doctest::Approx(std::abs(b.coeffs_plus.vector()(i))));
    CHECK(std::abs(a.coeffs_minus.vector()(i)) == doctest::Approx(std::abs(b.coeffs_minus.vector()(i))));
  }
}

TEST_CASE("resonant splitting grows strictly with s") {
  double previous = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double s = -1.0 + 0.01 * i;
    const auto f = polariton_frequencies(params(1, 1, 0.05, s));
    CHECK(f.omega_plus - f.omega_minus > previous);
    previous = f.omega_plus - f.omega_minus;
  }
}

TEST_CASE("small-coupling slope matches second-order perturbation theory") {
  const double wp = 1.5, wm = 1.0;
  for (double s : {-0.7, 0.0, 0.3, 1.0}) {
    const double g2 = 1e-8;
    const auto f = polariton_frequencies(params(wp, wm, std::sqrt(g2), s));
    const double slope_plus = (4 * s * wp + 2 * wm * (1 + s * s)) / (wp * wp - wm * wm);
    const double slope_minus = (4 * s * wm + 2 * wp * (1 + s * s)) / (wm * wm - wp * wp);
    const double alt = (1 + s) * (1 + s) / (wp - wm) - (1 - s) * (1 - s) / (wp + wm);
    CHECK(slope_plus == doctest::Approx(alt).epsilon(1e-12));
    CHECK((f.omega_plus - wp) / g2 == doctest::Approx(slope_plus).epsilon(1e-5));
    CHECK((f.omega_minus - wm) / g2 == doctest::Approx(slope_minus).epsilon(1e-5));
  }
}

TEST_CASE("discrimination") {
  const CavityMode left = CavityMode::vertical(Handedness::left, 0.09, 1e-3);
  CavityMode right = left;
  right.handedness = Handedness::right;

  const Discrimination none = discrimination(Emitter::collinear(0.09, Vec3(4, 0, 0), 0.0), left, 100);
  CHECK(none.delta_omega_plus == 0.0);
  CHECK(none.delta_omega_minus == 0.0);
  CHECK(none.delta_e_vac == 0.0);

  const Emitter e = Emitter::collinear(0.09, Vec3(4, 0, 0), 3.712e-5);
  const Discrimination l = discrimination(e, left, 100);
  const Discrimination r = discrimination(e, right, 100);
  CHECK(l.delta_e_vac != 0.0);
  CHECK(r.delta_omega_plus == doctest::Approx(-l.delta_omega_plus).epsilon(1e-9));
  CHECK(r.delta_omega_minus == doctest::Approx(-l.delta_omega_minus).epsilon(1e-9));
  CHECK(r.delta_e_vac == doctest::Approx(-l.delta_e_vac).epsilon(1e-9));

  const double ratio = discrimination(e, left, 4).delta_e_vac / discrimination(e, left, 1).delta_e_vac;
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("local self-polarization variant") {
  const Emitter e = Emitter::collinear(0.09, Vec3(4, 0, 0), 0.0);
  const CavityMode m = CavityMode::vertical(Handedness::left, 0.09, 1e-3);

  const auto local1 = polariton_frequencies_local_selfpol(e, m, 1);
  const auto full1 = polariton_frequencies(derive_couplings(e, m, 1));
  CHECK(local1.omega_plus == full1.omega_plus);
  CHECK(local1.omega_minus == full1.omega_minus);

  const auto local10 = polariton_frequencies_local_selfpol(e, m, 10);
  const auto full10 = polariton_frequencies(derive_couplings(e, m, 10));
  CHECK(local10.omega_plus == doctest::Approx(full10.omega_plus).epsilon(0.01));
  CHECK(local10.omega_minus == doctest::Approx(full10.omega_minus).epsilon(0.01));

  // Threshold 1 + w_m / (2 eta^2 |mu|^2) = 2813.5 for the local dressing.
  const auto critical = local_selfpol_critical_n(e, m, std::uint64_t{1} << 20);
  REQUIRE(critical.has_value());
  CHECK(*critical == 2814);
  CHECK_FALSE(local_selfpol_critical_n(e, m, 2813).has_value());
  try {
    polariton_frequencies_local_selfpol(e, m, 5000);
    FAIL("expected an instability");
  } catch (const InstabilityError& err) {
    REQUIRE(err.critical_n().has_value());
    CHECK(*err.critical_n() == 2814);
  }
  CHECK_NOTHROW(polariton_frequencies(derive_couplings(e, m, std::uint64_t{1} << 20)));
}
