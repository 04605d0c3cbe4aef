#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chiralpol/errors.hpp"
#include "chiralpol/model.hpp"

using namespace chiralpol;

namespace {

// mu.eps = 1 at z = 0 (eps = x-hat).
Emitter unit_emitter(double xi = 0.0) { return Emitter::collinear(0.1, Vec3(1, 0, 0), xi); }

CavityMode reference_mode(Handedness h = Handedness::left) { return CavityMode::vertical(h, 0.1, 1e-3); }

}  // namespace

TEST_CASE("free fields") {
  Emitter e;
  e.mu = Vec3::Zero();
  const CavityMode m = reference_mode();
  const DerivedCouplings c = derive_couplings(e, m, 100);
  CHECK(c.omega_k_bar == m.omega_k);
  CHECK(c.omega_m_tilde == e.omega_m);
  CHECK(c.g_tilde == 0.0);
  CHECK(c.xi_tilde == 0.0);
  CHECK(c.decoupled);
}

TEST_CASE("reference couplings against high-precision values") {
  const DerivedCouplings c = derive_couplings(unit_emitter(), reference_mode(), 100);
  // sqrt(0.01 + 2e-5) and 1e-3 sqrt(0.1 * 0.1 / (2 w~_m)), 30-digit evaluation.
  CHECK(c.omega_m_tilde == doctest::Approx(0.100099950049937587).epsilon(1e-15));
  CHECK(c.g_tilde == doctest::Approx(2.2349513389606127e-4).epsilon(1e-14));
  CHECK(c.omega_k_bar == 0.1);
  CHECK_FALSE(c.decoupled);
}

TEST_CASE("collinear chirality factor") {
  const DerivedCouplings c = derive_couplings(unit_emitter(0.5), reference_mode(), 100);
  CHECK(c.xi_tilde == doctest::Approx(0.500499750249687937).epsilon(1e-15));
  CHECK(c.xi_tilde == doctest::Approx(0.5 * c.omega_m_tilde / 0.1).epsilon(1e-15));
  CHECK(c.xi_bar == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.chirality() == doctest::Approx(c.xi_tilde));
  const DerivedCouplings r = derive_couplings(unit_emitter(0.5), reference_mode(Handedness::right), 100);
  CHECK(r.chirality() == doctest::Approx(-c.xi_tilde));
}

TEST_CASE("self-polarization only blue-shifts") {
  for (std::uint64_t n : {1u, 10u, 1000u, 1000000u}) {
    for (double phase : {0.0, 0.3, 1.2}) {
      CavityMode m = reference_mode();
      m.z = phase / m.k_z;
      const Emitter e = Emitter::collinear(0.1, Vec3(2, -1, 0.5), 0.1);
      CHECK(dressed_matter_frequency(e, m, n) >= e.omega_m);
    }
  }
}

TEST_CASE("eta scaling") {
  const Emitter e = unit_emitter(0.3);
  CavityMode a = reference_mode();
  CavityMode b = reference_mode();
  a.eta = 1e-4;
  b.eta = 2e-4;
  const DerivedCouplings ca = derive_couplings(e, a, 1);
  const DerivedCouplings cb = derive_couplings(e, b, 1);
  CHECK(cb.g_bar == doctest::Approx(2 * ca.g_bar).epsilon(1e-14));
  const double ratio = (cb.g_tilde / std::sqrt(1 / cb.omega_m_tilde)) / (ca.g_tilde / std::sqrt(1 / ca.omega_m_tilde));
  CHECK(ratio == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ca.xi_tilde == doctest::Approx(0.3 * ca.omega_m_tilde / e.omega_m).epsilon(1e-15));
  CHECK(cb.xi_tilde == doctest::Approx(0.3 * cb.omega_m_tilde / e.omega_m).epsilon(1e-15));
}

TEST_CASE("quadrupole contraction") {
  CavityMode m = reference_mode();
  m.z = 0.0;  // gradient z-row = k_z (0, -lambda, 0)
  Emitter e = unit_emitter();
  e.quadrupole(2, 1) = e.quadrupole(1, 2) = 50.0;
  CHECK(effective_projection(e, m) == doctest::Approx(1.0 - 50.0 * m.k_z));
}

TEST_CASE("decoupled projection gives a flag, not an error") {
  Emitter e = Emitter::collinear(0.1, Vec3(0, 1, 0), 0.5);  // mu.eps = 0 at z = 0
  const DerivedCouplings c = derive_couplings(e, reference_mode(), 10);
  CHECK(c.decoupled);
  CHECK(c.g_tilde == 0.0);
  CHECK(c.xi_tilde == 0.0);
}

TEST_CASE("self-magnetization") {
  const CavityMode m = CavityMode::vertical(Handedness::left, 0.09, 1e-3);
  CHECK(dressed_photon_frequency(Mat3::Zero(), m, 100) == m.omega_k);

  const double mu2 = 16.0;
  const double small = dressed_photon_frequency(mu2 * Mat3::Identity(), m, 100) / m.omega_k - 1.0;
  CHECK(small > 0.0);
  CHECK(small < 1e-3);

  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double visible = dressed_photon_frequency(c2 * mu2 * Mat3::Identity(), m, 100) / m.omega_k - 1.0;
  CHECK(visible > 1e-3);
  CHECK(visible < 1.0);

  CHECK_THROWS_AS(dressed_photon_frequency(-1e12 * Mat3::Identity(), m, 100), InstabilityError);
}

TEST_CASE("local self-polarization variant") {
  const Emitter e = unit_emitter(0.2);
  const CavityMode m = reference_mode();
  const DerivedCouplings full = derive_couplings(e, m, 1);
  const DerivedCouplings local = derive_couplings_local_selfpol(e, m, 1);
  CHECK(full.omega_m_tilde == local.omega_m_tilde);
  CHECK(full.g_tilde == local.g_tilde);
  const DerivedCouplings local_n = derive_couplings_local_selfpol(e, m, 1000);
  CHECK(local_n.omega_m_tilde == local.omega_m_tilde);
}

TEST_CASE("preconditions") {
  CavityMode m = reference_mode();
  m.theta_inc = 0.1;
  CHECK_THROWS_AS(derive_couplings(unit_emitter(), m, 1), std::invalid_argument);
  CHECK_THROWS_AS(derive_couplings(unit_emitter(), reference_mode(), 0), std::invalid_argument);
}
