#pragma once

#include <complex>

#include <Eigen/Dense>

namespace chiralpol {

// Atomic units throughout (hbar = 1).
inline constexpr double kSpeedOfLight = 137.035999;

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using Complex = std::complex<double>;

// Helicity eigenvalue of the cavity mode: +1 left-handed, -1 right-handed.
enum class Handedness : int { left = 1, right = -1 };

inline constexpr double sign(Handedness h) noexcept { return static_cast<double>(static_cast<int>(h)); }

inline constexpr Handedness flipped(Handedness h) noexcept {
  return h == Handedness::left ? Handedness::right : Handedness::left;
}

}  // namespace chiralpol
