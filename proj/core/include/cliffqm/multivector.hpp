// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file multivector.hpp
 * @brief Dense real Clifford-algebra arithmetic for Cl(0,1) and Cl(3,0).
 *
 * Blade order is fixed so that dumps are bit-stable:
 *   Cl(0,1): 1, e
 *   Cl(3,0): 1, e1, e2, e3, e23, e13, e12, e123
 * Every bivector blade is the product of its generators in increasing index
 * order (e13 = e1 e3), so the sign table is generated from bitmasks.
 */

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "cliffqm/vec3.hpp"

namespace cliffqm {

/// Metric signature: p generators square to +1, q generators square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  [[nodiscard]] constexpr int generators() const noexcept { return p + q; }
  [[nodiscard]] constexpr std::size_t dimension() const noexcept {
    return std::size_t{1} << (p + q);
  }
  friend constexpr bool operator==(Signature, Signature) = default;
};

/// Cl(0,1): basis {1, e}, e^2 = -1. Isomorphic to the complex numbers.
inline constexpr Signature kSchrodinger{0, 1};
/// Cl(3,0): the Pauli algebra.
inline constexpr Signature kPauli{3, 0};

/// Validates that (p,q) is one of the two supported algebras.
[[nodiscard]] Signature make_signature(int p, int q);

[[nodiscard]] std::string to_string(Signature sig);

inline constexpr double kDefaultTolerance = 1e-10;

enum class Bracket { commutator, anticommutator };

class Multivector {
 public:
  static constexpr std::size_t kMaxDimension = 8;

  explicit Multivector(Signature sig = kPauli);
  /// Coefficients in canonical blade order; the list must have 2^(p+q) entries.
  Multivector(Signature sig, std::initializer_list<double> coeffs);

  [[nodiscard]] static Multivector scalar(Signature sig, double value);
  [[nodiscard]] static Multivector blade(Signature sig, std::size_t index, double value = 1.0);
  /// Grade-1 element a.x e1 + a.y e2 + a.z e3 of Cl(3,0).
  [[nodiscard]] static Multivector vector(const Vec3& a);

  [[nodiscard]] Signature signature() const noexcept { return sig_; }
  [[nodiscard]] std::size_t size() const noexcept { return sig_.dimension(); }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return {c_.data(), size()}; }

  [[nodiscard]] double operator[](std::size_t i) const noexcept { return c_[i]; }
  [[nodiscard]] double& operator[](std::size_t i) noexcept { return c_[i]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s) noexcept;

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) noexcept { return a *= s; }
  friend Multivector operator*(double s, Multivector a) noexcept { return a *= s; }
  friend Multivector operator/(Multivector a, double s) noexcept { return a *= (1.0 / s); }
  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector& a, const Multivector& b) noexcept;

 private:
  Signature sig_;
  std::array<double, kMaxDimension> c_{};
};

/// Canonical blade name, e.g. "e13".
[[nodiscard]] std::string blade_name(Signature sig, std::size_t index);
[[nodiscard]] int blade_grade(Signature sig, std::size_t index);

[[nodiscard]] Multivector geometric_product(const Multivector& a, const Multivector& b);

/// A~ = S - V - B + P. Anti-involution: conj(ab) = conj(b) conj(a).
[[nodiscard]] Multivector clifford_conjugate(const Multivector& a);

/// Keeps only the grade-k blades; throws std::out_of_range for k > p+q.
[[nodiscard]] Multivector grade_project(const Multivector& a, int k);

[[nodiscard]] inline double scalar_part(const Multivector& a) noexcept { return a[0]; }

/// d * scalar_part(a) with d = 1 for Cl(0,1) and d = 2 for Cl(3,0); equals the
/// real part of the trace of the Pauli / complex representation.
[[nodiscard]] double trace(const Multivector& a);

/// ab - ba for Bracket::commutator, ab + ba for Bracket::anticommutator.
[[nodiscard]] Multivector commutator_pm(const Multivector& a, const Multivector& b, Bracket sign);

/// A.B = (AB + BA)/2, used for the Omega.S and Omega.Sigma contractions.
[[nodiscard]] Multivector symmetric_product(const Multivector& a, const Multivector& b);

[[nodiscard]] double max_abs(const Multivector& a) noexcept;
[[nodiscard]] double max_abs_diff(const Multivector& a, const Multivector& b);

/// True iff max|a a - a| <= tol.
[[nodiscard]] bool is_idempotent(const Multivector& a, double tol = kDefaultTolerance);

/// The element standing in for the imaginary unit: e in Cl(0,1), e123 in Cl(3,0).
/// Squares to -1 and commutes with the whole algebra.
[[nodiscard]] Multivector central_unit(Signature sig);

/// exp(B angle) = cos(angle) + B sin(angle) for a blade with B^2 = -1.
[[nodiscard]] Multivector exp_unit_blade(const Multivector& unit_blade, double angle);

/// Grade-1 part of a Cl(3,0) element as a Vec3.
[[nodiscard]] Vec3 vector_part(const Multivector& a);

/// Bivector part of a Cl(3,0) element as its dual vector: b with B = e123 b.
[[nodiscard]] Vec3 bivector_dual(const Multivector& a);

/// One line per blade: "<blade-name> <coefficient>" in canonical order.
[[nodiscard]] std::string dump(const Multivector& a);

}  // namespace cliffqm
