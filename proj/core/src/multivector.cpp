// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/multivector.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cliffqm {

namespace {

// Canonical index -> generator bitmask (bit i set <=> e_{i+1} present).
constexpr std::array<unsigned, 2> kSchrodingerMask{0b0, 0b1};
constexpr std::array<unsigned, 8> kPauliMask{0b000, 0b001, 0b010, 0b100,
                                             0b110, 0b101, 0b011, 0b111};

struct ProductEntry {
  std::uint8_t index;
  std::int8_t sign;
};

struct ProductTable {
  std::size_t dim = 0;
  std::array<std::array<ProductEntry, 8>, 8> entries{};
};

std::span<const unsigned> masks_for(Signature sig) {
  if (sig == kPauli) return kPauliMask;
  return kSchrodingerMask;
}

// Sign from moving the generators of b left past those of a into canonical order.
int reorder_sign(unsigned a, unsigned b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

ProductTable build_table(Signature sig) {
  const auto masks = masks_for(sig);
  ProductTable table;
  table.dim = masks.size();
  std::array<int, 8> index_of_mask{};
  for (std::size_t i = 0; i < masks.size(); ++i) index_of_mask[masks[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const unsigned a = masks[i];
      const unsigned b = masks[j];
      int sign = reorder_sign(a, b);
      // Contract repeated generators with the metric.
      const unsigned common = a & b;
      for (int g = 0; g < sig.generators(); ++g) {
        if ((common >> g) & 1u) sign *= (g < sig.p) ? 1 : -1;
      }
      table.entries[i][j] = {static_cast<std::uint8_t>(index_of_mask[a ^ b]),
                             static_cast<std::int8_t>(sign)};
    }
  }
  return table;
}

const ProductTable& table_for(Signature sig) {
  static const ProductTable schrodinger = build_table(kSchrodinger);
  static const ProductTable pauli = build_table(kPauli);
  return sig == kPauli ? pauli : schrodinger;
}

void require_same(Signature a, Signature b) {
  if (!(a == b)) {
    throw std::invalid_argument("signature mismatch: " + to_string(a) + " vs " + to_string(b));
  }
}

}  // namespace

Signature make_signature(int p, int q) {
  const Signature sig{p, q};
  if (!(sig == kSchrodinger || sig == kPauli)) {
    throw std::invalid_argument("unsupported signature " + to_string(sig) +
                                "; only Cl(0,1) and Cl(3,0) are available");
  }
  return sig;
}

std::string to_string(Signature sig) {
  return "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

Multivector::Multivector(Signature sig) : sig_(make_signature(sig.p, sig.q)) {}

Multivector::Multivector(Signature sig, std::initializer_list<double> coeffs) : Multivector(sig) {
  if (coeffs.size() != size()) {
    throw std::invalid_argument("expected " + std::to_string(size()) + " coefficients for " +
                                to_string(sig) + ", got " + std::to_string(coeffs.size()));
  }
  std::size_t i = 0;
  for (double v : coeffs) c_[i++] = v;
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::blade(Signature sig, std::size_t index, double value) {
  Multivector m(sig);
  if (index >= m.size()) throw std::out_of_range("blade index out of range");
  m.c_[index] = value;
  return m;
}

Multivector Multivector::vector(const Vec3& a) {
  Multivector m(kPauli);
  m.c_[1] = a.x;
  m.c_[2] = a.y;
  m.c_[3] = a.z;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < size(); ++i) c_[i] *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same(a.sig_, b.sig_);
  const ProductTable& t = table_for(a.sig_);
  Multivector r(a.sig_);
  for (std::size_t i = 0; i < t.dim; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < t.dim; ++j) {
      const ProductEntry e = t.entries[i][j];
      r.c_[e.index] += e.sign * ai * b.c_[j];
    }
  }
  return r;
}

bool operator==(const Multivector& a, const Multivector& b) noexcept {
  if (!(a.sig_ == b.sig_)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

std::string blade_name(Signature sig, std::size_t index) {
  if (sig == kSchrodinger) {
    static constexpr std::array<const char*, 2> names{"1", "e"};
    return names.at(index);
  }
  static constexpr std::array<const char*, 8> names{"1", "e1", "e2", "e3", "e23", "e13", "e12", "e123"};
  return names.at(index);
}

int blade_grade(Signature sig, std::size_t index) {
  return std::popcount(masks_for(sig)[index]);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector clifford_conjugate(const Multivector& a) {
  Multivector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int g = blade_grade(a.signature(), i);
    if (g == 1 || g == 2) r[i] = -r[i];
  }
  return r;
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.signature().generators()) {
    throw std::out_of_range("grade " + std::to_string(k) + " out of range for " +
                            to_string(a.signature()));
  }
  Multivector r(a.signature());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (blade_grade(a.signature(), i) == k) r[i] = a[i];
  }
  return r;
}

double trace(const Multivector& a) {
  return (a.signature() == kPauli ? 2.0 : 1.0) * scalar_part(a);
}

Multivector commutator_pm(const Multivector& a, const Multivector& b, Bracket sign) {
  return sign == Bracket::commutator ? a * b - b * a : a * b + b * a;
}

Multivector symmetric_product(const Multivector& a, const Multivector& b) {
  return 0.5 * (a * b + b * a);
}

double max_abs(const Multivector& a) noexcept {
  double m = 0.0;
  for (double v : a.coeffs()) {
    if (std::isnan(v)) return v;
    m = std::fmax(m, std::fabs(v));
  }
  return m;
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return max_abs(a - b); }

bool is_idempotent(const Multivector& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("idempotency tolerance must be positive");
  return max_abs_diff(a * a, a) <= tol;
}

Multivector central_unit(Signature sig) {
  return Multivector::blade(sig, sig.dimension() - 1);
}

Multivector exp_unit_blade(const Multivector& unit_blade, double angle) {
  return Multivector::scalar(unit_blade.signature(), std::cos(angle)) + unit_blade * std::sin(angle);
}

Vec3 vector_part(const Multivector& a) {
  require_same(a.signature(), kPauli);
  return {a[1], a[2], a[3]};
}

Vec3 bivector_dual(const Multivector& a) {
  require_same(a.signature(), kPauli);
  // e123 e1 = e23, e123 e2 = -e13, e123 e3 = e12
  return {a[4], -a[5], a[6]};
}

std::string dump(const Multivector& a) {
  std::ostringstream out;
  char buf[64];
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", a[i]);
    out << blade_name(a.signature(), i) << ' ' << buf << '\n';
  }
  return out.str();
}

}  // namespace cliffqm
