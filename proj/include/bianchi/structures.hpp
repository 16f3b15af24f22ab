#pragma once

// Structure tensors of 3-dimensional Lie algebras and their equivalent
// presentations.
//
// A candidate structure is a 3x3 rational matrix q. With the bracket written
// [x_i, x_j] = sum_k c^k_ij x_k, the dictionary is
//
//   c^k_ij = sum_h q(k,h) eps_hij                 (structure constants)
//   alpha  = sum_{k,h} q(k,h) x_k dx_h            (linear 1-form)
//   P      = dual of alpha, P(dx_i, dx_j) = [x_i, x_j]  (linear bivector)
//
// Symmetric q are exactly the unimodular structures; the skew part of q is
// encoded by its axial vector a, with q = S + sum_i a_i * charge(i).

#include <array>
#include <cstddef>
#include <vector>

#include "bianchi/errors.hpp"
#include "bianchi/exalg.hpp"
#include "bianchi/linalg.hpp"
#include "bianchi/matrix.hpp"

namespace bianchi {

/// Totally antisymmetric symbol on {0,1,2}, eps(0,1,2) = +1.
constexpr int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2) are the cyclic ones
  return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(Mat3 q) : q_(std::move(q)) {}

  const Mat3& q() const { return q_; }
  const Rational& operator()(std::size_t k, std::size_t h) const { return q_(k, h); }

  bool is_zero() const { return q_.is_zero(); }
  bool is_symmetric() const { return q_ == q_.transpose(); }

  /// Row-major coordinates in the 9-dimensional ambient space.
  linalg::RowVector coords() const {
    linalg::RowVector v(9);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t h = 0; h < 3; ++h) v[3 * k + h] = q_(k, h);
    return v;
  }
  static StructureTensor from_coords(const linalg::RowVector& v) {
    Mat3 q;
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t h = 0; h < 3; ++h) q(k, h) = v[3 * k + h];
    return StructureTensor(q);
  }

  friend StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
    return StructureTensor(a.q_ + b.q_);
  }
  friend StructureTensor operator-(const StructureTensor& a, const StructureTensor& b) {
    return StructureTensor(a.q_ - b.q_);
  }
  friend StructureTensor operator*(const Rational& s, const StructureTensor& a) {
    return StructureTensor(a.q_ * s);
  }
  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  Mat3 q_;
};

/// c[k][i][j] = c^k_ij.
using StructureConstants = std::array<std::array<std::array<Rational, 3>, 3>, 3>;

inline StructureConstants to_structure_constants(const StructureTensor& t) {
  StructureConstants c{};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational acc;
        for (std::size_t h = 0; h < 3; ++h)
          if (int e = levi_civita(h, i, j)) acc += Rational(e) * t(k, h);
        c[k][i][j] = acc;
      }
  return c;
}

inline StructureTensor from_structure_constants(const StructureConstants& c) {
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j)
        if (c[k][i][j] != -c[k][j][i])
          throw DomainError("structure constants are not skew in the lower indices (k=" +
                            std::to_string(k + 1) + ", i=" + std::to_string(i + 1) +
                            ", j=" + std::to_string(j + 1) + ")");
  Mat3 q;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t h = 0; h < 3; ++h) {
      // q(k,h) = c^k_ij for the cyclic (h,i,j)
      q(k, h) = c[k][(h + 1) % 3][(h + 2) % 3];
    }
  return StructureTensor(q);
}

/// Skew matrix of the charge with axial vector a: A(k,h) = sum_i a_i eps_ikh.
inline Mat3 skew_from_axial(const Vec3& a) {
  Mat3 m;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t h = 0; h < 3; ++h)
      for (std::size_t i = 0; i < 3; ++i)
        if (int e = levi_civita(i, k, h)) m(k, h) += Rational(e) * a[i];
  return m;
}

/// Axial vector of the skew part of m.
inline Vec3 axial(const Mat3& m) {
  Vec3 a;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t k = (i + 1) % 3, h = (i + 2) % 3;
    a[i] = (m(k, h) - m(h, k)) / Rational(2);
  }
  return a;
}

/// The purely non-unimodular basis structure alpha_i, i in {0,1,2}.
inline StructureTensor charge(std::size_t i) {
  Vec3 a{};
  a[i] = 1;
  return StructureTensor(skew_from_axial(a));
}

/// Linear 1-form alpha = sum q(k,h) x_k dx_h.
inline exalg::PolyForm to_form(const StructureTensor& t) {
  exalg::PolyForm out;
  for (std::size_t h = 0; h < 3; ++h) {
    exalg::Poly3 coeff;
    for (std::size_t k = 0; k < 3; ++k) coeff += exalg::Poly3::variable(k, t(k, h));
    out[1u << h] = coeff;
  }
  return out;
}

/// Reads back q from a linear 1-form. Throws if the form is not a linear 1-form.
inline StructureTensor from_form(const exalg::PolyForm& a) {
  if (!a.has_degree(1)) throw DomainError("expected a 1-form");
  Mat3 q;
  for (std::size_t h = 0; h < 3; ++h) {
    for (const auto& [e, c] : a[1u << h].terms()) {
      if (e[0] + e[1] + e[2] != 1) throw DomainError("1-form is not linear");
      std::size_t k = e[0] ? 0 : (e[1] ? 1 : 2);
      q(k, h) = c;
    }
  }
  return StructureTensor(q);
}

/// The Lie-Poisson bivector dual to alpha.
inline exalg::PolyMultiVector to_bivector(const StructureTensor& t) { return exalg::dualize(to_form(t)); }

inline StructureTensor from_bivector(const exalg::PolyMultiVector& p) { return from_form(exalg::dualize(p)); }

struct Disassembling {
  Mat3 S;  // symmetric (unimodular) part
  Mat3 A;  // skew (charge) part
  Vec3 a;  // axial vector of A
};

inline Disassembling disassemble(const StructureTensor& t) {
  const Rational half(Integer(1), Integer(2));
  Mat3 S = (t.q() + t.q().transpose()) * half;
  Mat3 A = (t.q() - t.q().transpose()) * half;
  return {S, A, axial(t.q())};
}

/// J[k][a][b][c] = c^k_aj c^j_bc + c^k_cj c^j_ab + c^k_bj c^j_ca.
inline std::array<std::array<std::array<std::array<Rational, 3>, 3>, 3>, 3> jacobiator(
    const StructureTensor& t) {
  const StructureConstants c = to_structure_constants(t);
  std::array<std::array<std::array<std::array<Rational, 3>, 3>, 3>, 3> out{};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t cc = 0; cc < 3; ++cc) {
          Rational acc;
          for (std::size_t j = 0; j < 3; ++j)
            acc += c[k][a][j] * c[j][b][cc] + c[k][cc][j] * c[j][a][b] + c[k][b][j] * c[j][cc][a];
          out[k][a][b][cc] = acc;
        }
  return out;
}

/// Brute-force Jacobi check over all 81 index combinations.
inline bool jacobi_structure_constants(const StructureTensor& t) {
  const auto jac = jacobiator(t);
  for (const auto& k : jac)
    for (const auto& a : k)
      for (const auto& b : a)
        for (const auto& v : b)
          if (!v.is_zero()) return false;
  return true;
}

/// Integrability check alpha ^ d(alpha) = 0.
inline bool jacobi_form(const StructureTensor& t) {
  const exalg::PolyForm alpha = to_form(t);
  return exalg::wedge(alpha, exalg::exterior_d(alpha)).is_zero();
}

/// Poisson check [[P, P]] = 0.
inline bool jacobi_schouten(const StructureTensor& t) {
  const exalg::PolyMultiVector p = to_bivector(t);
  return exalg::schouten(p, p).is_zero();
}

inline bool is_lie(const StructureTensor& t) { return jacobi_structure_constants(t); }

inline void require_lie(const StructureTensor& t, const char* what = "structure") {
  if (!is_lie(t)) throw NotLie(std::string(what) + " does not satisfy the Jacobi identity");
}

/// Mixed bracket of two linear Poisson structures in closed form,
/// w = 2 (S1 a2 + S2 a1). Symmetric and bilinear; w(q, q) = 0 iff q is Lie.
/// Sign follows the table of mixed commutators [[c_{x_i dx_i}, c_{alpha_i}]] =
/// 2 x_i xi; with the Schouten convention of exalg::schouten the trivector
/// [[P1, P2]] equals -(w . x) d1^d2^d3.
inline Vec3 compat_pairing(const StructureTensor& q1, const StructureTensor& q2) {
  const Disassembling d1 = disassemble(q1), d2 = disassemble(q2);
  Vec3 s1a2 = d1.S * d2.a, s2a1 = d2.S * d1.a;
  Vec3 w;
  for (std::size_t i = 0; i < 3; ++i) w[i] = Rational(2) * (s1a2[i] + s2a1[i]);
  return w;
}

inline bool is_compatible(const StructureTensor& q1, const StructureTensor& q2) {
  require_lie(q1, "first structure");
  require_lie(q2, "second structure");
  return is_zero(compat_pairing(q1, q2));
}

}  // namespace bianchi
