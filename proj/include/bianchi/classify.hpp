#pragma once

// GL(V)-action on structure tensors and the Bianchi classification.
//
// Classification runs in two steps: the orbit of the unimodular part S under
// congruence (rank and inertia), then the charge a, which must lie in ker S.
// The real-field splits (A2+/-, A3+/-, sign of the B2 modulus) are decided
// exactly over Q from the characteristic polynomial of S; over other fields
// these splits differ.

#include <cmath>
#include <optional>
#include <string>
#include <tuple>

#include "bianchi/linalg.hpp"
#include "bianchi/structures.hpp"

namespace bianchi {

class GLTransform {
 public:
  explicit GLTransform(Mat3 m) : m_(std::move(m)), det_(determinant(m_)) {
    if (det_.is_zero()) throw DomainError("GL transform must be invertible");
  }
  const Mat3& matrix() const { return m_; }
  const Rational& det() const { return det_; }

 private:
  Mat3 m_;
  Rational det_;
};

/// Twisted congruence q -> det(psi) psi^T q psi, which maps alpha_c to
/// alpha_{psi(c)}. This is a right action: act(p1, act(p2, q)) = act(p2 p1, q).
inline StructureTensor act(const GLTransform& psi, const StructureTensor& q) {
  return StructureTensor((psi.matrix().transpose() * q.q() * psi.matrix()) * psi.det());
}

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  int rank() const { return n_plus + n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric matrix by Descartes' rule of signs on the
/// characteristic polynomial, which is exact since all roots are real.
inline Inertia signature_counts(const Mat3& s) {
  if (!(s == s.transpose())) throw DomainError("signature of a non-symmetric matrix");
  const Rational c1 = trace(s);
  const Rational c2 = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0) + s(0, 0) * s(2, 2) - s(0, 2) * s(2, 0) +
                      s(1, 1) * s(2, 2) - s(1, 2) * s(2, 1);
  const Rational c3 = determinant(s);
  // p(l) = l^3 - c1 l^2 + c2 l - c3, coefficients from the top.
  std::array<Rational, 4> p{Rational(1), -c1, c2, -c3};
  std::array<Rational, 4> pm{Rational(-1), -c1, -c2, -c3};  // p(-l)

  int zeros = 0;
  while (zeros < 3 && p[3 - zeros].is_zero()) ++zeros;

  auto variations = [zeros](const std::array<Rational, 4>& coeffs) {
    int count = 0, last = 0;
    for (int i = 0; i < 4 - zeros; ++i) {
      int s = coeffs[static_cast<std::size_t>(i)].sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return {variations(p), variations(pm), zeros};
}

inline std::size_t matrix_rank(const Mat3& m) {
  linalg::DenseMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d(i, j) = m(i, j);
  return linalg::rank(d);
}

/// Modulus of a rank-2 structure with nonzero charge: adj(S) = rho a a^T.
/// Invariant under act, sign-carrying (rho > 0 iff S is definite on its image).
inline Rational b2_invariant(const Mat3& s, const Vec3& a) {
  if (is_zero(a)) throw DomainError("b2 invariant needs a nonzero charge");
  if (matrix_rank(s) != 2) throw DomainError("b2 invariant needs rank S = 2");
  if (!is_zero(s * a)) throw DomainError("b2 invariant needs S a = 0");
  const Mat3 adj = adjugate(s);
  std::size_t i = 0;
  while (a[i].is_zero()) ++i;
  return adj(i, i) / (a[i] * a[i]);
}

enum class BianchiKind { A0, A1, A2minus, A2plus, A3minus, A3plus, B0, B1, B2 };

struct BianchiType {
  BianchiKind kind = BianchiKind::A0;
  std::optional<Rational> rho;  // set exactly for B2

  bool unimodular() const { return kind < BianchiKind::B0; }

  std::string name() const {
    switch (kind) {
      case BianchiKind::A0: return "A0";
      case BianchiKind::A1: return "A1";
      case BianchiKind::A2minus: return "A2-";
      case BianchiKind::A2plus: return "A2+";
      case BianchiKind::A3minus: return "A3-";
      case BianchiKind::A3plus: return "A3+";
      case BianchiKind::B0: return "B0";
      case BianchiKind::B1: return "B1";
      case BianchiKind::B2: return rho->sign() > 0 ? "B2+" : "B2-";
    }
    return "?";
  }

  /// Classical Bianchi label(s) for reports.
  std::string bianchi_label() const {
    switch (kind) {
      case BianchiKind::A0: return "I";
      case BianchiKind::A1: return "II";
      case BianchiKind::A2minus: return "VI_0";
      case BianchiKind::A2plus: return "VII_0";
      case BianchiKind::A3minus: return "VIII";
      case BianchiKind::A3plus: return "IX";
      case BianchiKind::B0: return "V";
      case BianchiKind::B1: return "IV";
      case BianchiKind::B2: return rho->sign() > 0 ? "VII_h" : "III/VI_h";
    }
    return "?";
  }

  /// sqrt(|rho|), the lambda of the B_{2,lambda} labels; float for display only.
  std::optional<double> lambda() const {
    if (!rho) return std::nullopt;
    return std::sqrt(std::abs(rho->to_double()));
  }

  friend bool operator==(const BianchiType&, const BianchiType&) = default;
};

inline BianchiType classify(const StructureTensor& q) {
  require_lie(q);
  const Disassembling d = disassemble(q);
  const Inertia in = signature_counts(d.S);
  const int r = in.rank();
  if (is_zero(d.a)) {
    switch (r) {
      case 0: return {BianchiKind::A0, std::nullopt};
      case 1: return {BianchiKind::A1, std::nullopt};
      case 2:
        return {in.n_plus == in.n_minus ? BianchiKind::A2minus : BianchiKind::A2plus, std::nullopt};
      default:
        return {std::abs(in.n_plus - in.n_minus) == 3 ? BianchiKind::A3plus : BianchiKind::A3minus,
                std::nullopt};
    }
  }
  switch (r) {
    case 0: return {BianchiKind::B0, std::nullopt};
    case 1: return {BianchiKind::B1, std::nullopt};
    default: return {BianchiKind::B2, b2_invariant(d.S, d.a)};
  }
}

/// The 3x3 elementary endomorphism with phi(i,j) = 1, acting as the linear
/// vector field X_phi = sum_{i,j} phi(i,j) x_j d/dx_i.
inline exalg::PolyMultiVector linear_field(const Mat3& phi) {
  exalg::PolyMultiVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    exalg::Poly3 coeff;
    for (std::size_t j = 0; j < 3; ++j) coeff += exalg::Poly3::variable(j, phi(i, j));
    out[1u << i] = coeff;
  }
  return out;
}

inline Mat3 elementary(std::size_t i, std::size_t j) {
  Mat3 m;
  m(i, j) = 1;
  return m;
}

/// Matrix (columns indexed by the 9 elementary endomorphisms) of the map
/// phi -> L_{X_phi}(alpha_q), in the coordinates of StructureTensor::coords.
inline linalg::DenseMatrix infinitesimal_action_matrix(const StructureTensor& q) {
  const exalg::PolyForm alpha = to_form(q);
  linalg::DenseMatrix m(9, 9);
  for (std::size_t col = 0; col < 9; ++col) {
    const exalg::PolyForm image = exalg::lie_derivative(linear_field(elementary(col / 3, col % 3)), alpha);
    const linalg::RowVector v = from_form(image).coords();
    for (std::size_t r = 0; r < 9; ++r) m(r, col) = v[r];
  }
  return m;
}

/// Basis of sym(q) = {phi : L_{X_phi}(alpha_q) = 0}, as endomorphism matrices.
inline std::vector<Mat3> symmetry_algebra(const StructureTensor& q) {
  std::vector<Mat3> out;
  for (const auto& v : linalg::kernel_basis(infinitesimal_action_matrix(q)))
    out.push_back(StructureTensor::from_coords(v).q());
  return out;
}

inline std::size_t sym_algebra_dim(const StructureTensor& q) {
  require_lie(q);
  return 9 - linalg::rank(infinitesimal_action_matrix(q));
}

}  // namespace bianchi
