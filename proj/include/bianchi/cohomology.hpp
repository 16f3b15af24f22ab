#pragma once

// Degree-2 segment of the Lie-Poisson complex of a structure q:
// coboundaries phi -> L_{X_phi}(alpha_q) and cocycles q' with [[P_q, P_q']] = 0.

#include <vector>

#include "bianchi/classify.hpp"
#include "bianchi/linalg.hpp"
#include "bianchi/structures.hpp"

namespace bianchi {

struct CohomologyReport {
  std::size_t dim_Z2 = 0;
  std::size_t dim_B2 = 0;
  std::size_t dim_H2 = 0;
  std::vector<StructureTensor> basis_Z2;
  std::vector<StructureTensor> basis_B2;
  std::vector<StructureTensor> basis_H2;  // complement of B2 inside Z2, not canonical
};

inline StructureTensor coboundary(const StructureTensor& q, const Mat3& phi) {
  require_lie(q);
  return from_form(exalg::lie_derivative(linear_field(phi), to_form(q)));
}

/// The 3x9 matrix of q' -> compat_pairing(q, q').
inline linalg::DenseMatrix cocycle_matrix(const StructureTensor& q) {
  linalg::DenseMatrix m(3, 9);
  for (std::size_t col = 0; col < 9; ++col) {
    linalg::RowVector e(9);
    e[col] = 1;
    const Vec3 w = compat_pairing(q, StructureTensor::from_coords(e));
    for (std::size_t r = 0; r < 3; ++r) m(r, col) = w[r];
  }
  return m;
}

inline CohomologyReport cohomology_report(const StructureTensor& q) {
  require_lie(q);
  CohomologyReport rep;
  const auto z2 = linalg::kernel_basis(cocycle_matrix(q));
  const auto b2 = linalg::image_basis(infinitesimal_action_matrix(q));
  for (const auto& v : z2) rep.basis_Z2.push_back(StructureTensor::from_coords(v));
  for (const auto& v : b2) rep.basis_B2.push_back(StructureTensor::from_coords(v));
  for (const auto& v : linalg::complement_basis(b2, z2, 9))
    rep.basis_H2.push_back(StructureTensor::from_coords(v));
  rep.dim_Z2 = z2.size();
  rep.dim_B2 = b2.size();
  rep.dim_H2 = rep.dim_Z2 - rep.dim_B2;
  return rep;
}

/// Basis of the skew structures compatible with the unimodular structure S:
/// charges whose axial vector lies in ker S. Its length is 3 - rank S.
inline std::vector<StructureTensor> zeta_fiber_basis(const Mat3& s) {
  if (!(s == s.transpose())) throw DomainError("zeta fiber needs a symmetric matrix");
  linalg::DenseMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d(i, j) = s(i, j);
  std::vector<StructureTensor> out;
  for (const auto& v : linalg::kernel_basis(d)) out.emplace_back(skew_from_axial({v[0], v[1], v[2]}));
  return out;
}

}  // namespace bianchi
