#pragma once

// Seeded samplers for property checks. Every sampler takes the engine by
// reference so that a single seed reproduces a whole run.

#include <bit>
#include <cstdint>
#include <random>

#include "bianchi/classify.hpp"
#include "bianchi/exalg.hpp"
#include "bianchi/structures.hpp"

namespace bianchi::sampling {

using Engine = std::mt19937_64;

/// n/d with d in [1,7] and |n/d| <= bound.
inline Rational random_rational(Engine& rng, int bound = 3) {
  std::uniform_int_distribution<int> den(1, 7);
  int d = den(rng);
  std::uniform_int_distribution<int> num(-bound * d, bound * d);
  return Rational(Integer(num(rng)), Integer(d));
}

/// Small integer-heavy sampler: half the draws are integers in [-bound, bound].
inline Rational random_entry(Engine& rng, int bound = 3) {
  if (std::bernoulli_distribution(0.5)(rng))
    return Rational(std::uniform_int_distribution<int>(-bound, bound)(rng));
  return random_rational(rng, bound);
}

inline Vec3 random_vec(Engine& rng, int bound = 3) {
  return {random_entry(rng, bound), random_entry(rng, bound), random_entry(rng, bound)};
}

inline Vec3 random_nonzero_vec(Engine& rng, int bound = 3) {
  for (;;) {
    Vec3 v = random_vec(rng, bound);
    if (!is_zero(v)) return v;
  }
}

inline Mat3 random_matrix(Engine& rng, int bound = 3) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_entry(rng, bound);
  return m;
}

inline Mat3 random_symmetric(Engine& rng, int bound = 3) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) m(i, j) = m(j, i) = random_entry(rng, bound);
  return m;
}

/// Random symmetric matrix of rank at most r, built as a sum of r rank-one terms.
inline Mat3 random_symmetric_rank(Engine& rng, int r) {
  Mat3 s;
  for (int i = 0; i < r; ++i) {
    Vec3 v = random_nonzero_vec(rng, 2);
    Rational c = random_entry(rng, 2);
    if (c.is_zero()) c = 1;
    s += outer(v, v) * c;
  }
  return s;
}

/// Orthogonal projector onto the plane perpendicular to a (a != 0).
inline Mat3 projector_perp(const Vec3& a) {
  Rational n = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  return Mat3::identity() - outer(a, a) * (Rational(1) / n);
}

/// Random Lie structure: unimodular with probability 1/2, otherwise S = K M K
/// with K the projector perpendicular to a random charge a.
inline StructureTensor random_lie(Engine& rng) {
  std::uniform_int_distribution<int> rank_dist(0, 3);
  if (std::bernoulli_distribution(0.5)(rng))
    return StructureTensor(random_symmetric_rank(rng, rank_dist(rng)));
  Vec3 a = random_nonzero_vec(rng);
  Mat3 k = projector_perp(a);
  Mat3 s = k * random_symmetric_rank(rng, std::uniform_int_distribution<int>(0, 2)(rng)) * k;
  return StructureTensor(s + skew_from_axial(a));
}

inline StructureTensor random_non_unimodular_lie(Engine& rng) {
  Vec3 a = random_nonzero_vec(rng);
  Mat3 k = projector_perp(a);
  Mat3 s = k * random_symmetric_rank(rng, std::uniform_int_distribution<int>(0, 2)(rng)) * k;
  return StructureTensor(s + skew_from_axial(a));
}

/// Candidate tensor, raw random or (with probability 1/2) built to satisfy S a = 0.
inline StructureTensor random_candidate(Engine& rng) {
  if (std::bernoulli_distribution(0.5)(rng)) return StructureTensor(random_matrix(rng));
  return random_lie(rng);
}

inline GLTransform random_gl(Engine& rng, int bound = 3) {
  for (;;) {
    Mat3 m = random_matrix(rng, bound);
    if (!determinant(m).is_zero()) return GLTransform(m);
  }
}

inline exalg::Poly3 random_poly(Engine& rng, unsigned max_degree, int terms = 4) {
  exalg::Poly3 p;
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    unsigned total = deg(rng);
    exalg::Exponent e{0, 0, 0};
    std::uniform_int_distribution<std::size_t> var(0, 2);
    for (unsigned k = 0; k < total; ++k) ++e[var(rng)];
    p += exalg::Poly3::monomial(e, random_entry(rng, 3));
  }
  return p;
}

template <class Kind>
exalg::Graded<Kind> random_graded(Engine& rng, unsigned max_poly_degree, int only_degree = -1) {
  exalg::Graded<Kind> g;
  for (unsigned m = 0; m < 8; ++m) {
    if (only_degree >= 0 && std::popcount(m) != only_degree) continue;
    if (std::bernoulli_distribution(0.6)(rng)) g[m] = random_poly(rng, max_poly_degree, 3);
  }
  return g;
}

/// Independent rank of a 3x3 matrix from its minors.
inline int rank_by_minors(const Mat3& m) {
  if (!determinant(m).is_zero()) return 3;
  for (std::size_t r0 = 0; r0 < 3; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 3; ++r1)
      for (std::size_t c0 = 0; c0 < 3; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 3; ++c1)
          if (!(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)).is_zero()) return 2;
  return m.is_zero() ? 0 : 1;
}

}  // namespace bianchi::sampling
