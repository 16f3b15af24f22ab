#pragma once

// Compatibility varieties Lie(V,c) = Lie(V) ^ Z^2(c), their fibration over
// symmetric forms, linear deformations and contractions.

#include <optional>
#include <string>
#include <vector>

#include "bianchi/classify.hpp"
#include "bianchi/cohomology.hpp"

namespace bianchi {

/// A deformation direction that is not compatible with the base structure.
struct IncompatibleDirection : Error {
  IncompatibleDirection(const std::string& what, Vec3 w) : Error(what), pairing(std::move(w)) {}
  Vec3 pairing;
};

class CompatibilityVariety {
 public:
  explicit CompatibilityVariety(const StructureTensor& base)
      : base_(base), report_(cohomology_report(base)) {
    for (const auto& b : report_.basis_Z2) z2_.push_back(b.coords());
  }

  const StructureTensor& base() const { return base_; }
  const std::vector<StructureTensor>& z2_basis() const { return report_.basis_Z2; }
  std::size_t ambient_dim() const { return z2_.size(); }

  bool member(const StructureTensor& q) const { return linalg::in_span(z2_, q.coords(), 9) && is_lie(q); }

 private:
  StructureTensor base_;
  CohomologyReport report_;
  std::vector<linalg::RowVector> z2_;
};

inline CompatibilityVariety compatibility_variety(const StructureTensor& q) { return CompatibilityVariety(q); }

namespace detail {

inline Mat3 permutation(std::size_t i, std::size_t j) {
  Mat3 p = Mat3::identity();
  p(i, i) = p(j, j) = 0;
  p(i, j) = p(j, i) = 1;
  return p;
}

/// P with P^T S P diagonal.
inline Mat3 congruence_diagonalizer(const Mat3& s) {
  Mat3 m = s, p = Mat3::identity();
  auto apply = [&](const Mat3& e) {
    m = e.transpose() * m * e;
    p = p * e;
  };
  for (std::size_t k = 0; k < 3; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < 3 && m(j, j).is_zero()) ++j;
      if (j < 3) {
        apply(permutation(k, j));
      } else {
        j = k + 1;
        while (j < 3 && m(k, j).is_zero()) ++j;
        if (j == 3) continue;
        Mat3 e = Mat3::identity();
        e(j, k) = 1;  // column k += column j
        apply(e);
      }
    }
    for (std::size_t j = k + 1; j < 3; ++j) {
      if (m(k, j).is_zero()) continue;
      Mat3 e = Mat3::identity();
      e(k, j) = -m(k, j) / m(k, k);
      apply(e);
    }
  }
  return p;
}

inline Mat3 diagonal(const Rational& a, const Rational& b, const Rational& c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace detail

struct NormalizedStructure {
  StructureTensor form;  // act(psi, input)
  Mat3 psi;
  BianchiType type;
};

/// Brings a Lie structure to diagonal normal form: S = diag(s1, s2, s3) with
/// nonzero entries first and s1 = 1 when S != 0; for B types a = e3, s1 = 1 in
/// B1 and S = diag(1, rho, 0) in B2. Entries of A2/A3 forms are not reduced
/// modulo squares.
inline NormalizedStructure normalize(const StructureTensor& q) {
  const BianchiType type = classify(q);
  StructureTensor cur = q;
  Mat3 total = Mat3::identity();
  auto apply = [&](const Mat3& m) {
    cur = act(GLTransform(m), cur);
    total = total * m;
  };

  apply(detail::congruence_diagonalizer(disassemble(cur).S));
  // nonzero diagonal entries first, order otherwise preserved
  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (cur(i, i).is_zero() && !cur(i + 1, i + 1).is_zero()) apply(detail::permutation(i, i + 1));

  Disassembling d = disassemble(cur);
  const std::size_t r = static_cast<std::size_t>(type.unimodular() ? 0 : signature_counts(d.S).rank());
  if (!type.unimodular()) {
    // a lies in span(e_r, ..., e_2): make it the last basis vector
    std::size_t pivot = 2;
    while (d.a[pivot].is_zero()) --pivot;
    Mat3 k;
    for (std::size_t i = 0; i < r; ++i) k(i, i) = 1;
    std::size_t col = r;
    for (std::size_t j = r; j < 3; ++j)
      if (j != pivot) k(j, col++) = 1;
    for (std::size_t i = r; i < 3; ++i) k(i, 2) = d.a[i];
    apply(k);
    d = disassemble(cur);
    const Rational a3 = d.a[2];
    switch (type.kind) {
      case BianchiKind::B0:
        apply(detail::diagonal(1, 1, Rational(1) / a3));
        break;
      default: {
        const Rational s1 = d.S(0, 0);
        apply(detail::diagonal(1, s1 / a3, a3 / (s1 * s1)));
      }
    }
  } else if (!d.S.is_zero()) {
    apply(detail::diagonal(1, 1, Rational(1) / d.S(0, 0)));
  }
  return {cur, total, type};
}

struct Stratum {
  std::string label;
  Mat3 representative;          // symmetric point G of the base of zeta
  std::optional<int> expected;  // fiber dimension, nullopt for an empty fiber
  std::optional<int> computed;
};

struct StratReport {
  BianchiType type;
  StructureTensor normal_form;
  std::vector<Stratum> strata;
  bool consistent() const {
    for (const auto& s : strata)
      if (s.expected != s.computed) return false;
    return true;
  }
};

/// Dimension of {a : G a = 0, S a = -G a_c}, the charges that complete G to a
/// member of Lie(V, c) for c = S + charge(a_c); nullopt when empty.
inline std::optional<int> zeta_fiber_dim(const StructureTensor& c, const Mat3& g) {
  const Disassembling d = disassemble(c);
  const Vec3 ga = g * d.a;
  linalg::DenseMatrix m(6, 3), aug(6, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(i, j) = aug(i, j) = g(i, j);
      m(i + 3, j) = aug(i + 3, j) = d.S(i, j);
    }
  for (std::size_t i = 0; i < 3; ++i) aug(i + 3, 3) = -ga[i];
  const std::size_t r = linalg::rank(m);
  if (linalg::rank(aug) != r) return std::nullopt;
  return static_cast<int>(3 - r);
}

inline StratReport strat_report(const StructureTensor& q) {
  using detail::diagonal;
  NormalizedStructure n = normalize(q);
  StratReport rep{n.type, n.form, {}};
  const Mat3 zero;
  const Mat3 e11 = diagonal(1, 0, 0), s2 = diagonal(1, 2, 0), e33 = diagonal(0, 0, 1);
  auto sym_pair = [](std::size_t i, std::size_t j, const Rational& v) {
    Mat3 m;
    m(i, j) = m(j, i) = v;
    return m;
  };
  auto add = [&](std::string label, Mat3 g, std::optional<int> expected) {
    rep.strata.push_back({std::move(label), std::move(g), expected, std::nullopt});
  };
  switch (n.type.kind) {
    case BianchiKind::A0:
      add("origin", zero, 3);
      add("rank 1", e11, 2);
      add("rank 2", diagonal(1, 1, 0), 1);
      add("rank 3", Mat3::identity(), 0);
      break;
    case BianchiKind::A1: {
      const Vec3 v{0, 1, -1};
      add("origin", zero, 2);
      add("axis", e11, 2);
      add("tangent family", outer(v, v), 1);
      add("axis + tangent family", e11 + outer(v, v), 1);
      add("generic", Mat3::identity(), 0);
      break;
    }
    case BianchiKind::A2minus:
    case BianchiKind::A2plus:
      add("origin", zero, 1);
      add("s2", s2, 1);
      add("off s2", e33, 0);
      break;
    case BianchiKind::A3minus:
    case BianchiKind::A3plus:
      add("origin", zero, 0);
      add("generic", Mat3::identity(), 0);
      break;
    case BianchiKind::B0:
      add("origin", zero, 3);
      add("quadric", e11, 2);
      add("generic s2", s2, 1);
      add("off s2", e33, std::nullopt);
      break;
    case BianchiKind::B1: {
      const Vec3 v{1, 1, 0};
      add("origin", zero, 2);
      add("axis", e11, 2);
      add("tangent family", outer(v, v), 1);
      add("generic s2", s2, 1);
      add("off s2", sym_pair(0, 2, 1), std::nullopt);
      break;
    }
    case BianchiKind::B2: {
      add("origin", zero, 1);
      add("generic s2", s2, 1);
      add("quadric", e11, 1);
      const Rational rho = n.form(1, 1);
      if (rho.sign() < 0) {
        Rational f;
        if (!exact_sqrt(-rho, f))
          throw UnsupportedForm("isotropic stratum of B2- needs sqrt(" + (-rho).str() + ") in Q");
        add("isotropic", sym_pair(0, 2, 1) + sym_pair(1, 2, f), 0);
      }
      add("off s2", e33, std::nullopt);
      break;
    }
  }
  for (auto& s : rep.strata) s.computed = zeta_fiber_dim(n.form, s.representative);
  return rep;
}

struct DeformationSample {
  Rational t;
  BianchiType type;
};

struct DeformationPath {
  StructureTensor c0;
  StructureTensor d;
  std::vector<DeformationSample> samples;
};

/// gamma(t) = (1 - t) c0 + t d.
inline StructureTensor linear_deformation(const StructureTensor& c0, const StructureTensor& d, const Rational& t) {
  return (Rational(1) - t) * c0 + t * d;
}

inline DeformationPath deform(const StructureTensor& c0, const StructureTensor& d, const std::vector<Rational>& ts) {
  require_lie(c0, "base structure");
  require_lie(d, "deformation direction");
  const Vec3 w = compat_pairing(c0, d);
  if (!is_zero(w))
    throw IncompatibleDirection("direction is not compatible with the base structure", w);
  DeformationPath path{c0, d, {}};
  for (const auto& t : ts) {
    const StructureTensor g = linear_deformation(c0, d, t);
    if (!is_lie(g)) throw std::logic_error("linear deformation left Lie(V) at t = " + t.str());
    path.samples.push_back({t, classify(g)});
  }
  return path;
}

enum class ContractionVerdict { contraction, not_contraction, stratum_crossing };

inline std::string to_string(ContractionVerdict v) {
  switch (v) {
    case ContractionVerdict::contraction: return "contraction";
    case ContractionVerdict::not_contraction: return "not-contraction";
    case ContractionVerdict::stratum_crossing: return "stratum-crossing";
  }
  return "?";
}

inline ContractionVerdict contraction_verdict(const DeformationPath& path) {
  const BianchiType* at_zero = nullptr;
  std::vector<const BianchiType*> others;
  for (const auto& s : path.samples) {
    if (s.t.is_zero())
      at_zero = &s.type;
    else
      others.push_back(&s.type);
  }
  if (!at_zero || others.size() < 2)
    throw DomainError("contraction test needs t = 0 and at least two nonzero samples");
  for (const auto* o : others)
    if (!(*o == *others.front())) return ContractionVerdict::stratum_crossing;
  return *at_zero == *others.front() ? ContractionVerdict::not_contraction : ContractionVerdict::contraction;
}

inline bool is_contraction(const DeformationPath& path) {
  const ContractionVerdict v = contraction_verdict(path);
  if (v == ContractionVerdict::stratum_crossing)
    throw StratumCrossing("nonzero samples have different types; refine the path");
  return v == ContractionVerdict::contraction;
}

}  // namespace bianchi
