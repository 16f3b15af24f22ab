#pragma once

// Polynomial calculus on 3-space: polynomial functions, multivector fields and
// differential forms with exact rational coefficients.
//
// A multivector field is stored as a polynomial in the even coordinates
// x1, x2, x3 and the odd generators t1, t2, t3 (t_i standing for d/dx_i);
// forms use the same layout with t_i standing for dx_i. Component `mask` holds
// the coefficient of the wedge of the generators whose bits are set, in
// increasing index order. Index 0 is x1.

#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>

#include "bianchi/rational.hpp"

namespace bianchi::exalg {

using Exponent = std::array<unsigned, 3>;

/// Sparse polynomial in x1, x2, x3. No zero coefficient is ever stored.
class Poly3 {
 public:
  Poly3() = default;
  Poly3(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[{0, 0, 0}] = c;
  }
  template <std::integral I>
  Poly3(I c) : Poly3(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly3 variable(std::size_t i, const Rational& coeff = 1) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    return monomial(e, coeff);
  }

  static Poly3 monomial(const Exponent& e, const Rational& coeff) {
    Poly3 p;
    if (!coeff.is_zero()) p.terms_[e] = coeff;
    return p;
  }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1] + e[2]));
    return d;
  }

  Poly3 derivative(std::size_t i) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      out.add_term(f, c * Rational(e[i]));
    }
    return out;
  }

  Poly3& operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly3& operator-=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly3& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator-(Poly3 a) { return a *= Rational(-1); }
  friend Poly3 operator*(Poly3 a, const Rational& s) { return a *= s; }
  friend Poly3 operator*(const Rational& s, Poly3 a) { return a *= s; }

  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
  }

  friend bool operator==(const Poly3&, const Poly3&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
      first = false;
      bool constant = e[0] + e[1] + e[2] == 0;
      bool unit = mag == Rational(1);
      if (constant || !unit) os << mag;
      bool need_star = constant || !unit;
      for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << '*';
        os << 'x' << (i + 1);
        if (e[i] > 1) os << '^' << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Exponent, Rational> terms_;
};

namespace detail {

inline int popcount(unsigned m) { return std::popcount(m); }

/// Sign of the shuffle that sorts the concatenation (I, J) of disjoint index sets.
inline int shuffle_sign(unsigned I, unsigned J) {
  int inversions = 0;
  for (unsigned j = 0; j < 3; ++j)
    if (J & (1u << j)) inversions += popcount(I >> (j + 1));
  return inversions % 2 ? -1 : 1;
}

inline int below(unsigned I, unsigned i) { return popcount(I & ((1u << i) - 1)); }
inline int above(unsigned I, unsigned i) { return popcount(I >> (i + 1)); }

}  // namespace detail

struct FormKind {};
struct VectorKind {};

/// Element of Poly3 (x) exterior algebra on three odd generators.
template <class Kind>
class Graded {
 public:
  static constexpr unsigned kFull = 0b111;

  Graded() = default;

  static Graded basis(unsigned mask, const Poly3& coeff = Poly3(1)) {
    Graded g;
    g.comp_[mask] = coeff;
    return g;
  }
  static Graded function(const Poly3& f) { return basis(0, f); }
  /// d/dx_i for multivectors, dx_i for forms.
  static Graded generator(std::size_t i, const Poly3& coeff = Poly3(1)) { return basis(1u << i, coeff); }

  Poly3& operator[](unsigned mask) { return comp_[mask]; }
  const Poly3& operator[](unsigned mask) const { return comp_[mask]; }

  bool is_zero() const {
    for (const auto& p : comp_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// The part of exterior degree k.
  Graded homogeneous(int k) const {
    Graded g;
    for (unsigned m = 0; m < 8; ++m)
      if (detail::popcount(m) == k) g.comp_[m] = comp_[m];
    return g;
  }

  /// True when every nonzero component has exterior degree k.
  bool has_degree(int k) const {
    for (unsigned m = 0; m < 8; ++m)
      if (!comp_[m].is_zero() && detail::popcount(m) != k) return false;
    return true;
  }

  /// Coefficient-wise partial derivative d/dx_i.
  Graded derivative(std::size_t i) const {
    Graded g;
    for (unsigned m = 0; m < 8; ++m) g.comp_[m] = comp_[m].derivative(i);
    return g;
  }

  /// Left derivative with respect to the odd generator i.
  Graded odd_left(std::size_t i) const {
    Graded g;
    const unsigned bit = 1u << i;
    for (unsigned m = 0; m < 8; ++m) {
      if (!(m & bit) || comp_[m].is_zero()) continue;
      g.comp_[m & ~bit] += detail::below(m, static_cast<unsigned>(i)) % 2 ? -comp_[m] : comp_[m];
    }
    return g;
  }

  /// Right derivative with respect to the odd generator i.
  Graded odd_right(std::size_t i) const {
    Graded g;
    const unsigned bit = 1u << i;
    for (unsigned m = 0; m < 8; ++m) {
      if (!(m & bit) || comp_[m].is_zero()) continue;
      g.comp_[m & ~bit] += detail::above(m, static_cast<unsigned>(i)) % 2 ? -comp_[m] : comp_[m];
    }
    return g;
  }

  Graded& operator+=(const Graded& o) {
    for (unsigned m = 0; m < 8; ++m) comp_[m] += o.comp_[m];
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    for (unsigned m = 0; m < 8; ++m) comp_[m] -= o.comp_[m];
    return *this;
  }
  Graded& operator*=(const Poly3& f) {
    for (auto& p : comp_) p = p * f;
    return *this;
  }

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(Graded a) { return a *= Poly3(-1); }
  friend Graded operator*(Graded a, const Poly3& f) { return a *= f; }
  friend Graded operator*(const Poly3& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const Rational& s) { return a *= Poly3(s); }
  friend Graded operator*(const Rational& s, Graded a) { return a *= Poly3(s); }

  friend bool operator==(const Graded&, const Graded&) = default;

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned m = 0; m < 8; ++m) {
      if (comp_[m].is_zero()) continue;
      os << (first ? "" : " + ") << '(' << comp_[m].str() << ')';
      first = false;
      for (unsigned i = 0; i < 3; ++i)
        if (m & (1u << i)) os << (std::is_same_v<Kind, FormKind> ? "dx" : "d") << (i + 1);
    }
    return first ? "0" : os.str();
  }

 private:
  std::array<Poly3, 8> comp_{};
};

using PolyForm = Graded<FormKind>;
using PolyMultiVector = Graded<VectorKind>;

template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b) {
  Graded<Kind> out;
  for (unsigned i = 0; i < 8; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j < 8; ++j) {
      if (b[j].is_zero() || (i & j)) continue;
      Poly3 prod = a[i] * b[j];
      out[i | j] += detail::shuffle_sign(i, j) < 0 ? -prod : prod;
    }
  }
  return out;
}

inline PolyForm dx(std::size_t i) { return PolyForm::generator(i); }
inline PolyMultiVector partial(std::size_t i) { return PolyMultiVector::generator(i); }
inline Poly3 x(std::size_t i) { return Poly3::variable(i); }

/// The Liouville field x1 d1 + x2 d2 + x3 d3.
inline PolyMultiVector liouville() {
  PolyMultiVector d;
  for (std::size_t i = 0; i < 3; ++i) d += partial(i) * x(i);
  return d;
}

inline PolyForm exterior_d(const PolyForm& a) {
  PolyForm out;
  for (std::size_t i = 0; i < 3; ++i) out += wedge(dx(i), a.derivative(i));
  return out;
}

/// Contraction i_X(w) of a vector field into a form (an antiderivation).
inline PolyForm interior(const PolyMultiVector& field, const PolyForm& form) {
  PolyForm out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly3& xi = field[1u << i];
    if (xi.is_zero()) continue;
    out += form.odd_left(i) * xi;
  }
  return out;
}

/// Contraction i_b(P) of a 1-form into a multivector, filling the first slot.
inline PolyMultiVector interior(const PolyForm& one_form, const PolyMultiVector& p) {
  PolyMultiVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly3& bi = one_form[1u << i];
    if (bi.is_zero()) continue;
    out += p.odd_left(i) * bi;
  }
  return out;
}

/// Schouten bracket, realized as the odd Poisson bracket
///   [[P, Q]] = sum_i (P <d/dt_i)(d/dx_i Q) - (d/dx_i P)(d/dt_i> Q)
/// with a right odd derivative on P and a left one on Q. On vector fields it
/// is the commutator, [[X, f]] = X(f), and [[P, P]] for a linear bivector
/// equals twice the Jacobiator of the corresponding bracket.
inline PolyMultiVector schouten(const PolyMultiVector& p, const PolyMultiVector& q) {
  PolyMultiVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    out += wedge(p.odd_right(i), q.derivative(i));
    out -= wedge(p.derivative(i), q.odd_left(i));
  }
  return out;
}

/// Lie derivative of a form along a vector field (Cartan's formula).
inline PolyForm lie_derivative(const PolyMultiVector& field, const PolyForm& form) {
  return interior(field, exterior_d(form)) + exterior_d(interior(field, form));
}

/// Lie derivative of a multivector field along a vector field.
inline PolyMultiVector lie_derivative(const PolyMultiVector& field, const PolyMultiVector& p) {
  return schouten(field, p);
}

namespace detail {
template <class To, class From>
Graded<To> dualize_impl(const Graded<From>& g) {
  Graded<To> out;
  for (unsigned m = 0; m < 8; ++m) {
    if (g[m].is_zero()) continue;
    unsigned comp = Graded<From>::kFull & ~m;
    out[comp] = shuffle_sign(m, comp) < 0 ? -g[m] : g[m];
  }
  return out;
}
}  // namespace detail

/// Volume-form duality: d_I maps to sign(I, I^c) dx_{I^c}, so that a bivector
/// P and its dual 1-form a satisfy P(f, g) dx1^dx2^dx3 = df ^ dg ^ a.
inline PolyForm dualize(const PolyMultiVector& p) { return detail::dualize_impl<FormKind>(p); }
inline PolyMultiVector dualize(const PolyForm& a) { return detail::dualize_impl<VectorKind>(a); }

/// P(df, dg) for a bivector P.
inline Poly3 evaluate(const PolyMultiVector& p, const Poly3& f, const Poly3& g) {
  Poly3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Poly3& c = p[(1u << i) | (1u << j)];
      if (c.is_zero()) continue;
      out += c * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
    }
  return out;
}

inline PolyForm differential(const Poly3& f) { return exterior_d(PolyForm::function(f)); }

/// Applies a vector field to a function.
inline Poly3 apply(const PolyMultiVector& field, const Poly3& f) {
  Poly3 out;
  for (std::size_t i = 0; i < 3; ++i) out += field[1u << i] * f.derivative(i);
  return out;
}

}  // namespace bianchi::exalg
