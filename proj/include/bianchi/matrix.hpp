#pragma once

// Small fixed-size matrices over an arbitrary scalar (Rational or double).

#include <array>
#include <cstddef>
#include <ostream>

#include "bianchi/rational.hpp"

namespace bianchi {

template <class T, std::size_t N>
using Vector = std::array<T, N>;

template <class T, std::size_t R, std::size_t C>
class Matrix {
 public:
  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  Matrix() { data_.fill(T(0)); }

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    data_.fill(T(0));
    std::size_t r = 0;
    for (const auto& row : init) {
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static Matrix zero() { return Matrix(); }

  static Matrix identity()
    requires(R == C)
  {
    Matrix m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * C + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * C + c]; }

  Matrix<T, C, R> transpose() const {
    Matrix<T, C, R> t;
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < R * C; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < R * C; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= T(-1); }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  template <std::size_t K>
  friend Matrix<T, R, K> operator*(const Matrix& a, const Matrix<T, C, K>& b) {
    Matrix<T, R, K> out;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t k = 0; k < K; ++k) {
        T acc(0);
        for (std::size_t j = 0; j < C; ++j) acc += a(i, j) * b(j, k);
        out(i, k) = acc;
      }
    return out;
  }

  friend Vector<T, R> operator*(const Matrix& a, const Vector<T, C>& v) {
    Vector<T, R> out;
    for (std::size_t i = 0; i < R; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < C; ++j) acc += a(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.data_ == b.data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < R; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < C; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::array<T, R * C> data_;
};

using Mat3 = Matrix<Rational, 3, 3>;
using Mat2 = Matrix<Rational, 2, 2>;
using Vec3 = Vector<Rational, 3>;

template <class T>
T determinant(const Matrix<T, 2, 2>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class T>
T determinant(const Matrix<T, 3, 3>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class T, std::size_t N>
T trace(const Matrix<T, N, N>& m) {
  T t(0);
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <class T>
Matrix<T, 3, 3> adjugate(const Matrix<T, 3, 3>& m) {
  Matrix<T, 3, 3> adj;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      // cofactor of (c, r)
      std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      std::size_t c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      adj(r, c) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return adj;
}

inline Mat3 inverse(const Mat3& m) {
  Rational det = determinant(m);
  if (det.is_zero()) throw DomainError("singular matrix has no inverse");
  return adjugate(m) * (Rational(1) / det);
}

template <class T, std::size_t N>
bool is_zero(const Vector<T, N>& v) {
  for (const auto& x : v)
    if (!(x == T(0))) return false;
  return true;
}

template <class T>
Matrix<T, 3, 3> outer(const Vector<T, 3>& a, const Vector<T, 3>& b) {
  Matrix<T, 3, 3> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a[i] * b[j];
  return m;
}

}  // namespace bianchi
