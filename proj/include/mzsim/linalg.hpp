#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

// Fixed-dimension complex linear algebra for the interferometer model.
// Only dims 2 and 4 exist; mismatches are compile errors by construction.
//
// Tensor ordering convention (used project-wide): kron(a, b) places `a` on
// the RIGHT subsystem and `b` on the LEFT, so the composite basis index of
// |xy> is 2*x + y with x the right-side state and y the left-side state.

namespace mzsim {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;
// Looser: two independent computation paths accumulate rounding differently.
inline constexpr double kOracleTol = 1e-10;

template <std::size_t N>
struct Matrix {
  std::array<cplx, N * N> e{};

  static constexpr std::size_t dim = N;

  constexpr cplx& operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
  constexpr const cplx& operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
  }
};

template <std::size_t N>
struct Vector {
  std::array<cplx, N> a{};

  static constexpr std::size_t dim = N;

  constexpr cplx& operator[](std::size_t i) { return a[i]; }
  constexpr const cplx& operator[](std::size_t i) const { return a[i]; }
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Vec2 = Vector<2>;
using Vec4 = Vector<4>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <std::size_t N>
Matrix<N> operator*(cplx s, const Matrix<N>& m) {
  Matrix<N> r = m;
  for (auto& x : r.e) x *= s;
  return r;
}

// Matrix-vector product; does not re-normalize.
template <std::size_t N>
Vector<N> apply(const Matrix<N>& m, const Vector<N>& v) {
  Vector<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
  return r;
}

// kron(a, b): a acts on the right subsystem (high index bit), b on the left.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

inline Vec4 kron(const Vec2& u, const Vec2& v) {
  Vec4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = u[i] * v[j];
  return r;
}

template <std::size_t N>
Matrix<N> dagger(const Matrix<N>& m) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(a.e[i] - b.e[i]));
  return d;
}

template <std::size_t N>
double max_abs_diff(const Vector<N>& u, const Vector<N>& v) {
  double d = 0.0;
  for (std::size_t i = 0; i < N; ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& m, double tol) {
  return max_abs_diff(dagger(m) * m, Matrix<N>::identity()) <= tol;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  double s = 0.0;
  for (const auto& x : v.a) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t N>
Vector<N> normalized(const Vector<N>& v) {
  Vector<N> r = v;
  const double n = norm(v);
  for (auto& x : r.a) x /= n;
  return r;
}

template <std::size_t N>
bool is_finite(const Matrix<N>& m) {
  for (const auto& x : m.e)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

// True iff u = lambda * v for some unit-modulus lambda, within tol.
// Aligns on v's largest-magnitude amplitude to avoid dividing by near-zeros.
template <std::size_t N>
bool equal_up_to_global_phase(const Vector<N>& u, const Vector<N>& v, double tol) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  const double mag = std::abs(u[k]) * std::abs(v[k]);
  if (mag == 0.0) return max_abs_diff(u, v) <= tol;
  const cplx lambda = u[k] * std::conj(v[k]) / mag;
  Vector<N> w = v;
  for (auto& x : w.a) x *= lambda;
  return max_abs_diff(u, w) <= tol;
}

}  // namespace mzsim
