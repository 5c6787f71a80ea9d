#pragma once

#include <array>
#include <cmath>

#include "minkpot/errors.hpp"
#include "minkpot/types.hpp"

namespace minkpot {

// Second-order forward-mode jet in four variables.
//
// Holds f, the gradient and the Hessian. Only the upper triangle of the
// Hessian is stored, so it is symmetric bit for bit.
class Jet2 {
public:
  static constexpr int kVars = 4;
  static constexpr int kPacked = kVars * (kVars + 1) / 2;

  Jet2() = default;
  Jet2(double v) : v_(v) {} // NOLINT: constants mix freely with jets

  static Jet2 variable(double value, int k) {
    Jet2 r(value);
    r.g_[k] = 1.0;
    return r;
  }

  double value() const { return v_; }
  double grad(int i) const { return g_[i]; }
  const Vec4& gradient() const { return g_; }
  double hess(int i, int j) const { return h_[packed(i, j)]; }
  Mat4 hessian() const {
    Mat4 m{};
    for (int i = 0; i < kVars; ++i)
      for (int j = 0; j < kVars; ++j) m[i][j] = hess(i, j);
    return m;
  }

  Jet2 operator-() const {
    Jet2 r;
    r.v_ = -v_;
    for (int i = 0; i < kVars; ++i) r.g_[i] = -g_[i];
    for (int k = 0; k < kPacked; ++k) r.h_[k] = -h_[k];
    return r;
  }

  Jet2& operator+=(const Jet2& b) {
    v_ += b.v_;
    for (int i = 0; i < kVars; ++i) g_[i] += b.g_[i];
    for (int k = 0; k < kPacked; ++k) h_[k] += b.h_[k];
    return *this;
  }
  Jet2& operator-=(const Jet2& b) {
    v_ -= b.v_;
    for (int i = 0; i < kVars; ++i) g_[i] -= b.g_[i];
    for (int k = 0; k < kPacked; ++k) h_[k] -= b.h_[k];
    return *this;
  }
  Jet2& operator+=(double c) {
    v_ += c;
    return *this;
  }
  Jet2& operator-=(double c) {
    v_ -= c;
    return *this;
  }
  Jet2& operator*=(double c) {
    v_ *= c;
    for (int i = 0; i < kVars; ++i) g_[i] *= c;
    for (int k = 0; k < kPacked; ++k) h_[k] *= c;
    return *this;
  }
  Jet2& operator*=(const Jet2& b) { return *this = *this * b; }
  Jet2& operator/=(const Jet2& b) { return *this = *this / b; }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator+(Jet2 a, double c) { return a += c; }
  friend Jet2 operator+(double c, Jet2 a) { return a += c; }
  friend Jet2 operator-(Jet2 a, double c) { return a -= c; }
  friend Jet2 operator-(double c, const Jet2& a) { return (-a) += c; }
  friend Jet2 operator*(Jet2 a, double c) { return a *= c; }
  friend Jet2 operator*(double c, Jet2 a) { return a *= c; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v_ = a.v_ * b.v_;
    for (int i = 0; i < kVars; ++i) r.g_[i] = a.v_ * b.g_[i] + b.v_ * a.g_[i];
    int k = 0;
    for (int i = 0; i < kVars; ++i)
      for (int j = i; j < kVars; ++j, ++k)
        r.h_[k] = a.v_ * b.h_[k] + b.v_ * a.h_[k] + a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
    return r;
  }

  // q = a / b from a = q b differentiated twice.
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.v_ == 0.0) throw DivisionByZero();
    const double inv = 1.0 / b.v_;
    Jet2 q;
    q.v_ = a.v_ * inv;
    for (int i = 0; i < kVars; ++i) q.g_[i] = (a.g_[i] - q.v_ * b.g_[i]) * inv;
    int k = 0;
    for (int i = 0; i < kVars; ++i)
      for (int j = i; j < kVars; ++j, ++k)
        q.h_[k] = (a.h_[k] - q.v_ * b.h_[k] - q.g_[i] * b.g_[j] - q.g_[j] * b.g_[i]) * inv;
    return q;
  }
  friend Jet2 operator/(Jet2 a, double c) {
    if (c == 0.0) throw DivisionByZero();
    return a *= (1.0 / c);
  }
  friend Jet2 operator/(double c, const Jet2& b) { return Jet2(c) / b; }

  // Applies a scalar function with derivatives f0, f1, f2 at value().
  Jet2 chain(double f0, double f1, double f2) const {
    Jet2 r;
    r.v_ = f0;
    for (int i = 0; i < kVars; ++i) r.g_[i] = f1 * g_[i];
    int k = 0;
    for (int i = 0; i < kVars; ++i)
      for (int j = i; j < kVars; ++j, ++k) r.h_[k] = f1 * h_[k] + f2 * g_[i] * g_[j];
    return r;
  }

  // Two-argument chain rule; fx, fy are first partials, fxx, fxy, fyy second.
  static Jet2 chain2(const Jet2& x, const Jet2& y, double f0, double fx, double fy, double fxx,
                     double fxy, double fyy) {
    Jet2 r;
    r.v_ = f0;
    for (int i = 0; i < kVars; ++i) r.g_[i] = fx * x.g_[i] + fy * y.g_[i];
    int k = 0;
    for (int i = 0; i < kVars; ++i)
      for (int j = i; j < kVars; ++j, ++k)
        r.h_[k] = fx * x.h_[k] + fy * y.h_[k] + fxx * x.g_[i] * x.g_[j] + fyy * y.g_[i] * y.g_[j] +
                  fxy * (x.g_[i] * y.g_[j] + x.g_[j] * y.g_[i]);
    return r;
  }

private:
  static constexpr int packed(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return i * kVars - i * (i - 1) / 2 + (j - i);
  }

  double v_ = 0.0;
  Vec4 g_{};
  std::array<double, kPacked> h_{};
};

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(c, -s, -c);
}
inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.chain(s, c, s);
}
inline Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.chain(c, s, c);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.chain(e, e, e);
}
inline Jet2 log(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) throw DomainError("ln of non-positive value");
  return a.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}
inline Jet2 sqrt(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) throw DomainError("sqrt of non-positive value");
  const double s = std::sqrt(v);
  return a.chain(s, 0.5 / s, -0.25 / (s * v));
}

// atan2(y, x) with result in (-pi, pi].
inline Jet2 atan2(const Jet2& y, const Jet2& x) {
  const double yv = y.value(), xv = x.value();
  const double r2 = xv * xv + yv * yv;
  if (r2 == 0.0) throw DomainError("atan2 at the origin");
  const double r4 = r2 * r2;
  return Jet2::chain2(x, y, std::atan2(yv, xv), -yv / r2, xv / r2, 2.0 * xv * yv / r4,
                      (yv * yv - xv * xv) / r4, -2.0 * xv * yv / r4);
}

inline Jet2 pow(const Jet2& a, int n) {
  if (n == 0) return Jet2(1.0);
  const double v = a.value();
  if (n < 0 && v == 0.0) throw DivisionByZero();
  const double p2 = n >= 2 || n < 0 ? std::pow(v, n - 2) : 0.0;
  const double p1 = n >= 1 || n < 0 ? std::pow(v, n - 1) : 0.0;
  return a.chain(std::pow(v, n), n * p1, n * (n - 1) * p2);
}

inline Jet2 sq(const Jet2& a) { return a * a; }

inline std::array<Jet2, 4> seed_coordinates(const SpacetimePoint& x) {
  return {Jet2::variable(x[0], 0), Jet2::variable(x[1], 1), Jet2::variable(x[2], 2),
          Jet2::variable(x[3], 3)};
}

inline double value_of(double v) { return v; }
inline double value_of(const Jet2& j) { return j.value(); }

} // namespace minkpot
