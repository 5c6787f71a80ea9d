#pragma once

// Random compositions of the jet operations, evaluable on Jet2 and on long
// double so finite differences can run in extended precision.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "minkpot/jet.hpp"

namespace minkpot::support {

enum class Op { Add, Sub, Mul, Div, Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt, Atan2, Pow };

struct Node {
  Op op;
  int a = 0, b = 0; // operand indices into earlier values
  int n = 2;        // exponent for Pow
};

struct RandomExpr {
  std::array<std::array<double, 5>, 3> leaves{}; // affine leaves c0 + c.x
  std::vector<Node> nodes;

  template <class T> T operator()(const std::array<T, 4>& x) const {
    using std::atan2, std::cos, std::cosh, std::exp, std::log, std::sin, std::sinh, std::sqrt;
    std::vector<T> v;
    for (const auto& c : leaves) {
      T s = T(c[0]);
      for (int k = 0; k < 4; ++k) s = s + c[k + 1] * x[k];
      v.push_back(s);
    }
    for (const auto& nd : nodes) {
      const T& a = v[nd.a];
      const T& b = v[nd.b];
      switch (nd.op) {
      case Op::Add: v.push_back(a + b); break;
      case Op::Sub: v.push_back(a - b); break;
      case Op::Mul: v.push_back(a * b); break;
      case Op::Div: v.push_back(a / (1.5 + b * b)); break;
      case Op::Sin: v.push_back(sin(a)); break;
      case Op::Cos: v.push_back(cos(a)); break;
      case Op::Sinh: v.push_back(sinh(0.5 * a)); break;
      case Op::Cosh: v.push_back(cosh(0.5 * a)); break;
      case Op::Exp: v.push_back(exp(0.5 * a)); break;
      case Op::Log: v.push_back(log(1.0 + a * a)); break;
      case Op::Sqrt: v.push_back(sqrt(1.0 + a * a)); break;
      case Op::Atan2: v.push_back(atan2(a, 1.5 + b * b)); break;
      case Op::Pow: v.push_back(ipow(a, nd.n)); break;
      }
    }
    return v.back();
  }

private:
  static Jet2 ipow(const Jet2& a, int n) { return pow(a, n); }
  static long double ipow(long double a, int n) {
    long double r = 1.0L;
    for (int k = 0; k < n; ++k) r *= a;
    return r;
  }
};

// Keeps magnitudes moderate: unary growth ops act on bounded inputs through
// the 0.5 factors above and depth is capped at `depth` nodes.
inline RandomExpr random_expr(std::mt19937_64& rng, int depth = 6) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> op(0, 12);
  RandomExpr e;
  for (auto& l : e.leaves)
    for (double& c : l) c = coef(rng);
  int count = static_cast<int>(e.leaves.size());
  for (int d = 0; d < depth; ++d) {
    std::uniform_int_distribution<int> pick(0, count - 1);
    Node nd{static_cast<Op>(op(rng)), pick(rng), pick(rng), 2 + d % 2};
    if (d == depth - 1) nd.a = count - 1; // the root uses the previous node
    e.nodes.push_back(nd);
    ++count;
  }
  return e;
}

struct FdDerivatives {
  std::array<double, 4> g{};
  std::array<std::array<double, 4>, 4> h{};
};

// Central differences in long double; four-point stencil off the diagonal.
inline FdDerivatives fd_derivatives(const RandomExpr& e, const std::array<double, 4>& x, long double h) {
  auto f = [&](int j, long double dj, int k, long double dk) {
    std::array<long double, 4> y{};
    for (int i = 0; i < 4; ++i) y[i] = x[i];
    if (j >= 0) y[j] += dj;
    if (k >= 0) y[k] += dk;
    return e(y);
  };
  FdDerivatives r;
  const long double f0 = f(-1, 0, -1, 0);
  for (int j = 0; j < 4; ++j) {
    const long double p = f(j, h, -1, 0), m = f(j, -h, -1, 0);
    r.g[j] = static_cast<double>((p - m) / (2 * h));
    r.h[j][j] = static_cast<double>((p - 2 * f0 + m) / (h * h));
    for (int k = j + 1; k < 4; ++k) {
      const long double v = (f(j, h, k, h) - f(j, h, k, -h) - f(j, -h, k, h) + f(j, -h, k, -h)) / (4 * h * h);
      r.h[j][k] = r.h[k][j] = static_cast<double>(v);
    }
  }
  return r;
}

// Max over first and second derivatives of |ad - fd| / max(1, |ad|).
inline double jet_vs_fd(const RandomExpr& e, const std::array<double, 4>& x, double h = 1e-5) {
  const Jet2 j = e(seed_coordinates(x));
  const FdDerivatives fd = fd_derivatives(e, x, h);
  double m = 0.0;
  auto rel = [](double ad, double num) { return std::fabs(ad - num) / std::max(1.0, std::fabs(ad)); };
  for (int a = 0; a < 4; ++a) {
    m = std::max(m, rel(j.grad(a), fd.g[a]));
    for (int b = 0; b < 4; ++b) m = std::max(m, rel(j.hess(a, b), fd.h[a][b]));
  }
  return m;
}

} // namespace minkpot::support
