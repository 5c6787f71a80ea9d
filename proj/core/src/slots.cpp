#include "minkpot/slots.hpp"

#include <algorithm>
#include <cmath>

namespace minkpot {

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.exps[0] + t.exps[1] + t.exps[2]);
  return d;
}

Jet2 Polynomial::operator()(std::span<const Jet2> args) const {
  if (static_cast<int>(args.size()) != arity) throw ArityMismatch("polynomial arity mismatch");
  const int d = degree();
  // powers[k][e] = args[k]^e
  std::vector<std::vector<Jet2>> powers(arity);
  for (int k = 0; k < arity; ++k) {
    powers[k].resize(d + 1);
    powers[k][0] = Jet2(1.0);
    for (int e = 1; e <= d; ++e) powers[k][e] = powers[k][e - 1] * args[k];
  }
  Jet2 r(0.0);
  for (const auto& t : terms) {
    Jet2 m(t.coef);
    for (int k = 0; k < arity; ++k)
      if (t.exps[k] > 0) m = m * powers[k][t.exps[k]];
    r += m;
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> args) const {
  double r = 0.0;
  for (const auto& t : terms) {
    double m = t.coef;
    for (int k = 0; k < arity; ++k) m *= std::pow(args[k], t.exps[k]);
    r += m;
  }
  return r;
}

Polynomial Polynomial::derivative(int k) const {
  Polynomial r{arity, {}};
  for (const auto& t : terms) {
    if (t.exps[k] == 0) continue;
    Term d = t;
    d.coef *= t.exps[k];
    d.exps[k] -= 1;
    r.terms.push_back(d);
  }
  return r;
}

Polynomial Polynomial::antiderivative() const {
  Polynomial r{1, {}};
  for (const auto& t : terms) {
    Term d = t;
    d.exps[0] += 1;
    d.coef /= d.exps[0];
    r.terms.push_back(d);
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.arity = std::max(a.arity, b.arity);
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r{std::max(a.arity, b.arity), {}};
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      Polynomial::Term p;
      p.coef = s.coef * t.coef;
      for (int k = 0; k < 3; ++k) p.exps[k] = s.exps[k] + t.exps[k];
      r.terms.push_back(p);
    }
  return r;
}

Polynomial operator*(double c, const Polynomial& a) {
  Polynomial r = a;
  for (auto& t : r.terms) t.coef *= c;
  return r;
}

FunctionSlot polynomial_slot(std::string label, Polynomial p) {
  const int arity = p.arity;
  return FunctionSlot(std::move(label), arity,
                      [p = std::move(p)](std::span<const Jet2> args) { return p(args); });
}

Polynomial random_polynomial(int arity, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Polynomial p{arity, {}};
  const int e1max = arity > 1 ? degree : 0;
  const int e2max = arity > 2 ? degree : 0;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; b <= e1max && a + b <= degree; ++b)
      for (int c = 0; c <= e2max && a + b + c <= degree; ++c)
        p.terms.push_back({{a, b, c}, coef(rng)});
  return p;
}

FunctionSlot random_elementary_slot(std::string label, int arity, std::mt19937_64& rng) {
  Polynomial lin = random_polynomial(arity, 1, rng);
  const bool use_sin = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  return FunctionSlot(std::move(label), arity, [lin, use_sin](std::span<const Jet2> args) {
    const Jet2 z = lin(args);
    return use_sin ? sin(z) : exp(z);
  });
}

FunctionSlot random_slot(std::string label, int arity, SlotFamily family, std::mt19937_64& rng) {
  if (family == SlotFamily::Elementary) return random_elementary_slot(std::move(label), arity, rng);
  return polynomial_slot(std::move(label), random_polynomial(arity, 3, rng));
}

} // namespace minkpot
