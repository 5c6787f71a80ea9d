#pragma once

#include <array>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minkpot/errors.hpp"
#include "minkpot/jet.hpp"

namespace minkpot {

// An arbitrary function of 1..3 arguments appearing in a class formula.
class FunctionSlot {
public:
  using Impl = std::function<Jet2(std::span<const Jet2>)>;

  FunctionSlot() = default;
  FunctionSlot(std::string label, int arity, Impl impl)
      : label_(std::move(label)), arity_(arity), impl_(std::move(impl)) {}

  const std::string& label() const { return label_; }
  int arity() const { return arity_; }
  bool valid() const { return static_cast<bool>(impl_); }

  template <class... Args> Jet2 operator()(const Args&... args) const {
    const std::array<Jet2, sizeof...(Args)> v{Jet2(args)...};
    return call(v);
  }
  Jet2 call(std::span<const Jet2> args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw ArityMismatch("slot " + label_ + " expects " + std::to_string(arity_) + " arguments");
    return impl_(args);
  }

private:
  std::string label_;
  int arity_ = 0;
  Impl impl_;
};

using SlotSet = std::map<std::string, FunctionSlot>;

// Sum of coef * prod args[k]^exps[k].
struct Polynomial {
  struct Term {
    std::array<int, 3> exps{};
    double coef = 0.0;
  };
  int arity = 1;
  std::vector<Term> terms;

  int degree() const;
  Jet2 operator()(std::span<const Jet2> args) const;
  double evaluate(std::span<const double> args) const;
  // d/d(arg k) as a polynomial.
  Polynomial derivative(int k) const;
  // Univariate antiderivative with zero constant term.
  Polynomial antiderivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double c, const Polynomial& a);
};

FunctionSlot polynomial_slot(std::string label, Polynomial p);

// All monomials of total degree <= degree, coefficients uniform in [-1, 1].
Polynomial random_polynomial(int arity, int degree, std::mt19937_64& rng);

// sin or exp of a random degree-1 polynomial.
FunctionSlot random_elementary_slot(std::string label, int arity, std::mt19937_64& rng);

enum class SlotFamily { Polynomial, Elementary };

FunctionSlot random_slot(std::string label, int arity, SlotFamily family, std::mt19937_64& rng);

} // namespace minkpot
