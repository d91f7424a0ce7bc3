#pragma once

#include "wsqrt/exact.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace wsqrt {

/// Basis of formal stochastic differentials closed under the product rules
/// dW² = dt, |dW|² = dt, sign(dW)² = 1, sign(dW)·|dW| = dW, sign(dW)·dW = |dW|,
/// dW·|dW| = sign(dW)·dt, with everything of combined order above dt dropped.
/// sign(dW)·dt is kept as its own monomial so identities can assert that its
/// coefficient cancels.
enum class Monomial : int {
  One = 0,
  SignDW = 1,
  DW = 2,
  AbsDW = 3,
  Dt = 4,
  SignDt = 5,
};

inline constexpr std::array<Monomial, 6> kMonomialBasis = {
    Monomial::One, Monomial::SignDW, Monomial::DW,
    Monomial::AbsDW, Monomial::Dt, Monomial::SignDt,
};

/// Order in units of dt^(1/2): One/SignDW are 0, dW/|dW| are 1, dt-level terms are 2.
int monomial_half_order(Monomial m);

const char* monomial_name(Monomial m);

/// Product of two basis monomials under the fixed table; nullopt means the
/// product is beyond order dt and is discarded.
std::optional<Monomial> monomial_product(Monomial a, Monomial b);

/// Formal stochastic differential: exact polynomial-in-V coefficients over
/// the monomial basis. Zero coefficients are never stored. Immutable-style
/// value type; all operations are pure.
class ItoExpr {
 public:
  ItoExpr() = default;
  explicit ItoExpr(Monomial m, Poly coeff = Poly(1));

  const std::map<Monomial, Poly>& coeffs() const { return coeffs_; }
  /// Zero polynomial when the monomial is absent.
  Poly coeff(Monomial m) const;
  bool is_zero() const { return coeffs_.empty(); }

  ItoExpr operator-() const;
  ItoExpr& operator+=(const ItoExpr& o);
  ItoExpr& operator-=(const ItoExpr& o);

  friend ItoExpr operator+(ItoExpr a, const ItoExpr& b) { return a += b; }
  friend ItoExpr operator-(ItoExpr a, const ItoExpr& b) { return a -= b; }
  friend ItoExpr operator*(const ItoExpr& a, const ItoExpr& b);
  friend ItoExpr operator*(const Poly& s, const ItoExpr& e);
  friend bool operator==(const ItoExpr& a, const ItoExpr& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical display, e.g. "1/4·sign(dW) + dW + V·dt".
  std::string to_string() const;

 private:
  void set(Monomial m, Poly p);
  std::map<Monomial, Poly> coeffs_;
};

/// Bilinear product under the monomial table (same as operator*).
ItoExpr mul(const ItoExpr& a, const ItoExpr& b);

/// Bracket data for the square-root ansatz
///   dX = [mu0 + mu1·|dW| + drift·dt]·Phi_(1/2),
/// drift being an order-0 expression (One and SignDW coefficients, polynomials
/// in the formal potential symbol V). mu2 records the scalar part of drift.
struct SqrtAnsatzCoefficients {
  ComplexRational mu0;
  ComplexRational mu1;
  ComplexRational mu2;
  ItoExpr drift;
};

/// mu1 = 1/(2·mu0), mu2 = -1/(8·mu0³), exactly. Throws std::domain_error
/// when mu0 = 0.
std::pair<ComplexRational, ComplexRational> solve_sqrt_coefficients(const ComplexRational& mu0);

/// Free bracket: drift is the constant mu2 solved from mu0.
SqrtAnsatzCoefficients free_sqrt_ansatz(const ComplexRational& mu0);

/// Interacting bracket with mu0 = 1/2: drift = -1 + V·sign(dW).
SqrtAnsatzCoefficients interacting_sqrt_ansatz();

/// Fully reduced (bracket² )·sign(dW); the sign factor is Phi² collapsed
/// through the Bernoulli phase identity.
ItoExpr reduce_ansatz_square(const SqrtAnsatzCoefficients& c);

}  // namespace wsqrt
