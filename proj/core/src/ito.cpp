#include "wsqrt/ito.hpp"

#include <stdexcept>

namespace wsqrt {

namespace {

constexpr int kZero = -1;

// Symmetric 6x6 product table indexed by Monomial; kZero marks products
// beyond order dt. Row/column order: One, SignDW, DW, AbsDW, Dt, SignDt.
constexpr int kTable[6][6] = {
    // One      SignDW    DW        AbsDW     Dt        SignDt
    {0, 1, 2, 3, 4, 5},          // One
    {1, 0, 3, 2, 5, 4},          // SignDW
    {2, 3, 4, 5, kZero, kZero},  // DW
    {3, 2, 5, 4, kZero, kZero},  // AbsDW
    {4, 5, kZero, kZero, kZero, kZero},  // Dt
    {5, 4, kZero, kZero, kZero, kZero},  // SignDt
};

constexpr int kHalfOrder[6] = {0, 0, 1, 1, 2, 2};

constexpr const char* kNames[6] = {"1", "sign(dW)", "dW", "|dW|", "dt", "sign(dW)·dt"};

}  // namespace

int monomial_half_order(Monomial m) { return kHalfOrder[static_cast<int>(m)]; }

const char* monomial_name(Monomial m) { return kNames[static_cast<int>(m)]; }

std::optional<Monomial> monomial_product(Monomial a, Monomial b) {
  const int r = kTable[static_cast<int>(a)][static_cast<int>(b)];
  if (r == kZero) return std::nullopt;
  return static_cast<Monomial>(r);
}

ItoExpr::ItoExpr(Monomial m, Poly coeff) { set(m, std::move(coeff)); }

Poly ItoExpr::coeff(Monomial m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Poly() : it->second;
}

void ItoExpr::set(Monomial m, Poly p) {
  if (p.is_zero()) {
    coeffs_.erase(m);
  } else {
    coeffs_[m] = std::move(p);
  }
}

ItoExpr ItoExpr::operator-() const {
  ItoExpr out;
  for (const auto& [m, p] : coeffs_) out.coeffs_.emplace(m, -p);
  return out;
}

ItoExpr& ItoExpr::operator+=(const ItoExpr& o) {
  for (const auto& [m, p] : o.coeffs_) set(m, coeff(m) + p);
  return *this;
}

ItoExpr& ItoExpr::operator-=(const ItoExpr& o) {
  for (const auto& [m, p] : o.coeffs_) set(m, coeff(m) - p);
  return *this;
}

ItoExpr operator*(const ItoExpr& a, const ItoExpr& b) {
  ItoExpr out;
  for (const auto& [ma, pa] : a.coeffs_) {
    for (const auto& [mb, pb] : b.coeffs_) {
      const auto m = monomial_product(ma, mb);
      if (!m) continue;
      out.set(*m, out.coeff(*m) + pa * pb);
    }
  }
  return out;
}

ItoExpr operator*(const Poly& s, const ItoExpr& e) {
  ItoExpr out;
  for (const auto& [m, p] : e.coeffs_) out.set(m, s * p);
  return out;
}

ItoExpr mul(const ItoExpr& a, const ItoExpr& b) { return a * b; }

std::string ItoExpr::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const Monomial m : kMonomialBasis) {
    const auto it = coeffs_.find(m);
    if (it == coeffs_.end()) continue;
    const Poly& p = it->second;
    std::string term;
    if (m == Monomial::One) {
      term = p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    } else if (p.is_one()) {
      term = monomial_name(m);
    } else if (p == Poly(-1)) {
      term = std::string("-") + monomial_name(m);
    } else if (p.term_count() > 1) {
      term = "(" + p.to_string() + ")·" + monomial_name(m);
    } else {
      term = p.to_string() + "·" + monomial_name(m);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::pair<ComplexRational, ComplexRational> solve_sqrt_coefficients(const ComplexRational& mu0) {
  if (mu0.is_zero()) {
    throw std::domain_error("solve_sqrt_coefficients: mu0 must be nonzero");
  }
  const ComplexRational mu1 = ComplexRational(1) / (ComplexRational(2) * mu0);
  const ComplexRational mu2 = -(ComplexRational(1) / (ComplexRational(8) * mu0 * mu0 * mu0));
  return {mu1, mu2};
}

SqrtAnsatzCoefficients free_sqrt_ansatz(const ComplexRational& mu0) {
  const auto [mu1, mu2] = solve_sqrt_coefficients(mu0);
  SqrtAnsatzCoefficients c;
  c.mu0 = mu0;
  c.mu1 = mu1;
  c.mu2 = mu2;
  c.drift = ItoExpr(Monomial::One, Poly(mu2));
  return c;
}

SqrtAnsatzCoefficients interacting_sqrt_ansatz() {
  SqrtAnsatzCoefficients c;
  c.mu0 = ComplexRational(Rational(1, 2));
  c.mu1 = ComplexRational(1);
  c.mu2 = ComplexRational(-1);
  c.drift = ItoExpr(Monomial::One, Poly(-1)) + ItoExpr(Monomial::SignDW, Poly::variable());
  return c;
}

ItoExpr reduce_ansatz_square(const SqrtAnsatzCoefficients& c) {
  ItoExpr bracket = ItoExpr(Monomial::One, Poly(c.mu0)) +
                    ItoExpr(Monomial::AbsDW, Poly(c.mu1)) +
                    c.drift * ItoExpr(Monomial::Dt);
  return bracket * bracket * ItoExpr(Monomial::SignDW);
}

}  // namespace wsqrt
