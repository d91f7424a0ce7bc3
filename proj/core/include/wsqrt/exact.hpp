#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace wsqrt {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with arbitrary-precision rational parts.
/// All arithmetic is exact; no floating point is involved anywhere.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ComplexRational(Rational re) : re_(std::move(re)) {}
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  ComplexRational operator-() const { return {-re_, -im_}; }
  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  /// Exact division via the conjugate. Throws std::domain_error on zero divisor.
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex_double() const;

  /// "0", "1/2", "-3", "i", "-i", "1/8i", "(1/2-1/8i)"
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Dense polynomial in one formal symbol (the potential placeholder V)
/// over ComplexRational. Trailing zero coefficients are always stripped,
/// so the zero polynomial has no stored coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(ComplexRational constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(ComplexRational(constant)) {}  // NOLINT

  /// The formal symbol itself: coefficient 1 at degree 1.
  static Poly variable();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  ComplexRational coeff(std::size_t power) const;
  std::size_t term_count() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& symbol = "V") const;

 private:
  void normalize();
  std::vector<ComplexRational> coeffs_;
};

/// Parses "p", "-p", "p/q" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Parses "re" or "re,im" where each part is rational ("1/2", "-3").
ComplexRational parse_complex_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace wsqrt
