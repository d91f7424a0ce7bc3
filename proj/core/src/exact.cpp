#include "wsqrt/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace wsqrt {

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  if (o.is_zero()) {
    throw std::domain_error("ComplexRational: division by zero");
  }
  const Rational denom = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / denom;
  Rational im = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::complex<double> ComplexRational::to_complex_double() const {
  return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

// Magnitude part of a pure-imaginary display: "" for 1, "3/4" otherwise.
std::string imag_magnitude(const Rational& im) {
  Rational mag = im < 0 ? Rational(-im) : im;
  if (mag == 1) return "";
  return to_string(mag);
}

}  // namespace

std::string ComplexRational::to_string() const {
  if (im_ == 0) return wsqrt::to_string(re_);
  if (re_ == 0) {
    std::string sign = im_ < 0 ? "-" : "";
    return sign + imag_magnitude(im_) + "i";
  }
  std::string imag_part = (im_ < 0 ? "-" : "+") + imag_magnitude(im_) + "i";
  return "(" + wsqrt::to_string(re_) + imag_part + ")";
}

Poly::Poly(ComplexRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::variable() {
  Poly p;
  p.coeffs_ = {ComplexRational(0), ComplexRational(1)};
  return p;
}

bool Poly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == ComplexRational(1);
}

ComplexRational Poly::coeff(std::size_t power) const {
  if (power >= coeffs_.size()) return ComplexRational(0);
  return coeffs_[power];
}

std::size_t Poly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) ++n;
  }
  return n;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ComplexRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
      out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::to_string(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const ComplexRational& c = coeffs_[d];
    if (c.is_zero()) continue;
    std::string term;
    if (d == 0) {
      term = c.to_string();
    } else {
      std::string var = symbol + (d > 1 ? "^" + std::to_string(d) : "");
      if (c == ComplexRational(1)) {
        term = var;
      } else if (c == ComplexRational(-1)) {
        term = "-" + var;
      } else {
        term = c.to_string() + var;
      }
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

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::cpp_int(text));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
  }
}

ComplexRational parse_complex_rational(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return ComplexRational(parse_rational(text));
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace wsqrt
