#include "flags.hpp"

#include "wsqrt/pde.hpp"

#include <cstdio>
#include <stdexcept>

namespace wsqrt::cli {

namespace {

double parse_double(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  return v;
}

}  // namespace

std::complex<double> parse_complex_pair(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      return {parse_double(text), 0.0};
    }
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected 're' or 're,im', got '" + text + "'");
  }
}

std::complex<double> parse_beta(const std::string& text) {
  if (text == "schrodinger") return schrodinger_beta();
  return parse_complex_pair(text);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

}  // namespace wsqrt::cli
