#pragma once

#include <complex>
#include <string>

namespace wsqrt::cli {

/// Complex flags travel as "re,im" pairs ("0.0,0.5") or a bare real ("0.7").
std::complex<double> parse_complex_pair(const std::string& text);

/// Like parse_complex_pair, plus the literal "schrodinger" for beta = i/2.
std::complex<double> parse_beta(const std::string& text);

/// Shortest-exact decimal rendering used in reports and tables.
std::string format_double(double x);

/// "re,im" with format_double components.
std::string format_complex(std::complex<double> z);

}  // namespace wsqrt::cli
