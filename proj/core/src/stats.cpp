#include "wsqrt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wsqrt {

double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (const double x : xs) acc.add(x);
  return acc.value();
}

SampleStats sample_stats(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("sample_stats: empty sample");
  SampleStats s;
  s.count = xs.size();
  s.mean = compensated_sum(xs) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    CompensatedSum sq;
    for (const double x : xs) {
      const double d = x - s.mean;
      sq.add(d * d);
    }
    s.stddev = std::sqrt(sq.value() / static_cast<double>(xs.size() - 1));
    s.standard_error = s.stddev / std::sqrt(static_cast<double>(xs.size()));
  }
  return s;
}

ComplexSampleStats complex_sample_stats(std::span<const std::complex<double>> xs) {
  if (xs.empty()) throw std::invalid_argument("complex_sample_stats: empty sample");
  ComplexSampleStats s;
  s.count = xs.size();
  CompensatedSum re, im;
  for (const auto& x : xs) {
    re.add(x.real());
    im.add(x.imag());
  }
  const double n = static_cast<double>(xs.size());
  s.mean = {re.value() / n, im.value() / n};
  CompensatedSum sq;
  for (const auto& x : xs) {
    sq.add(std::norm(x - s.mean));
  }
  s.scatter = std::sqrt(sq.value() / n);
  s.standard_error = s.scatter / std::sqrt(n);
  return s;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_slope: need matching samples, at least two points");
  }
  const double n = static_cast<double>(x.size());
  double xb = 0.0, yb = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xb += x[i];
    yb += y[i];
  }
  xb /= n;
  yb /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - xb) * (y[i] - yb);
    den += (x[i] - xb) * (x[i] - xb);
  }
  return num / den;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("fit_loglog_slope: inputs must be positive");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_slope(lx, ly);
}

double quadratic_fit_relative_residual(std::span<const double> t, std::span<const double> v) {
  if (t.size() != v.size() || t.size() < 3) {
    throw std::invalid_argument("quadratic_fit: need at least three points");
  }
  // Normal equations for [a, b, c] in a + b t + c t^2; 3x3 solved by Cramer.
  double s[5] = {0, 0, 0, 0, 0};
  double r[3] = {0, 0, 0};
  for (std::size_t i = 0; i < t.size(); ++i) {
    double p = 1.0;
    for (int k = 0; k < 5; ++k) {
      s[k] += p;
      if (k < 3) r[k] += p * v[i];
      p *= t[i];
    }
  }
  const double m[3][3] = {{s[0], s[1], s[2]}, {s[1], s[2], s[3]}, {s[2], s[3], s[4]}};
  auto det3 = [](const double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const double det = det3(m);
  if (det == 0.0) throw std::invalid_argument("quadratic_fit: singular system");
  double coef[3];
  for (int c = 0; c < 3; ++c) {
    double mm[3][3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) mm[i][j] = (j == c) ? r[i] : m[i][j];
    }
    coef[c] = det3(mm) / det;
  }
  double res2 = 0.0, norm2 = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double fit = coef[0] + coef[1] * t[i] + coef[2] * t[i] * t[i];
    res2 += (v[i] - fit) * (v[i] - fit);
    norm2 += v[i] * v[i];
  }
  return std::sqrt(res2 / norm2);
}

void parallel_for_index(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t w = 0; w < nthreads; ++w) {
    const std::size_t lo = count * w / nthreads;
    const std::size_t hi = count * (w + 1) / nthreads;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace wsqrt
