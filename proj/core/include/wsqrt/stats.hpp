#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace wsqrt {

/// Neumaier-compensated accumulator; fixed evaluation order makes reductions
/// reproducible bit-for-bit.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;        // sample standard deviation (n-1 in the denominator)
  double standard_error = 0.0;  // stddev / sqrt(n); 0 for a single sample
  std::size_t count = 0;
};

/// Index-order moments of a real sample.
SampleStats sample_stats(std::span<const double> xs);

struct ComplexSampleStats {
  std::complex<double> mean;
  double scatter = 0.0;         // sqrt(mean |x - mean|^2)
  double standard_error = 0.0;  // scatter / sqrt(n)
  std::size_t count = 0;
};

ComplexSampleStats complex_sample_stats(std::span<const std::complex<double>> xs);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log(y) against log(x); inputs must be positive.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Fits v ~ a + b·t + c·t² and returns ||v - fit||_2 / ||v||_2.
double quadratic_fit_relative_residual(std::span<const double> t, std::span<const double> v);

/// Runs fn(i) for i in [0, count) over `workers` threads in contiguous index
/// blocks. fn must only touch data slots owned by its own index.
void parallel_for_index(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t)>& fn);

}  // namespace wsqrt
