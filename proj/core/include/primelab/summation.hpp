#pragma once

#include <cmath>
#include <complex>

namespace primelab {

// Neumaier's variant of Kahan summation. Merging two partial sums keeps both
// compensation terms, so a fixed partition merged in a fixed order gives the
// same bits regardless of which thread produced which partial.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double v) { add(v); }

  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  void merge(const CompensatedComplexSum& o) {
    re_.merge(o.re_);
    im_.merge(o.im_);
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace primelab
