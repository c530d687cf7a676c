// summation.hpp - compensated accumulation
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cmath>

namespace bbrad {

// Neumaier's variant of Kahan summation.  The rounding error of a whole sum
// stays at a few eps of the magnitude of the terms, independent of the term
// count, and partial sums merged in a fixed order make chunked (possibly
// parallel) reductions reproducible bit for bit.
class NeumaierSum {
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

  // Folds another partial sum in; call in a fixed order across partials.
  void merge(const NeumaierSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace bbrad
