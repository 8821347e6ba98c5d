// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARAMCAT_AFFINE_HPP_
#define PARAMCAT_AFFINE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paramcat {

struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Affine angle expression c0 + sum_k c_k * theta_k, radians.
/// Term indices are kept strictly increasing with no duplicates.
class AffineExpr {
 public:
  AffineExpr() = default;
  explicit AffineExpr(double constant) : constant_(constant) {}

  static AffineExpr constant(double c) { return AffineExpr(c); }
  static AffineExpr param(std::size_t index, double coeff = 1.0) {
    AffineExpr e;
    e.add_term(index, coeff);
    return e;
  }

  void add_constant(double c) { constant_ += c; }
  void add_term(std::size_t index, double coeff);

  AffineExpr operator+(const AffineExpr& o) const;
  AffineExpr operator-(const AffineExpr& o) const;
  AffineExpr scaled(double k) const;

  double constant_part() const { return constant_; }
  const std::vector<std::pair<std::size_t, double>>& terms() const {
    return terms_;
  }
  /// Largest referenced parameter index + 1; 0 when constant.
  std::size_t min_arity() const;

  double eval(const std::vector<double>& coords) const;

  std::string to_string() const;

 private:
  double constant_ = 0.0;
  std::vector<std::pair<std::size_t, double>> terms_;
};

}  // namespace paramcat

#endif  // PARAMCAT_AFFINE_HPP_
