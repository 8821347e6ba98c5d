// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARAMCAT_MATRIX_HPP_
#define PARAMCAT_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramcat {

using cplx = std::complex<double>;

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix. Immutable by convention once built:
/// every operation returns a fresh value.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), v_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw ShapeError("zero-dimensional matrices are not allowed");
  }
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), v_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw ShapeError("zero-dimensional matrices are not allowed");
    if (v_.size() != rows * cols)
      throw ShapeError("entry count does not match shape");
  }

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& at(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

  const std::vector<cplx>& entries() const { return v_; }

  CMatrix dagger() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> v_;
};

// Serial reference kernels. These stay deliberately naive and are used as
// oracles for the parallel paths and for the law suite.
namespace ref {
CMatrix mat_compose(const CMatrix& g, const CMatrix& f);
CMatrix mat_tensor(const CMatrix& f, const CMatrix& g);
CMatrix commutation_matrix(std::size_t n, std::size_t m);
}  // namespace ref

// Production kernels. Fall back to the serial loop below a size threshold;
// above it the inner loops run under OpenMP when available.
CMatrix mat_compose(const CMatrix& g, const CMatrix& f);
CMatrix mat_tensor(const CMatrix& f, const CMatrix& g);
CMatrix commutation_matrix(std::size_t n, std::size_t m);

/// Max entrywise modulus of (a - b); +inf when shapes differ.
double max_deviation(const CMatrix& a, const CMatrix& b);

struct ApproxResult {
  bool equal;
  double max_dev;
  std::string reason;  // nonempty when shapes differ
};
ApproxResult approx_eq(const CMatrix& a, const CMatrix& b, double tol);

/// One row per line, entries as `a+bi` with 12 significant digits,
/// tab-separated.
std::string format_matrix_text(const CMatrix& m);

/// Structured rendering: {"rows":r,"cols":c,"re":[...],"im":[...]}.
std::string format_matrix_json(const CMatrix& m);

/// Divides by the phase of the first entry with modulus > 1e-9. Used by the
/// phase-invariant equivalence mode.
CMatrix strip_global_phase(const CMatrix& m);

}  // namespace paramcat

#endif  // PARAMCAT_MATRIX_HPP_
