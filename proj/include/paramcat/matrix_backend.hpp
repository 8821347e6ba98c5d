// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARAMCAT_MATRIX_BACKEND_HPP_
#define PARAMCAT_MATRIX_BACKEND_HPP_

#include <cstddef>
#include <string>

#include "paramcat/matrix.hpp"

namespace paramcat {

/// The skeletal finite-dimensional complex-matrix semantics: objects are
/// positive dimensions, morphisms Y <- X are dim(Y) x dim(X) matrices,
/// tensor is the Kronecker product. The presentation is strictified, so the
/// associator and unitors are identity matrices; the braiding is the
/// commutation (perfect-shuffle) permutation.
struct MatrixBackend {
  using Obj = std::size_t;  // dimension, >= 1
  using Mor = CMatrix;

  /// Fault-injection hook: evaluates tensor with its arguments swapped.
  /// Used by the law-suite mutation test; never set in production paths.
  bool swap_tensor_args = false;

  static Obj make_dim(std::size_t n) {
    if (n == 0) throw ShapeError("dimension must be >= 1");
    return n;
  }

  Mor compose(const Mor& g, const Mor& f) const { return mat_compose(g, f); }
  Mor identity(Obj n) const { return CMatrix::identity(n); }
  Mor tensor(const Mor& a, const Mor& b) const {
    return swap_tensor_args ? mat_tensor(b, a) : mat_tensor(a, b);
  }

  Obj unit() const { return 1; }
  Obj tensor_obj(Obj n, Obj m) const { return n * m; }
  bool obj_eq(Obj a, Obj b) const { return a == b; }
  std::string obj_name(Obj n) const { return std::to_string(n); }

  Mor associator(Obj x, Obj y, Obj z) const {
    return CMatrix::identity(x * y * z);
  }
  Mor left_unitor(Obj x) const { return CMatrix::identity(x); }
  Mor right_unitor(Obj x) const { return CMatrix::identity(x); }
  Mor braiding(Obj n, Obj m) const { return commutation_matrix(n, m); }

  double deviation(const Mor& a, const Mor& b) const {
    return max_deviation(a, b);
  }
  double phase_invariant_deviation(const Mor& a, const Mor& b) const {
    return max_deviation(strip_global_phase(a), strip_global_phase(b));
  }
};

}  // namespace paramcat

#endif  // PARAMCAT_MATRIX_BACKEND_HPP_
