// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/gates.hpp"

#include <cmath>

namespace paramcat {

namespace {
const cplx kI(0.0, 1.0);
}

CMatrix pauli_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }
CMatrix pauli_y() { return CMatrix(2, 2, {0, -kI, kI, 0}); }
CMatrix pauli_z() { return CMatrix(2, 2, {1, 0, 0, -1}); }

CMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return CMatrix(2, 2, {s, s, s, -s});
}

CMatrix cnot() {
  return CMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

CMatrix swap2() { return commutation_matrix(2, 2); }

CMatrix rx_matrix(double a) {
  const cplx c = std::cos(a), is = kI * std::sin(a);
  return CMatrix(2, 2, {c, is, is, c});
}

CMatrix ry_matrix(double a) {
  // cos(a) I + i sin(a) Y; since i*Y = [[0,1],[-1,0]] this is real.
  const cplx c = std::cos(a);
  return CMatrix(2, 2, {c, std::sin(a), -std::sin(a), c});
}

CMatrix rz_matrix(double a) {
  return CMatrix(2, 2, {std::exp(kI * a), 0, 0, std::exp(-kI * a)});
}

ParamMor<MatrixBackend> gate(const MatrixBackend& bk, const std::string& name,
                             const std::optional<AffineExpr>& angle) {
  const bool rotation = name == "rx" || name == "ry" || name == "rz";
  if (rotation && !angle)
    throw GateError("gate '" + name + "' requires an angle expression");
  if (!rotation && angle)
    throw GateError("gate '" + name + "' does not take an angle");

  if (rotation) {
    CMatrix (*builder)(double) = name == "rx"   ? rx_matrix
                                 : name == "ry" ? ry_matrix
                                                : rz_matrix;
    AffineExpr expr = *angle;
    return make_param<MatrixBackend>(
        2, 2, [builder, expr](const ParamPoint& th) {
          return builder(expr.eval(th.coords));
        });
  }
  if (name == "x") return include(bk, 2, 2, pauli_x());
  if (name == "y") return include(bk, 2, 2, pauli_y());
  if (name == "z") return include(bk, 2, 2, pauli_z());
  if (name == "h") return include(bk, 2, 2, hadamard());
  if (name == "cnot") return include(bk, 4, 4, cnot());
  if (name == "swap2") return include(bk, 4, 4, swap2());
  throw GateError("unknown gate '" + name + "'");
}

}  // namespace paramcat
