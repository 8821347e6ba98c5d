// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARAMCAT_GATES_HPP_
#define PARAMCAT_GATES_HPP_

#include <optional>
#include <string>

#include "paramcat/affine.hpp"
#include "paramcat/matrix_backend.hpp"
#include "paramcat/param.hpp"

namespace paramcat {

struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed gate matrices.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix cnot();
CMatrix swap2();

// Rotation conventions: R_X(a) = cos(a) I + i sin(a) X, likewise R_Y, and
// R_Z(a) = diag(e^{ia}, e^{-ia}). Note these differ from the textbook
// exp(-i a sigma / 2) convention.
CMatrix rx_matrix(double a);
CMatrix ry_matrix(double a);
CMatrix rz_matrix(double a);

/// Builds a gate family. rx/ry/rz require an angle expression; the constant
/// gates (h, x, y, z, cnot, swap2) must not receive one and are constant
/// families. Throws GateError on unknown names or misplaced angles.
ParamMor<MatrixBackend> gate(const MatrixBackend& bk, const std::string& name,
                             const std::optional<AffineExpr>& angle);

}  // namespace paramcat

#endif  // PARAMCAT_GATES_HPP_
