// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARAMCAT_LAWS_HPP_
#define PARAMCAT_LAWS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramcat/param.hpp"

namespace paramcat {

struct LawResult {
  std::string name;
  std::size_t trials = 0;
  double max_dev = 0.0;
  bool pass = false;
  std::optional<ParamPoint> counterexample;  // first failing point, if any
};

struct LawReport {
  double tol = 0.0;
  std::vector<LawResult> laws;

  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
  std::string render_text() const;
  std::string render_json() const;
};

struct LawConfig {
  std::size_t arity = 2;
  std::size_t trials = 25;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_dim = 4;
  /// Runs the suite against the tensor-argument-swapped backend. Guards the
  /// suite against vacuous checks: the interchange law must go red.
  bool corrupt_tensor = false;
  bool parallel = true;
};

/// Runs the full law suite over the matrix semantics: category laws for
/// pointwise composition, bifunctoriality and interchange of the tensor,
/// naturality and coherence (pentagon, triangle, both hexagons) of the
/// structural morphisms, symmetry of the braiding, strict braided
/// monoidality of each evaluation functor, functoriality and faithfulness
/// of the constant-family inclusion, and the zero-arity degeneration to the
/// base semantics. Expected values are computed through the serial
/// reference kernels wherever a law equates an engine composite with a
/// directly-computed morphism. Seed-deterministic regardless of scheduling.
LawReport check_laws(const LawConfig& cfg);

}  // namespace paramcat

#endif  // PARAMCAT_LAWS_HPP_
