// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0
//
// The circuit DSL:
//
//   program := "params" INT NEWLINE circuit
//   circuit := term (";" term)*            -- `a ; b` runs a first, i.e. b.a
//   term    := factor ("|" factor)*        -- left factor = left tensor factor
//   factor  := GATE | "(" circuit ")"
//   GATE    := NAME [ "(" gateargs ")" ]
//   gateargs:= expr | INT ["," INT]        -- angle, or dims for id/swap
//   expr    := prod (("+"|"-") prod)*
//   prod    := NUM ["*" PARAM] | PARAM     -- PARAM := "t" INT, NUM may be pi
//
// Whitespace-insensitive; `#` starts a line comment.

#ifndef PARAMCAT_CIRCUIT_HPP_
#define PARAMCAT_CIRCUIT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paramcat/affine.hpp"
#include "paramcat/gates.hpp"
#include "paramcat/param.hpp"

namespace paramcat {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t length = 0;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

struct CircuitError : std::runtime_error {
  SourceSpan span;
  CircuitError(const std::string& msg, SourceSpan s)
      : std::runtime_error(s.to_string() + ": " + msg), span(s) {}
};

struct CircuitAst {
  enum class Kind { seq, par, gate };
  Kind kind;
  SourceSpan span;

  std::vector<CircuitAst> children;  // seq / par, nonempty

  // gate
  std::string name;
  std::optional<AffineExpr> angle;
  std::vector<std::size_t> dims;  // id(n) / swap(n,m)
};

struct Circuit {
  std::size_t params = 0;  // declared arity
  CircuitAst body;
};

Circuit parse_circuit(const std::string& text);

std::string pretty_print(const Circuit& c);

/// Elaborates into a parameterized morphism over the matrix semantics.
/// `a ; b` becomes b * a (diagram order), `a | b` becomes a boxtimes b,
/// id(n)/swap(n,m) become the identity family and the braiding. Dimension
/// mismatches at a `;` boundary report both dims and spans.
ParamMor<MatrixBackend> elaborate(const MatrixBackend& bk, const Circuit& c);

}  // namespace paramcat

#endif  // PARAMCAT_CIRCUIT_HPP_
