// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/affine.hpp"

#include <algorithm>
#include <cstdio>

namespace paramcat {

void AffineExpr::add_term(std::size_t index, double coeff) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), index,
      [](const auto& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  } else if (coeff != 0.0) {
    terms_.insert(it, {index, coeff});
  }
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
  AffineExpr out = *this;
  out.constant_ += o.constant_;
  for (const auto& [i, c] : o.terms_) out.add_term(i, c);
  return out;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const {
  return *this + o.scaled(-1.0);
}

AffineExpr AffineExpr::scaled(double k) const {
  AffineExpr out;
  out.constant_ = constant_ * k;
  for (const auto& [i, c] : terms_)
    if (c * k != 0.0) out.terms_.emplace_back(i, c * k);
  return out;
}

std::size_t AffineExpr::min_arity() const {
  return terms_.empty() ? 0 : terms_.back().first + 1;
}

double AffineExpr::eval(const std::vector<double>& coords) const {
  double v = constant_;
  for (const auto& [i, c] : terms_) {
    if (i >= coords.size())
      throw ArityError("affine expression references parameter t" +
                       std::to_string(i) + " but only " +
                       std::to_string(coords.size()) + " parameters supplied");
    v += c * coords[i];
  }
  return v;
}

std::string AffineExpr::to_string() const {
  std::string out;
  char buf[48];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  // The grammar has no unary minus, so a leading negative is spelled with an
  // explicit leading constant: "0 - t0".
  const bool lead_negative = !terms_.empty() && terms_.front().second < 0;
  if (terms_.empty() || constant_ != 0.0 || lead_negative) {
    if (constant_ < 0.0) out = "0 - " + num(-constant_);
    else out = num(constant_);
  }
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    const double a = std::abs(c);
    if (a == 1.0)
      out += "t" + std::to_string(i);
    else
      out += num(a) + "*t" + std::to_string(i);
  }
  return out;
}

}  // namespace paramcat
