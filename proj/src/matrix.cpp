// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace paramcat {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::dagger() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.at(c, r) = std::conj(at(r, c));
  return out;
}

bool CMatrix::all_finite() const {
  for (const cplx& z : v_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

namespace ref {

CMatrix mat_compose(const CMatrix& g, const CMatrix& f) {
  if (g.cols() != f.rows())
    throw ShapeError("compose: shape mismatch (" + std::to_string(g.rows()) +
                     "x" + std::to_string(g.cols()) + ") * (" +
                     std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     ")");
  CMatrix out(g.rows(), f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const cplx gik = g.at(i, k);
      for (std::size_t j = 0; j < f.cols(); ++j)
        out.at(i, j) += gik * f.at(k, j);
    }
  return out;
}

CMatrix mat_tensor(const CMatrix& f, const CMatrix& g) {
  CMatrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l)
          out.at(i * g.rows() + k, j * g.cols() + l) = f.at(i, j) * g.at(k, l);
  return out;
}

CMatrix commutation_matrix(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw ShapeError("commutation_matrix: dims must be >= 1");
  // Sends e_i (x) e_j to e_j (x) e_i.
  CMatrix out(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.at(j * n + i, i * m + j) = 1.0;
  return out;
}

}  // namespace ref

namespace {
// Below this many output entries the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelThreshold = 64 * 64;
}  // namespace

CMatrix mat_compose(const CMatrix& g, const CMatrix& f) {
  if (g.cols() != f.rows())
    throw ShapeError("compose: shape mismatch (" + std::to_string(g.rows()) +
                     "x" + std::to_string(g.cols()) + ") * (" +
                     std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     ")");
  const std::size_t rows = g.rows(), inner = g.cols(), cols = f.cols();
  if (rows * cols < kParallelThreshold) return ref::mat_compose(g, f);
  CMatrix out(rows, cols);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(rows); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < inner; ++k) {
      const cplx gik = g.at(i, k);
      for (std::size_t j = 0; j < cols; ++j) out.at(i, j) += gik * f.at(k, j);
    }
  }
  return out;
}

CMatrix mat_tensor(const CMatrix& f, const CMatrix& g) {
  const std::size_t rows = f.rows() * g.rows(), cols = f.cols() * g.cols();
  if (rows * cols < kParallelThreshold) return ref::mat_tensor(f, g);
  CMatrix out(rows, cols);
#pragma omp parallel for schedule(static)
  for (long long rr = 0; rr < static_cast<long long>(rows); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    const std::size_t i = r / g.rows(), k = r % g.rows();
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const cplx fij = f.at(i, j);
      for (std::size_t l = 0; l < g.cols(); ++l)
        out.at(r, j * g.cols() + l) = fij * g.at(k, l);
    }
  }
  return out;
}

CMatrix commutation_matrix(std::size_t n, std::size_t m) {
  return ref::commutation_matrix(n, m);
}

double max_deviation(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    dev = std::max(dev, std::abs(a.entries()[i] - b.entries()[i]));
  return dev;
}

ApproxResult approx_eq(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return {false, std::numeric_limits<double>::infinity(),
            "shape mismatch: " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                "x" + std::to_string(b.cols())};
  const double dev = max_deviation(a, b);
  return {dev <= tol, dev, ""};
}

namespace {
std::string format_entry(const cplx& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}
}  // namespace

std::string format_matrix_text(const CMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += '\t';
      out += format_entry(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_json(const CMatrix& m) {
  std::ostringstream os;
  os << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"re\":[";
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    if (i) os << ',';
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", m.entries()[i].real());
    os << buf;
  }
  os << "],\"im\":[";
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    if (i) os << ',';
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", m.entries()[i].imag());
    os << buf;
  }
  os << "]}";
  return os.str();
}

CMatrix strip_global_phase(const CMatrix& m) {
  for (const cplx& z : m.entries()) {
    if (std::abs(z) > 1e-9) {
      const cplx phase = z / std::abs(z);
      CMatrix out(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.entries().size(); ++i)
        out.at(i / m.cols(), i % m.cols()) = m.entries()[i] / phase;
      return out;
    }
  }
  return m;
}

}  // namespace paramcat
