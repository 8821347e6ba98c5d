// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0
//
// The generic parameterized-morphism engine. A morphism X -> Y is a pure
// family theta |-> backend morphism; composition, tensor, identities and the
// structural morphisms all act pointwise, with the point duplicated into both
// sub-evaluations and discarded by constant families.

#ifndef PARAMCAT_PARAM_HPP_
#define PARAMCAT_PARAM_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paramcat {

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InversionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamPoint {
  std::vector<double> coords;

  std::size_t arity() const { return coords.size(); }
  bool finite() const {
    for (double c : coords)
      if (!std::isfinite(c)) return false;
    return true;
  }
};

/// The parameter object: a fixed arity plus a seeded uniform sampler over
/// [0, 2*pi)^arity. All shipped gate families are 2*pi-periodic per
/// coordinate, so this window covers the whole behavior of each family.
class ParamSpace {
 public:
  explicit ParamSpace(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }

  ParamPoint zeros() const { return {std::vector<double>(arity_, 0.0)}; }

  ParamPoint sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return sample_with(rng);
  }

  ParamPoint sample_with(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * M_PI);
    ParamPoint p;
    p.coords.reserve(arity_);
    for (std::size_t i = 0; i < arity_; ++i) p.coords.push_back(dist(rng));
    return p;
  }

  /// Deterministic sample sequence: one generator, drawn in order.
  std::vector<ParamPoint> sample_many(std::size_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<ParamPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_with(rng));
    return out;
  }

 private:
  std::size_t arity_;
};

/// A parameterized morphism over backend B: endpoints plus a pure,
/// deterministic evaluation map.
template <class B>
struct ParamMor {
  using Obj = typename B::Obj;
  using Mor = typename B::Mor;

  Obj dom;
  Obj cod;
  std::function<Mor(const ParamPoint&)> eval;
};

template <class B>
ParamMor<B> make_param(typename B::Obj dom, typename B::Obj cod,
                       std::function<typename B::Mor(const ParamPoint&)> f) {
  return ParamMor<B>{dom, cod, std::move(f)};
}

template <class B>
typename B::Mor eval_at(const ParamMor<B>& f, const ParamPoint& theta) {
  if (!theta.finite())
    throw EvaluationError("parameter point has non-finite coordinates");
  return f.eval(theta);
}

/// (g * f)(theta) = g(theta) . f(theta); the point is duplicated into both
/// factors.
template <class B>
ParamMor<B> compose(const B& bk, const ParamMor<B>& g, const ParamMor<B>& f) {
  if (!bk.obj_eq(f.cod, g.dom))
    throw CompositionError("cannot compose: codomain " + bk.obj_name(f.cod) +
                           " does not match domain " + bk.obj_name(g.dom));
  return {f.dom, g.cod, [&bk, g, f](const ParamPoint& th) {
            return bk.compose(g.eval(th), f.eval(th));
          }};
}

/// i_X: the constant family at the backend identity; the point is discarded.
template <class B>
ParamMor<B> identity(const B& bk, typename B::Obj x) {
  return {x, x,
          [&bk, x](const ParamPoint&) { return bk.identity(x); }};
}

template <class B>
ParamMor<B> tensor(const B& bk, const ParamMor<B>& f, const ParamMor<B>& g) {
  return {bk.tensor_obj(f.dom, g.dom), bk.tensor_obj(f.cod, g.cod),
          [&bk, f, g](const ParamPoint& th) {
            return bk.tensor(f.eval(th), g.eval(th));
          }};
}

/// Embeds a backend morphism as the constant family. Section of every
/// evaluation functor.
template <class B>
ParamMor<B> include(const B& bk, typename B::Obj dom, typename B::Obj cod,
                    typename B::Mor m) {
  return {dom, cod, [m = std::move(m)](const ParamPoint&) { return m; }};
}

template <class B>
ParamMor<B> associator(const B& bk, typename B::Obj x, typename B::Obj y,
                       typename B::Obj z) {
  auto xyz = bk.tensor_obj(bk.tensor_obj(x, y), z);
  auto x_yz = bk.tensor_obj(x, bk.tensor_obj(y, z));
  return include(bk, xyz, x_yz, bk.associator(x, y, z));
}

template <class B>
ParamMor<B> left_unitor(const B& bk, typename B::Obj x) {
  return include(bk, bk.tensor_obj(bk.unit(), x), x, bk.left_unitor(x));
}

template <class B>
ParamMor<B> right_unitor(const B& bk, typename B::Obj x) {
  return include(bk, bk.tensor_obj(x, bk.unit()), x, bk.right_unitor(x));
}

template <class B>
ParamMor<B> braiding(const B& bk, typename B::Obj x, typename B::Obj y) {
  return include(bk, bk.tensor_obj(x, y), bk.tensor_obj(y, x),
                 bk.braiding(x, y));
}

/// const_theta(f): the constant family agreeing with f at theta. The
/// evaluation happens once, here.
template <class B>
ParamMor<B> const_at(const ParamMor<B>& f, const ParamPoint& theta) {
  auto value = eval_at(f, theta);
  return {f.dom, f.cod,
          [value = std::move(value)](const ParamPoint&) { return value; }};
}

/// Includes a mutually inverse pair of backend morphisms. The inverse claim
/// is checked numerically up front.
template <class B>
std::pair<ParamMor<B>, ParamMor<B>> invert_included(
    const B& bk, typename B::Obj dom, typename B::Obj cod,
    const typename B::Mor& m, const typename B::Mor& m_inv, double tol) {
  const double dev1 = bk.deviation(bk.compose(m_inv, m), bk.identity(dom));
  const double dev2 = bk.deviation(bk.compose(m, m_inv), bk.identity(cod));
  const double dev = std::max(dev1, dev2);
  if (dev > tol)
    throw InversionError("morphisms are not mutually inverse (deviation " +
                         std::to_string(dev) + ")");
  return {include(bk, dom, cod, m), include(bk, cod, dom, m_inv)};
}

struct EquivVerdict {
  enum class Status { equivalent, inequivalent, dimension_mismatch };
  Status status;
  std::size_t samples_used = 0;
  double tol = 0.0;
  /// Present exactly when inequivalent: the witness point and its deviation.
  std::optional<std::pair<ParamPoint, double>> counterexample;
};

/// Sampling-based equivalence: evaluates both families at the all-zeros point
/// plus `samples` seeded points. "inequivalent" is a proof (the counterexample
/// is concrete); "equivalent" is evidence at the sampled points only.
/// Deterministic for a fixed seed regardless of scheduling: the points are
/// drawn up front and the first failure is selected by point index.
template <class B>
EquivVerdict check_equiv(const B& bk, const ParamSpace& space,
                         const ParamMor<B>& f, const ParamMor<B>& g,
                         std::size_t samples, std::uint64_t seed, double tol,
                         bool phase_invariant = false, bool parallel = true) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("tol must be > 0");
  if (!bk.obj_eq(f.dom, g.dom) || !bk.obj_eq(f.cod, g.cod))
    return {EquivVerdict::Status::dimension_mismatch, 0, tol, std::nullopt};

  std::vector<ParamPoint> points;
  points.push_back(space.zeros());
  for (auto& p : space.sample_many(samples, seed)) points.push_back(std::move(p));

  std::vector<double> devs(points.size(), 0.0);
  const long long n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < n; ++i) {
    auto a = eval_at(f, points[static_cast<std::size_t>(i)]);
    auto b = eval_at(g, points[static_cast<std::size_t>(i)]);
    devs[static_cast<std::size_t>(i)] =
        phase_invariant ? bk.phase_invariant_deviation(a, b)
                        : bk.deviation(a, b);
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (devs[i] > tol)
      return {EquivVerdict::Status::inequivalent, points.size(), tol,
              std::make_pair(points[i], devs[i])};
  return {EquivVerdict::Status::equivalent, points.size(), tol, std::nullopt};
}

}  // namespace paramcat

#endif  // PARAMCAT_PARAM_HPP_
