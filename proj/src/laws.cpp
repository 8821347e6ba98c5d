// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/laws.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "paramcat/gates.hpp"
#include "paramcat/matrix_backend.hpp"

namespace paramcat {

namespace {

using Mor = ParamMor<MatrixBackend>;

struct TrialCtx {
  const MatrixBackend& eng;  // engine under test (possibly corrupted)
  ParamSpace space;
  std::size_t max_dim;
  double tol;
};

std::size_t rand_dim(std::mt19937_64& rng, std::size_t max_dim) {
  return std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
}

CMatrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = {dist(rng), dist(rng)};
  return m;
}

AffineExpr rand_affine(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_real_distribution<double> cdist(-M_PI, M_PI);
  std::uniform_real_distribution<double> kdist(-2.0, 2.0);
  AffineExpr e(cdist(rng));
  for (std::size_t i = 0; i < arity; ++i)
    if (rng() % 2 == 0) e.add_term(i, kdist(rng));
  return e;
}

/// A generic parameter-dependent family cod x dom:
/// theta |-> C0 + sin(a(theta)) C1 + cos(a(theta)) C2.
Mor rand_family(std::mt19937_64& rng, const TrialCtx& ctx, std::size_t dom,
                std::size_t cod) {
  CMatrix c0 = rand_matrix(rng, cod, dom);
  CMatrix c1 = rand_matrix(rng, cod, dom);
  CMatrix c2 = rand_matrix(rng, cod, dom);
  AffineExpr a = rand_affine(rng, ctx.space.arity());
  return make_param<MatrixBackend>(
      dom, cod, [c0, c1, c2, a](const ParamPoint& th) {
        const double s = std::sin(a.eval(th.coords));
        const double c = std::cos(a.eval(th.coords));
        CMatrix out = c0;
        for (std::size_t i = 0; i < out.rows(); ++i)
          for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) += s * c1.at(i, j) + c * c2.at(i, j);
        return out;
      });
}

using TrialFn =
    std::function<double(const TrialCtx&, std::mt19937_64&, ParamPoint&)>;

struct Law {
  std::string name;
  TrialFn trial;
};

std::vector<Law> build_laws() {
  std::vector<Law> laws;
  auto add = [&laws](std::string name, TrialFn fn) {
    laws.push_back({std::move(name), std::move(fn)});
  };

  add("star-associativity",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t d0 = rand_dim(rng, ctx.max_dim),
                    d1 = rand_dim(rng, ctx.max_dim),
                    d2 = rand_dim(rng, ctx.max_dim),
                    d3 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, d0, d1);
        Mor g = rand_family(rng, ctx, d1, d2);
        Mor h = rand_family(rng, ctx, d2, d3);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(compose(bk, compose(bk, h, g), f), th);
        auto rhs = eval_at(compose(bk, h, compose(bk, g, f)), th);
        return max_deviation(lhs, rhs);
      });

  add("star-unitality",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t d0 = rand_dim(rng, ctx.max_dim),
                    d1 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, d0, d1);
        th = ctx.space.sample_with(rng);
        auto fx = eval_at(f, th);
        double dev =
            max_deviation(eval_at(compose(bk, identity(bk, d1), f), th), fx);
        return std::max(
            dev,
            max_deviation(eval_at(compose(bk, f, identity(bk, d0)), th), fx));
      });

  add("box-identities",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t n = rand_dim(rng, ctx.max_dim),
                    m = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(tensor(bk, identity(bk, n), identity(bk, m)), th);
        return max_deviation(lhs, CMatrix::identity(n * m));
      });

  // Expected side computed with the serial reference kernels. A corrupted
  // tensor cancels out of any engine-vs-engine comparison, so this is the
  // check that catches it.
  add("box-interchange",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim),
                    c = rand_dim(rng, ctx.max_dim);
        std::size_t a2 = rand_dim(rng, ctx.max_dim),
                    b2 = rand_dim(rng, ctx.max_dim),
                    c2 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, a, b), g = rand_family(rng, ctx, b, c);
        Mor f2 = rand_family(rng, ctx, a2, b2),
            g2 = rand_family(rng, ctx, b2, c2);
        th = ctx.space.sample_with(rng);
        auto expected = ref::mat_tensor(
            ref::mat_compose(eval_at(g, th), eval_at(f, th)),
            ref::mat_compose(eval_at(g2, th), eval_at(f2, th)));
        auto lhs =
            eval_at(compose(bk, tensor(bk, g, g2), tensor(bk, f, f2)), th);
        auto rhs =
            eval_at(tensor(bk, compose(bk, g, f), compose(bk, g2, f2)), th);
        return std::max(max_deviation(lhs, expected),
                        max_deviation(rhs, expected));
      });

  add("associator-naturality",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim),
                    z = rand_dim(rng, ctx.max_dim);
        std::size_t x2 = rand_dim(rng, ctx.max_dim),
                    y2 = rand_dim(rng, ctx.max_dim),
                    z2 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, x, x2), g = rand_family(rng, ctx, y, y2),
            h = rand_family(rng, ctx, z, z2);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(compose(bk, associator(bk, x2, y2, z2),
                                   tensor(bk, tensor(bk, f, g), h)),
                           th);
        auto rhs = eval_at(compose(bk, tensor(bk, f, tensor(bk, g, h)),
                                   associator(bk, x, y, z)),
                           th);
        return max_deviation(lhs, rhs);
      });

  add("unitor-naturality",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, x, y);
        th = ctx.space.sample_with(rng);
        auto l_lhs =
            eval_at(compose(bk, left_unitor(bk, y),
                            tensor(bk, identity(bk, bk.unit()), f)),
                    th);
        auto l_rhs = eval_at(compose(bk, f, left_unitor(bk, x)), th);
        double dev = max_deviation(l_lhs, l_rhs);
        auto r_lhs =
            eval_at(compose(bk, right_unitor(bk, y),
                            tensor(bk, f, identity(bk, bk.unit()))),
                    th);
        auto r_rhs = eval_at(compose(bk, f, right_unitor(bk, x)), th);
        return std::max(dev, max_deviation(r_lhs, r_rhs));
      });

  add("braiding-naturality",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim);
        std::size_t x2 = rand_dim(rng, ctx.max_dim),
                    y2 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, x, x2), g = rand_family(rng, ctx, y, y2);
        th = ctx.space.sample_with(rng);
        auto lhs =
            eval_at(compose(bk, braiding(bk, x2, y2), tensor(bk, f, g)), th);
        auto rhs =
            eval_at(compose(bk, tensor(bk, g, f), braiding(bk, x, y)), th);
        return max_deviation(lhs, rhs);
      });

  add("pentagon",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t w = rand_dim(rng, ctx.max_dim),
                    x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim),
                    z = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(compose(bk, associator(bk, w, x, y * z),
                                   associator(bk, w * x, y, z)),
                           th);
        auto rhs = eval_at(
            compose(bk,
                    compose(bk,
                            tensor(bk, identity(bk, w),
                                   associator(bk, x, y, z)),
                            associator(bk, w, x * y, z)),
                    tensor(bk, associator(bk, w, x, y), identity(bk, z))),
            th);
        return max_deviation(lhs, rhs);
      });

  add("triangle",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        auto lhs =
            eval_at(compose(bk,
                            tensor(bk, identity(bk, x), left_unitor(bk, y)),
                            associator(bk, x, 1, y)),
                    th);
        auto rhs =
            eval_at(tensor(bk, right_unitor(bk, x), identity(bk, y)), th);
        return max_deviation(lhs, rhs);
      });

  add("hexagon-forward",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim),
                    z = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(
            compose(bk,
                    compose(bk, associator(bk, y, z, x),
                            braiding(bk, x, y * z)),
                    associator(bk, x, y, z)),
            th);
        auto rhs = eval_at(
            compose(bk,
                    compose(bk,
                            tensor(bk, identity(bk, y), braiding(bk, x, z)),
                            associator(bk, y, x, z)),
                    tensor(bk, braiding(bk, x, y), identity(bk, z))),
            th);
        return max_deviation(lhs, rhs);
      });

  add("hexagon-reverse",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim),
                    z = rand_dim(rng, ctx.max_dim);
        // Strict backend: the inverse associator is again an included
        // identity, spelled out so the composite endpoints line up.
        auto inv_assoc = [&bk](std::size_t a, std::size_t b, std::size_t c) {
          return include(bk, a * (b * c), (a * b) * c,
                         CMatrix::identity(a * b * c));
        };
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(
            compose(bk,
                    compose(bk, inv_assoc(z, x, y), braiding(bk, x * y, z)),
                    inv_assoc(x, y, z)),
            th);
        auto rhs = eval_at(
            compose(bk,
                    compose(bk,
                            tensor(bk, braiding(bk, x, z), identity(bk, y)),
                            inv_assoc(x, z, y)),
                    tensor(bk, identity(bk, x), braiding(bk, y, z))),
            th);
        return max_deviation(lhs, rhs);
      });

  add("braiding-self-inverse",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t x = rand_dim(rng, ctx.max_dim),
                    y = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        auto lhs =
            eval_at(compose(bk, braiding(bk, y, x), braiding(bk, x, y)), th);
        return max_deviation(lhs, CMatrix::identity(x * y));
      });

  add("ev-functorial",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t d0 = rand_dim(rng, ctx.max_dim),
                    d1 = rand_dim(rng, ctx.max_dim),
                    d2 = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, d0, d1);
        Mor g = rand_family(rng, ctx, d1, d2);
        th = ctx.space.sample_with(rng);
        double dev = max_deviation(
            eval_at(compose(bk, g, f), th),
            ref::mat_compose(eval_at(g, th), eval_at(f, th)));
        return std::max(dev, max_deviation(eval_at(identity(bk, d0), th),
                                           CMatrix::identity(d0)));
      });

  add("ev-strict-monoidal",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim),
                    c = rand_dim(rng, ctx.max_dim),
                    d = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, a, b), g = rand_family(rng, ctx, c, d);
        th = ctx.space.sample_with(rng);
        double dev = max_deviation(
            eval_at(tensor(bk, f, g), th),
            ref::mat_tensor(eval_at(f, th), eval_at(g, th)));
        dev = std::max(dev, max_deviation(eval_at(associator(bk, a, b, c), th),
                                          CMatrix::identity(a * b * c)));
        dev = std::max(dev, max_deviation(eval_at(left_unitor(bk, a), th),
                                          CMatrix::identity(a)));
        return std::max(dev, max_deviation(eval_at(right_unitor(bk, a), th),
                                           CMatrix::identity(a)));
      });

  add("ev-preserves-braiding",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t n = rand_dim(rng, ctx.max_dim),
                    m = rand_dim(rng, ctx.max_dim);
        th = ctx.space.sample_with(rng);
        return max_deviation(eval_at(braiding(bk, n, m), th),
                             ref::commutation_matrix(n, m));
      });

  add("inclusion-functorial",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t d0 = rand_dim(rng, ctx.max_dim),
                    d1 = rand_dim(rng, ctx.max_dim),
                    d2 = rand_dim(rng, ctx.max_dim);
        CMatrix mf = rand_matrix(rng, d1, d0), mg = rand_matrix(rng, d2, d1);
        th = ctx.space.sample_with(rng);
        auto lhs =
            eval_at(include(bk, d0, d2, ref::mat_compose(mg, mf)), th);
        auto rhs = eval_at(
            compose(bk, include(bk, d1, d2, mg), include(bk, d0, d1, mf)), th);
        return max_deviation(lhs, rhs);
      });

  add("inclusion-strict-monoidal",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim),
                    c = rand_dim(rng, ctx.max_dim),
                    d = rand_dim(rng, ctx.max_dim);
        CMatrix mf = rand_matrix(rng, b, a), mg = rand_matrix(rng, d, c);
        th = ctx.space.sample_with(rng);
        auto lhs = eval_at(
            include(bk, a * c, b * d, ref::mat_tensor(mf, mg)), th);
        auto rhs = eval_at(
            tensor(bk, include(bk, a, b, mf), include(bk, c, d, mg)), th);
        return max_deviation(lhs, rhs);
      });

  add("inclusion-retraction",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim);
        CMatrix m = rand_matrix(rng, b, a);
        th = ctx.space.sample_with(rng);
        return max_deviation(eval_at(include(bk, a, b, m), th), m);
      });

  add("inclusion-faithful",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim);
        CMatrix m1 = rand_matrix(rng, b, a), m2 = rand_matrix(rng, b, a);
        th = ctx.space.sample_with(rng);
        // Equality of the constant families at any one point must coincide
        // with equality of the underlying morphisms.
        const double fam_dev = max_deviation(
            eval_at(include(bk, a, b, m1), th), eval_at(include(bk, a, b, m2), th));
        return std::abs(fam_dev - max_deviation(m1, m2));
      });

  add("const-coherence",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t a = rand_dim(rng, ctx.max_dim),
                    b = rand_dim(rng, ctx.max_dim);
        Mor f = rand_family(rng, ctx, a, b);
        th = ctx.space.sample_with(rng);
        ParamPoint kappa = ctx.space.sample_with(rng);
        double dev = max_deviation(eval_at(const_at(f, th), kappa),
                                   eval_at(f, th));
        // const is idempotent.
        return std::max(
            dev, max_deviation(eval_at(const_at(const_at(f, th), kappa), th),
                               eval_at(f, th)));
      });

  add("included-inverses",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::uniform_real_distribution<double> dist(0.0, 2.0 * M_PI);
        const double a = dist(rng);
        auto [m, m_inv] =
            invert_included(bk, 2, 2, rz_matrix(a), rz_matrix(-a), ctx.tol);
        th = ctx.space.sample_with(rng);
        double dev = max_deviation(eval_at(compose(bk, m_inv, m), th),
                                   CMatrix::identity(2));
        return std::max(dev, max_deviation(eval_at(compose(bk, m, m_inv), th),
                                           CMatrix::identity(2)));
      });

  add("zero-arity-reduction",
      [](const TrialCtx& ctx, std::mt19937_64& rng, ParamPoint& th) {
        const auto& bk = ctx.eng;
        std::size_t d0 = rand_dim(rng, ctx.max_dim),
                    d1 = rand_dim(rng, ctx.max_dim),
                    d2 = rand_dim(rng, ctx.max_dim);
        CMatrix mf = rand_matrix(rng, d1, d0), mg = rand_matrix(rng, d2, d1);
        th = ParamPoint{};
        Mor jf = include(bk, d0, d1, mf), jg = include(bk, d1, d2, mg);
        double dev = max_deviation(eval_at(compose(bk, jg, jf), th),
                                   bk.compose(mg, mf));
        dev = std::max(dev, max_deviation(eval_at(tensor(bk, jf, jg), th),
                                          bk.tensor(mf, mg)));
        return std::max(dev, max_deviation(eval_at(identity(bk, d0), th),
                                           bk.identity(d0)));
      });

  return laws;
}

}  // namespace

LawReport check_laws(const LawConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  MatrixBackend eng;
  eng.swap_tensor_args = cfg.corrupt_tensor;
  TrialCtx ctx{eng, ParamSpace(cfg.arity), cfg.max_dim, cfg.tol};

  const std::vector<Law> laws = build_laws();
  const std::size_t n_laws = laws.size(), trials = cfg.trials;

  std::vector<double> devs(n_laws * trials, 0.0);
  std::vector<ParamPoint> points(n_laws * trials);

  // Each trial seeds its own generator from (seed, law, trial), so results
  // do not depend on scheduling.
  const long long total = static_cast<long long>(n_laws * trials);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (long long idx = 0; idx < total; ++idx) {
    const std::size_t law = static_cast<std::size_t>(idx) / trials;
    const std::size_t trial = static_cast<std::size_t>(idx) % trials;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(law),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    try {
      devs[idx] = laws[law].trial(ctx, rng, points[idx]);
    } catch (const std::exception&) {
      // A construction that cannot even be built (e.g. inverse certification
      // at an unreachable tolerance) counts as a failing trial. Exceptions
      // must not escape the parallel region in any case.
      devs[idx] = std::numeric_limits<double>::infinity();
    }
  }

  LawReport report;
  report.tol = cfg.tol;
  for (std::size_t law = 0; law < n_laws; ++law) {
    LawResult r;
    r.name = laws[law].name;
    r.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
      const double d = devs[law * trials + t];
      r.max_dev = std::max(r.max_dev, d);
      if (d > cfg.tol && !r.counterexample)
        r.counterexample = points[law * trials + t];
    }
    r.pass = !r.counterexample.has_value();
    report.laws.push_back(std::move(r));
  }
  return report;
}

namespace {
std::string format_point(const ParamPoint& p) {
  std::string out = "(";
  char buf[40];
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof(buf), "%.17g", p.coords[i]);
    out += buf;
  }
  return out + ")";
}
}  // namespace

std::string LawReport::render_text() const {
  std::ostringstream os;
  for (const auto& l : laws) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", l.max_dev);
    os << (l.pass ? "PASS" : "FAIL") << "  " << l.name << "  trials=" << l.trials
       << "  max_dev=" << buf;
    if (l.counterexample)
      os << "  counterexample=" << format_point(*l.counterexample);
    os << "\n";
  }
  os << (all_pass() ? "all laws pass" : "LAW FAILURES PRESENT") << "\n";
  return os.str();
}

std::string LawReport::render_json() const {
  std::ostringstream os;
  char buf[48];
  os << "{\"tol\":";
  std::snprintf(buf, sizeof(buf), "%.17g", tol);
  os << buf << ",\"laws\":[";
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const auto& l = laws[i];
    if (i) os << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", l.max_dev);
    os << "{\"name\":\"" << l.name << "\",\"trials\":" << l.trials
       << ",\"max_dev\":" << buf << ",\"pass\":" << (l.pass ? "true" : "false");
    if (l.counterexample) {
      os << ",\"counterexample\":[";
      for (std::size_t j = 0; j < l.counterexample->coords.size(); ++j) {
        if (j) os << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", l.counterexample->coords[j]);
        os << buf;
      }
      os << "]";
    }
    os << "}";
  }
  os << "],\"all_pass\":" << (all_pass() ? "true" : "false") << "}";
  return os.str();
}

}  // namespace paramcat
