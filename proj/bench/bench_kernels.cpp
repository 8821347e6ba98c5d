// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference kernels against the OpenMP paths, and the
// serial law/equivalence drivers against their fanned-out versions.

#include <chrono>
#include <cstdio>
#include <random>

#include "paramcat/gates.hpp"
#include "paramcat/laws.hpp"
#include "paramcat/matrix_backend.hpp"

using namespace paramcat;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = {dist(rng), dist(rng)};
  return m;
}

template <class F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(
        best, std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count());
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(1);

  {
    const std::size_t n = 256;
    auto a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    double serial = time_best_of(3, [&] { (void)ref::mat_compose(a, b); });
    double parallel = time_best_of(3, [&] { (void)mat_compose(a, b); });
    std::printf("mat_compose %zux%zu   serial %.4fs  parallel %.4fs  (%.2fx)\n",
                n, n, serial, parallel, serial / parallel);
    if (max_deviation(mat_compose(a, b), ref::mat_compose(a, b)) > 1e-10) {
      std::printf("MISMATCH between kernels\n");
      return 1;
    }
  }

  {
    auto a = random_matrix(rng, 24, 24), b = random_matrix(rng, 24, 24);
    double serial = time_best_of(3, [&] { (void)ref::mat_tensor(a, b); });
    double parallel = time_best_of(3, [&] { (void)mat_tensor(a, b); });
    std::printf("mat_tensor 24x24      serial %.4fs  parallel %.4fs  (%.2fx)\n",
                serial, parallel, serial / parallel);
  }

  {
    LawConfig cfg;
    cfg.trials = 200;
    cfg.parallel = false;
    double serial = time_best_of(1, [&] { (void)check_laws(cfg); });
    cfg.parallel = true;
    double parallel = time_best_of(1, [&] { (void)check_laws(cfg); });
    std::printf("law suite (200 trials) serial %.4fs  parallel %.4fs  (%.2fx)\n",
                serial, parallel, serial / parallel);
  }

  {
    MatrixBackend bk;
    ParamSpace space(2);
    auto f = gate(bk, "rx", AffineExpr::param(0));
    auto g = gate(bk, "rz", AffineExpr::param(1));
    auto big = tensor(bk, tensor(bk, f, g), tensor(bk, g, f));
    double serial = time_best_of(1, [&] {
      (void)check_equiv(bk, space, big, big, 20000, 0, 1e-10, false, false);
    });
    double parallel = time_best_of(1, [&] {
      (void)check_equiv(bk, space, big, big, 20000, 0, 1e-10, false, true);
    });
    std::printf(
        "check_equiv (20000 samples) serial %.4fs  parallel %.4fs  (%.2fx)\n",
        serial, parallel, serial / parallel);
  }

  return 0;
}
