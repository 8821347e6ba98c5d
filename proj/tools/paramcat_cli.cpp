// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: circuit evaluation, sampling-based equivalence
// checking, the law suite, and lattice entailment queries.
//
// Exit codes: 0 ok / equivalent, 1 parse error, 2 dimension error,
// 3 arity error, 4 inequivalent, 5 law failure, 6 lattice validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paramcat/circuit.hpp"
#include "paramcat/lattice.hpp"
#include "paramcat/laws.hpp"
#include "paramcat/matrix_backend.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDimension = 2;
constexpr int kExitArity = 3;
constexpr int kExitInequivalent = 4;
constexpr int kExitLawFailure = 5;
constexpr int kExitLatticeInvalid = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<double> parse_theta(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size())
      throw std::invalid_argument("bad theta entry: " + item);
  }
  return out;
}

std::string format_point(const paramcat::ParamPoint& p) {
  std::string out = "(";
  char buf[40];
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof(buf), "%.17g", p.coords[i]);
    out += buf;
  }
  return out + ")";
}

int run_eval(const std::string& file, const std::string& theta_str,
             const std::string& format) {
  using namespace paramcat;
  MatrixBackend bk;
  Circuit circuit;
  try {
    circuit = parse_circuit(read_file(file));
  } catch (const CircuitError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  std::vector<double> theta;
  try {
    theta = parse_theta(theta_str);
  } catch (const std::exception& e) {
    std::cerr << "bad --theta: " << e.what() << "\n";
    return kExitArity;
  }
  if (theta.size() != circuit.params) {
    std::cerr << "arity error: circuit declares params "
              << circuit.params << " but theta has " << theta.size()
              << " entries\n";
    return kExitArity;
  }
  try {
    auto mor = elaborate(bk, circuit);
    auto m = eval_at(mor, ParamPoint{theta});
    std::cout << (format == "json" ? format_matrix_json(m) + "\n"
                                   : format_matrix_text(m));
  } catch (const CircuitError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  }
  return kExitOk;
}

int run_check(const std::string& file_a, const std::string& file_b,
              std::size_t samples, std::uint64_t seed, double tol,
              bool phase_invariant, const std::string& format) {
  using namespace paramcat;
  MatrixBackend bk;
  Circuit ca, cb;
  try {
    ca = parse_circuit(read_file(file_a));
    cb = parse_circuit(read_file(file_b));
  } catch (const CircuitError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (ca.params != cb.params) {
    std::cerr << "arity error: params headers differ (" << ca.params << " vs "
              << cb.params << ")\n";
    return kExitArity;
  }
  EquivVerdict verdict;
  try {
    auto f = elaborate(bk, ca);
    auto g = elaborate(bk, cb);
    verdict = check_equiv(bk, ParamSpace(ca.params), f, g, samples, seed, tol,
                          phase_invariant);
  } catch (const CircuitError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  }

  char buf[48];
  if (format == "json") {
    std::ostringstream os;
    os << "{\"status\":\"";
    switch (verdict.status) {
      case EquivVerdict::Status::equivalent: os << "equivalent"; break;
      case EquivVerdict::Status::inequivalent: os << "inequivalent"; break;
      case EquivVerdict::Status::dimension_mismatch:
        os << "dimension-mismatch";
        break;
    }
    os << "\",\"samples\":" << verdict.samples_used << ",\"tol\":";
    std::snprintf(buf, sizeof(buf), "%.17g", verdict.tol);
    os << buf;
    if (verdict.counterexample) {
      os << ",\"counterexample\":{\"theta\":[";
      const auto& [pt, dev] = *verdict.counterexample;
      for (std::size_t i = 0; i < pt.coords.size(); ++i) {
        if (i) os << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", pt.coords[i]);
        os << buf;
      }
      os << "],\"deviation\":";
      std::snprintf(buf, sizeof(buf), "%.17g", dev);
      os << buf << "}";
    }
    os << "}";
    std::cout << os.str() << "\n";
  } else {
    switch (verdict.status) {
      case EquivVerdict::Status::equivalent:
        std::cout << "equivalent (" << verdict.samples_used << " samples, tol "
                  << verdict.tol << ")\n";
        break;
      case EquivVerdict::Status::inequivalent: {
        const auto& [pt, dev] = *verdict.counterexample;
        std::snprintf(buf, sizeof(buf), "%.6e", dev);
        std::cout << "inequivalent at theta=" << format_point(pt)
                  << " deviation=" << buf << "\n";
        break;
      }
      case EquivVerdict::Status::dimension_mismatch:
        std::cout << "dimension-mismatch\n";
        break;
    }
  }
  switch (verdict.status) {
    case EquivVerdict::Status::equivalent: return kExitOk;
    case EquivVerdict::Status::inequivalent: return kExitInequivalent;
    case EquivVerdict::Status::dimension_mismatch: return kExitDimension;
  }
  return kExitOk;
}

int run_laws(std::size_t trials, std::uint64_t seed, double tol,
             std::size_t max_dim, bool corrupt_tensor, bool serial,
             const std::string& format) {
  paramcat::LawConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.tol = tol;
  cfg.max_dim = max_dim;
  cfg.corrupt_tensor = corrupt_tensor;
  cfg.parallel = !serial;
  auto report = paramcat::check_laws(cfg);
  std::cout << (format == "json" ? report.render_json() + "\n"
                                 : report.render_text());
  return report.all_pass() ? kExitOk : kExitLawFailure;
}

int run_lattice(const std::string& file, const std::string& level,
                const std::string& format) {
  using namespace paramcat;
  LatticeSpec spec;
  try {
    spec = parse_lattice_spec(read_file(file));
  } catch (const LatticeError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  auto violations = spec.lattice.validate();
  auto gv = validate_enriched_graph(spec.lattice, spec.graph);
  violations.insert(violations.end(), gv.begin(), gv.end());
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    return kExitLatticeInvalid;
  }
  auto p = spec.lattice.index_of(level);
  if (!p) {
    std::cerr << "violation: unknown lattice element '" << level << "'\n";
    return kExitLatticeInvalid;
  }
  auto edges = param_graph(spec.lattice, spec.graph, *p);
  if (format == "json") {
    std::ostringstream os;
    os << "{\"level\":\"" << level << "\",\"edges\":[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) os << ',';
      os << "[\"" << edges[i].first << "\",\"" << edges[i].second << "\"]";
    }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << format_edges(edges);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parameterized circuit semantics toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, theta, format = "text", level = "top";
  std::size_t samples = 100, trials = 25, max_dim = 4;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  bool phase_invariant = false, corrupt_tensor = false, serial = false;

  auto* eval = app.add_subcommand("eval", "evaluate a circuit at a point");
  eval->add_option("file", file, "circuit file (.pqc)")->required();
  eval->add_option("--theta", theta, "comma-separated radians");
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "sampling-based equivalence");
  check->add_option("fileA", file, "first circuit")->required();
  check->add_option("fileB", file_b, "second circuit")->required();
  check->add_option("--samples", samples)->check(CLI::PositiveNumber);
  check->add_option("--seed", seed);
  check->add_option("--tol", tol)->check(CLI::PositiveNumber);
  check->add_flag("--phase-invariant", phase_invariant,
                  "compare up to global phase");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* laws = app.add_subcommand("laws", "run the law suite");
  laws->add_option("--trials", trials)->check(CLI::PositiveNumber);
  laws->add_option("--seed", seed);
  laws->add_option("--tol", tol)->check(CLI::PositiveNumber);
  laws->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);
  laws->add_flag("--corrupt-tensor", corrupt_tensor)->group("");  // test hook
  laws->add_flag("--serial", serial, "disable trial fan-out");
  laws->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lattice = app.add_subcommand("lattice", "entailment graph query");
  lattice->add_option("file", file, "lattice/graph spec")->required();
  lattice->add_option("--level", level, "lattice element to entail at");
  lattice->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(file, theta, format);
    if (check->parsed())
      return run_check(file, file_b, samples, seed, tol, phase_invariant,
                       format);
    if (laws->parsed())
      return run_laws(trials, seed, tol, max_dim, corrupt_tensor, serial,
                      format);
    if (lattice->parsed()) return run_lattice(file, level, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
