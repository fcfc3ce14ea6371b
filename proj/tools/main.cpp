// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpstailor/json_io.hpp"
#include "tpstailor/tpstailor.hpp"

using namespace tpstailor;
namespace io = tpstailor::io;

namespace {

struct CommonOpts {
  std::string input_path;
  std::string output_path; // empty: stdout
  double tol = kDefaultTol;
  bool pretty = false;
};

void add_common_output(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.output_path, "Output file (default: stdout)");
  cmd->add_option("--tol", opts.tol, "Numerical tolerance")
      ->default_val(kDefaultTol);
  cmd->add_flag("--pretty", opts.pretty, "Indented output");
}

void add_common_input(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--in", opts.input_path, "Input JSON document")->required();
  add_common_output(cmd, opts);
}

io::Json load_input(const CommonOpts& opts) {
  std::ifstream in(opts.input_path, std::ios::binary);
  if (!in) {
    throw io::IoError("io", "", "cannot open input file: " + opts.input_path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return io::parse_document(buffer.str());
}

void emit_result(const CommonOpts& opts, const io::Json& doc) {
  const std::string text = io::dump_document(doc, opts.pretty) + "\n";
  if (opts.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output_path, std::ios::binary);
  if (!out) {
    throw io::IoError("io", "", "cannot open output file: " + opts.output_path);
  }
  out << text;
}

void emit_error(const std::string& code, const std::string& path,
                const std::string& message) {
  io::Json err{{"error",
                io::Json{{"code", code}, {"path", path}, {"message", message}}}};
  std::cerr << io::dump_document(err) << "\n";
}

std::vector<Matrix> matrices_from_field(const io::Json& doc,
                                        const std::string& key, Index d,
                                        const std::string& path) {
  const io::Json& list = io::require_field(doc, key, path);
  const std::string list_path = path + "/" + key;
  if (!list.is_array() || list.empty()) {
    throw io::IoError("schema", list_path,
                      "expected a non-empty array of matrices at " + list_path);
  }
  std::vector<Matrix> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string entry_path = list_path + "/" + std::to_string(i);
    Matrix m = io::matrix_from_json(list[i], entry_path);
    if (m.rows() != d || m.cols() != d) {
      throw io::IoError("dimension_mismatch", entry_path,
                        "expected a " + std::to_string(d) + "x" +
                            std::to_string(d) + " matrix at " + entry_path);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Index> factors_from_field(const io::Json& doc,
                                      std::size_t min_count) {
  const io::Json& factors = io::require_field(doc, "factors", "");
  if (!factors.is_array() || factors.size() < min_count) {
    throw io::IoError("schema", "/factors",
                      "expected at least " + std::to_string(min_count) +
                          " factors at /factors");
  }
  std::vector<Index> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out.push_back(io::require_positive_int(factors[i],
                                           "/factors/" + std::to_string(i)));
  }
  return out;
}

io::Json real_array(const RealVector& values) {
  io::Json out = io::Json::array();
  for (Index i = 0; i < values.size(); ++i) {
    out.push_back(values(i));
  }
  return out;
}

io::Json complex_array(const Vector& values) {
  io::Json out = io::Json::array();
  for (Index i = 0; i < values.size(); ++i) {
    out.push_back(io::complex_to_json(values[i]));
  }
  return out;
}

int run_spin(const CommonOpts& opts, Index dim) {
  if (dim < 2) {
    throw io::IoError("schema", "/dim", "spin dimension must be at least 2");
  }
  const SpinRep rep = spin_matrices(dim);
  io::Json result{{"kind", "spin-result"},
                  {"version", 1},
                  {"dim", rep.dim},
                  {"two_s", rep.two_s},
                  {"s_x", io::matrix_to_json(rep.s_x)},
                  {"s_y", io::matrix_to_json(rep.s_y)},
                  {"s_z", io::matrix_to_json(rep.s_z)},
                  {"s_plus", io::matrix_to_json(rep.s_plus)},
                  {"s_minus", io::matrix_to_json(rep.s_minus)}};
  emit_result(opts, result);
  return 0;
}

int run_closure(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "closure", "");
  const Index d = io::require_positive_int(io::require_field(doc, "dim", ""), "/dim");
  const auto generators = matrices_from_field(doc, "generators", d, "");
  const AlgebraBasis algebra = generated_algebra(generators, d, opts.tol);
  io::Json basis = io::Json::array();
  for (const Matrix& b : algebra.basis) {
    basis.push_back(io::matrix_to_json(b));
  }
  emit_result(opts, io::Json{{"kind", "closure-result"},
                             {"version", 1},
                             {"dim", d},
                             {"dimension", algebra.size()},
                             {"basis", std::move(basis)}});
  return 0;
}

int run_commutant(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "commutant", "");
  const Index d = io::require_positive_int(io::require_field(doc, "dim", ""), "/dim");
  const auto generators = matrices_from_field(doc, "generators", d, "");
  const AlgebraBasis algebra = generated_algebra(generators, d, opts.tol);
  const AlgebraBasis prime = commutant(algebra);
  const BicommutantDims dims = double_commutant_check(algebra);
  io::Json basis = io::Json::array();
  for (const Matrix& b : prime.basis) {
    basis.push_back(io::matrix_to_json(b));
  }
  emit_result(opts, io::Json{{"kind", "commutant-result"},
                             {"version", 1},
                             {"dim", d},
                             {"algebra_dim", dims.dim_algebra},
                             {"commutant_dim", dims.dim_commutant},
                             {"bicommutant_dim", dims.dim_bicommutant},
                             {"basis", std::move(basis)}});
  return 0;
}

int run_schmidt(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "schmidt", "");
  const Vector psi = io::state_from_json(io::require_field(doc, "state", ""), "/state");
  const auto factors = factors_from_field(doc, 2);
  if (factors.size() != 2) {
    throw io::IoError("schema", "/factors", "schmidt expects exactly two factors");
  }
  if (factors[0] * factors[1] != psi.size()) {
    throw io::IoError("dimension_mismatch", "/factors",
                      "product of factors does not match the state dimension");
  }
  const SchmidtData data = schmidt_decompose(psi, factors[0], factors[1]);
  io::Json result{{"kind", "schmidt-result"},
                  {"version", 1},
                  {"factors", io::Json::array({factors[0], factors[1]})},
                  {"coefficients", real_array(data.coefficients)},
                  {"left_basis", io::matrix_to_json(data.left_basis)},
                  {"right_basis", io::matrix_to_json(data.right_basis)}};
  if (std::abs(data.coefficients.squaredNorm() - 1.0) <= opts.tol) {
    result["entropy"] = entanglement_entropy(data, opts.tol);
  } else {
    result["entropy"] = nullptr;
  }
  emit_result(opts, result);
  return 0;
}

io::Json generator_triple(const std::array<Matrix, 3>& triple) {
  return io::Json::array({io::matrix_to_json(triple[0]),
                          io::matrix_to_json(triple[1]),
                          io::matrix_to_json(triple[2])});
}

int run_tailor(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "tailor", "");
  const Vector psi = io::state_from_json(io::require_field(doc, "state", ""), "/state");
  const auto factors = factors_from_field(doc, 2);
  if (factors.size() != 2) {
    throw io::IoError("schema", "/factors", "tailor expects exactly two factors");
  }
  const Index k = factors[0];
  const Index l = factors[1];
  if (k * l != psi.size()) {
    throw io::IoError("dimension_mismatch", "/factors",
                      "product of factors does not match the state dimension");
  }
  const io::Json& lambdas_json = io::require_field(doc, "lambdas", "");
  if (!lambdas_json.is_array() ||
      static_cast<Index>(lambdas_json.size()) != std::min(k, l)) {
    throw io::IoError("schema", "/lambdas",
                      "expected " + std::to_string(std::min(k, l)) +
                          " Schmidt coefficients at /lambdas");
  }
  std::vector<Complex> lambdas;
  double lambda_sq = 0.0;
  for (std::size_t i = 0; i < lambdas_json.size(); ++i) {
    lambdas.push_back(io::complex_from_json(lambdas_json[i],
                                            "/lambdas/" + std::to_string(i)));
    lambda_sq += std::norm(lambdas.back());
  }
  if (std::abs(psi.squaredNorm() - lambda_sq) >= opts.tol) {
    throw io::IoError("norm_mismatch", "/lambdas",
                      "sum |lambda|^2 does not match the squared state norm");
  }

  const TailoredTPS tps = tailor_bipartite(psi, k, l, lambdas, opts.tol);
  const SchmidtData data = schmidt_decompose(tps.u.adjoint() * psi, k, l);
  emit_result(
      opts,
      io::Json{{"kind", "tailor-result"},
               {"version", 1},
               {"u", io::matrix_to_json(tps.u)},
               {"generators",
                io::Json{{"A", generator_triple(tps.generator_sets[0])},
                         {"B", generator_triple(tps.generator_sets[1])}}},
               {"schmidt_coefficients", real_array(data.coefficients)},
               {"report", io::report_to_json(tps.report)}});
  return 0;
}

int run_tailor_multi(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "tailor-multi", "");
  const Vector psi = io::state_from_json(io::require_field(doc, "state", ""), "/state");
  const auto factor_dims = factors_from_field(doc, 2);
  for (std::size_t i = 0; i < factor_dims.size(); ++i) {
    if (factor_dims[i] < 2) {
      throw io::IoError("schema", "/factors/" + std::to_string(i),
                        "factors must be at least 2");
    }
  }
  const Factorization factorization(factor_dims);
  if (factorization.total != psi.size()) {
    throw io::IoError("dimension_mismatch", "/factors",
                      "product of factors does not match the state dimension");
  }
  const io::Json& targets = io::require_field(doc, "targets", "");
  if (!targets.is_array() ||
      static_cast<Index>(targets.size()) != factorization.total) {
    throw io::IoError("schema", "/targets",
                      "expected " + std::to_string(factorization.total) +
                          " coefficients at /targets (flat, first factor major)");
  }
  Vector target(factorization.total);
  for (Index i = 0; i < factorization.total; ++i) {
    target[i] = io::complex_from_json(targets[static_cast<std::size_t>(i)],
                                      "/targets/" + std::to_string(i));
  }
  if (std::abs(psi.squaredNorm() - target.squaredNorm()) >= opts.tol) {
    throw io::IoError("norm_mismatch", "/targets",
                      "sum |target|^2 does not match the squared state norm");
  }

  const TailoredTPS tps = tailor_multipartite(psi, factorization, target, opts.tol);
  io::Json generator_sets = io::Json::array();
  for (const auto& triple : tps.generator_sets) {
    generator_sets.push_back(generator_triple(triple));
  }
  emit_result(opts,
              io::Json{{"kind", "tailor-multi-result"},
                       {"version", 1},
                       {"u", io::matrix_to_json(tps.u)},
                       {"generators", std::move(generator_sets)},
                       {"model_amplitudes",
                        complex_array(tps.u.adjoint() * psi)},
                       {"report", io::report_to_json(tps.report)}});
  return 0;
}

int run_verify(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "verify", "");
  const Index d = io::require_positive_int(io::require_field(doc, "dim", ""), "/dim");
  const io::Json& algebra_list = io::require_field(doc, "algebras", "");
  if (!algebra_list.is_array() || algebra_list.size() < 2) {
    throw io::IoError("schema", "/algebras",
                      "expected at least two generator lists at /algebras");
  }
  std::vector<AlgebraBasis> algebras;
  io::Json dims = io::Json::array();
  for (std::size_t i = 0; i < algebra_list.size(); ++i) {
    const std::string entry_path = "/algebras/" + std::to_string(i);
    io::Json wrapper{{"generators", algebra_list[i]}};
    const auto generators =
        matrices_from_field(wrapper, "generators", d, entry_path);
    algebras.push_back(generated_algebra(generators, d, opts.tol));
    dims.push_back(algebras.back().size());
  }
  const ZanardiReport report = verify_zanardi(algebras, d, opts.tol);
  emit_result(opts, io::Json{{"kind", "verify-result"},
                             {"version", 1},
                             {"dim", d},
                             {"algebra_dims", std::move(dims)},
                             {"report", io::report_to_json(report)}});
  if (!report.is_independent || !report.is_complete) {
    emit_error("verification_failed", "/report",
               "the algebras do not induce a tensor product structure");
    return 2;
  }
  return 0;
}

int run_example_d4(const CommonOpts& opts, double lambda1) {
  if (!(lambda1 >= 0.0 && lambda1 <= 1.0)) {
    throw io::IoError("schema", "/lambda1", "lambda1 must lie in [0, 1]");
  }
  const double lambda2 = std::sqrt(1.0 - lambda1 * lambda1);
  const ExampleD4 ex = example_d4(lambda1, lambda2);
  io::Json a_maps = io::Json::array();
  io::Json b_maps = io::Json::array();
  for (int j = 0; j < 3; ++j) {
    a_maps.push_back(io::pauli_map_to_json(ex.a_decompositions[static_cast<std::size_t>(j)]));
    b_maps.push_back(io::pauli_map_to_json(ex.b_decompositions[static_cast<std::size_t>(j)]));
  }
  emit_result(opts, io::Json{{"kind", "example-d4-result"},
                             {"version", 1},
                             {"lambda1", lambda1},
                             {"lambda2", lambda2},
                             {"u", io::matrix_to_json(ex.u)},
                             {"a_decompositions", std::move(a_maps)},
                             {"b_decompositions", std::move(b_maps)}});
  return 0;
}

int run_pauli(const CommonOpts& opts) {
  const io::Json doc = load_input(opts);
  io::require_kind(doc, "pauli", "");
  const Index qubits =
      io::require_positive_int(io::require_field(doc, "qubits", ""), "/qubits");
  if (qubits > 16) {
    throw io::IoError("schema", "/qubits", "qubit count out of range (max 16)");
  }
  const Matrix op =
      io::matrix_from_json(io::require_field(doc, "matrix", ""), "/matrix");
  const Index expected = Index(1) << qubits;
  if (op.rows() != expected || op.cols() != expected) {
    throw io::IoError("dimension_mismatch", "/matrix",
                      "matrix must be 2^qubits x 2^qubits");
  }
  const PauliMap coefficients = pauli_decompose(op, static_cast<int>(qubits));
  emit_result(opts, io::Json{{"kind", "pauli-result"},
                             {"version", 1},
                             {"qubits", qubits},
                             {"coefficients", io::pauli_map_to_json(coefficients)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tailored observable algebras and induced tensor product structures"};
  app.require_subcommand(1);

  CommonOpts opts;
  Index spin_dim = 0;
  double lambda1 = 0.0;

  CLI::App* spin_cmd = app.add_subcommand("spin", "Spin representation matrices for a given dimension");
  spin_cmd->add_option("--dim", spin_dim, "Hilbert space dimension d = 2s+1")->required();
  add_common_output(spin_cmd, opts);

  CLI::App* closure_cmd = app.add_subcommand("closure", "Algebra generated by a set of operators");
  add_common_input(closure_cmd, opts);

  CLI::App* commutant_cmd = app.add_subcommand("commutant", "Commutant and bicommutant of a generated algebra");
  add_common_input(commutant_cmd, opts);

  CLI::App* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite state");
  add_common_input(schmidt_cmd, opts);

  CLI::App* tailor_cmd = app.add_subcommand("tailor", "Tailor observables so a state has prescribed Schmidt coefficients");
  add_common_input(tailor_cmd, opts);

  CLI::App* tailor_multi_cmd = app.add_subcommand("tailor-multi", "Tailor observables for a multipartite expansion target");
  add_common_input(tailor_multi_cmd, opts);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify independence and completeness of generated algebras");
  add_common_input(verify_cmd, opts);

  CLI::App* example_cmd = app.add_subcommand("example-d4", "The worked d = 4 example for a given lambda1");
  example_cmd->add_option("--lambda1", lambda1, "First Schmidt coefficient; lambda2 = sqrt(1 - lambda1^2)")->required();
  add_common_output(example_cmd, opts);

  CLI::App* pauli_cmd = app.add_subcommand("pauli", "Pauli-string decomposition of an operator");
  add_common_input(pauli_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", "", e.what());
    return 1;
  }

  try {
    if (spin_cmd->parsed()) return run_spin(opts, spin_dim);
    if (closure_cmd->parsed()) return run_closure(opts);
    if (commutant_cmd->parsed()) return run_commutant(opts);
    if (schmidt_cmd->parsed()) return run_schmidt(opts);
    if (tailor_cmd->parsed()) return run_tailor(opts);
    if (tailor_multi_cmd->parsed()) return run_tailor_multi(opts);
    if (verify_cmd->parsed()) return run_verify(opts);
    if (example_cmd->parsed()) return run_example_d4(opts, lambda1);
    if (pauli_cmd->parsed()) return run_pauli(opts);
    emit_error("usage", "", "no subcommand selected");
    return 1;
  } catch (const io::IoError& e) {
    emit_error(e.code(), e.path(), e.what());
    return 1;
  } catch (const VerificationError& e) {
    emit_error("verification_failed", "", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error("invalid_argument", "", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", "", e.what());
    return 1;
  }
}
