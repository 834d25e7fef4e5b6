#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "hqc/connection.hpp"
#include "hqc/gates.hpp"
#include "hqc/holonomy.hpp"
#include "hqc/loop.hpp"
#include "hqc/model.hpp"
#include "hqc/synthesis.hpp"

namespace {

namespace fs = std::filesystem;
using hqc::Complex;
using hqc::Matrix;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

std::string fmt_entry(Complex z) {
  // 12 significant digits, fixed width, diff-able.
  char buf[48];
  std::snprintf(buf, sizeof buf, "%+.11e%+.11ei", z.real(), z.imag());
  return buf;
}

void print_matrix(const Matrix& m, std::ostream& os) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? "  " : "") << fmt_entry(m(i, j));
    }
    os << "\n";
  }
}

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

hqc::StepRule parse_rule(const std::string& rule) {
  if (rule == "midpoint") {
    return hqc::StepRule::Midpoint;
  }
  if (rule == "left") {
    return hqc::StepRule::LeftEndpoint;
  }
  throw std::invalid_argument("--rule must be 'midpoint' or 'left'");
}

double parse_number(const std::string& token, const std::string& context) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (token.empty() || end != begin + token.size() || !std::isfinite(v)) {
    throw std::invalid_argument(context + ": expected a finite number, got '" +
                                token + "'");
  }
  return v;
}

hqc::GateSpec parse_gate(const std::string& text, hqc::System identity_system) {
  const std::size_t paren = text.find('(');
  std::string name = paren == std::string::npos ? text : text.substr(0, paren);
  std::vector<double> args;
  if (paren != std::string::npos) {
    if (text.back() != ')') {
      throw std::invalid_argument("gate '" + text + "': missing ')'");
    }
    const std::string inner = text.substr(paren + 1, text.size() - paren - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      args.push_back(parse_number(item, "gate '" + name + "'"));
    }
  }
  const auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw std::invalid_argument("gate '" + name + "' expects " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(args.size()));
    }
  };
  if (name == "identity") {
    need(0);
    return hqc::GateSpec::identity(identity_system);
  }
  if (name == "hadamard") {
    need(0);
    return hqc::GateSpec::hadamard();
  }
  if (name == "pi8") {
    need(0);
    return hqc::GateSpec::pi8();
  }
  if (name == "phase") {
    need(1);
    return hqc::GateSpec::phase(args[0]);
  }
  if (name == "su2") {
    need(4);
    return hqc::GateSpec::su2(args[0], args[1], args[2], args[3]);
  }
  if (name == "cnot") {
    need(0);
    return hqc::GateSpec::cnot();
  }
  if (name == "swap") {
    need(0);
    return hqc::GateSpec::swap();
  }
  if (name == "cphase" || name == "controlled-phase") {
    need(1);
    return hqc::GateSpec::controlled_phase(args[0]);
  }
  if (name == "qft2") {
    need(0);
    return hqc::GateSpec::qft2();
  }
  throw std::invalid_argument(
      "unknown gate '" + name +
      "' (run the 'gates' command for the catalog)");
}

hqc::GateSpec read_matrix_gate(const fs::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open '" + file.string() + "' for reading");
  }
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) {
    values.push_back(v);
  }
  if (!in.eof()) {
    throw std::runtime_error("'" + file.string() +
                             "': non-numeric content in matrix file");
  }
  int dim = 0;
  if (values.size() == 8) {
    dim = 2;
  } else if (values.size() == 32) {
    dim = 4;
  } else {
    throw std::runtime_error(
        "'" + file.string() +
        "': expected 8 (2x2) or 32 (4x4) re/im values row-major, got " +
        std::to_string(values.size()));
  }
  Matrix m(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j, k += 2) {
      m(i, j) = Complex(values[k], values[k + 1]);
    }
  }
  return hqc::GateSpec::custom(std::move(m));
}

void write_text_atomic(const fs::path& file, const std::string& content) {
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() +
                               "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, file);
}

hqc::ConnectionField field_for(hqc::System s) {
  return s == hqc::System::OneQubit ? hqc::ConnectionField::one_qubit()
                                    : hqc::ConnectionField::two_qubit();
}

// ---------------------------------------------------------------- evaluate

int cmd_evaluate(const std::string& loop_file, int steps,
                 const std::string& rule_name) {
  const hqc::LoadedLoop loaded = hqc::load_loop(fs::path(loop_file));
  const hqc::HolonomyConfig cfg{steps, parse_rule(rule_name)};
  const hqc::GateMatrix u =
      hqc::holonomy(loaded.loop, field_for(loaded.loop.system()), cfg);
  std::cout << "system   " << hqc::system_name(loaded.loop.system()) << "\n";
  std::cout << "vertices " << loaded.loop.vertex_count() << "\n";
  std::cout << "edges    " << loaded.loop.edge_count() << "\n";
  std::cout << "steps    " << steps << " per edge ("
            << static_cast<long>(steps) * loaded.loop.edge_count()
            << " total)\n";
  std::cout << "holonomy\n";
  print_matrix(u.matrix(), std::cout);
  std::cout << "unitarity defect " << fmt_value(hqc::unitarity_defect(u))
            << "\n";
  if (loaded.meta.gate) {
    std::cout << "stored gate      " << *loaded.meta.gate << "\n";
  }
  if (loaded.meta.f_final) {
    std::cout << "stored f_final   " << fmt_value(*loaded.meta.f_final)
              << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- synthesize

int cmd_synthesize(const std::string& gate_name, const std::string& matrix_file,
                   int k, const std::string& system_name, bool system_given,
                   std::uint64_t seed, int restarts, double target_f, int steps,
                   const std::string& rule_name, long max_iter,
                   double init_range, int threads, const std::string& out_file) {
  const hqc::System flag_system =
      system_name == "two" ? hqc::System::TwoQubit : hqc::System::OneQubit;
  hqc::GateSpec spec = matrix_file.empty()
                           ? parse_gate(gate_name, flag_system)
                           : read_matrix_gate(matrix_file);
  if (system_given && spec.system() != flag_system) {
    throw std::invalid_argument("--system contradicts the gate '" +
                                spec.name() + "'");
  }

  hqc::SynthesisConfig cfg;
  cfg.k = k;
  cfg.system = spec.system();
  cfg.steps_per_edge = steps;
  cfg.rule = parse_rule(rule_name);
  cfg.target_f = target_f;
  cfg.max_restarts = restarts > 0
                         ? restarts
                         : (cfg.system == hqc::System::OneQubit ? 100 : 400);
  cfg.max_iterations_per_start = max_iter;
  cfg.seed = seed;
  cfg.init_range = init_range;
  cfg.threads = threads;

  const hqc::SynthesisResult result = hqc::synthesize(spec, cfg);

  std::cout << "gate        " << spec.name() << "\n";
  std::cout << "system      " << hqc::system_name(cfg.system) << "\n";
  std::cout << "k           " << cfg.k << "\n";
  std::cout << "dimension   " << cfg.dimension() << "\n";
  std::cout << "restarts    " << result.restarts_used << " / "
            << cfg.max_restarts << "\n";
  std::cout << "iterations  " << result.iterations << "\n";
  std::cout << "evaluations " << result.evaluations << "\n";
  std::cout << "f_final     " << fmt_value(result.f_final) << "\n";
  std::cout << "f_refined   " << fmt_value(result.f_refined) << "\n";
  std::cout << "converged   " << (result.converged ? "yes" : "no") << "\n";
  std::cout << "seed        " << result.seed << "\n";
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.2f s", result.wall_seconds);
  std::cout << "wall        " << wall << "\n";

  if (!out_file.empty()) {
    hqc::LoopMetadata meta;
    meta.gate = spec.name();
    meta.f_final = result.f_final;
    meta.f_refined = result.f_refined;
    meta.seed = result.seed;
    meta.restarts = result.restarts_used;
    meta.iterations = result.iterations;
    hqc::save_loop(result.loop, fs::path(out_file), meta);
    std::cout << "wrote       " << out_file << "\n";
  }
  return result.converged ? kExitOk : kExitNotConverged;
}

// -------------------------------------------------------------------- verify

struct CheckRow {
  std::string name;
  double value;
  double tol;
};

int cmd_verify(int steps, const std::string& rule_name) {
  const hqc::StepRule rule = parse_rule(rule_name);
  // Midpoint rule is second order; the left-endpoint rule only first.
  const double loop_tol = rule == hqc::StepRule::Midpoint ? 1e-6 : 1e-3;
  const hqc::HolonomyConfig cfg{steps, rule};
  const hqc::ConnectionField one = hqc::ConnectionField::one_qubit();
  const hqc::ConnectionField two = hqc::ConnectionField::two_qubit();

  std::vector<CheckRow> rows;
  const auto check = [&rows](std::string name, double value, double tol) {
    rows.push_back({std::move(name), value, tol});
  };
  const auto gate_err = [&](const hqc::PolygonalLoop& loop,
                            const Matrix& expected) {
    const hqc::ConnectionField& field =
        loop.system() == hqc::System::OneQubit ? one : two;
    return hqc::frob_dist(hqc::holonomy(loop, field, cfg), expected);
  };
  char label[96];

  // Analytic loop constructions against their closed-form gates.
  check("pi8 rectangle",
        gate_err(hqc::analytic_loop(hqc::GateSpec::pi8()),
                 hqc::gate_matrix(hqc::GateSpec::pi8())),
        loop_tol);

  std::mt19937_64 rng(20240901);
  const auto angle = [&rng] {
    return (2.0 * hqc::uniform_unit(rng) - 1.0) * kPi;
  };
  for (int i = 0; i < 5; ++i) {
    const double beta = angle();
    std::snprintf(label, sizeof label, "sigma_y rectangle beta=%+.3f", beta);
    check(label,
          gate_err(hqc::rotation_y_loop(beta),
                   hqc::gate_matrix(hqc::GateSpec::su2(0, 0, beta, 0))),
          loop_tol);
  }
  for (int i = 0; i < 5; ++i) {
    const double alpha = angle();
    std::snprintf(label, sizeof label, "sigma_z six-leg alpha=%+.3f", alpha);
    check(label,
          gate_err(hqc::rotation_z_loop(alpha),
                   hqc::gate_matrix(hqc::GateSpec::su2(0, alpha, 0, 0))),
          loop_tol);
  }
  for (int i = 0; i < 3; ++i) {
    const double delta = angle();
    std::snprintf(label, sizeof label, "global-phase eight-leg delta=%+.3f",
                  delta);
    check(label,
          gate_err(hqc::global_phase_loop(delta),
                   hqc::gate_matrix(hqc::GateSpec::phase(delta))),
          loop_tol);
  }
  for (int i = 0; i < 3; ++i) {
    const double theta = angle();
    std::snprintf(label, sizeof label, "controlled-phase rectangle T=%+.3f",
                  theta);
    check(label,
          gate_err(hqc::controlled_phase_loop(theta),
                   hqc::gate_matrix(hqc::GateSpec::controlled_phase(theta))),
          loop_tol);
  }
  check("hadamard composite (phase surplus)",
        gate_err(hqc::analytic_loop(hqc::GateSpec::hadamard()),
                 std::polar(1.0, kPi / 2) *
                     hqc::gate_matrix(hqc::GateSpec::hadamard()).matrix()),
        loop_tol);
  check("hadamard composite (phase corrected)",
        gate_err(hqc::analytic_hadamard_exact(),
                 hqc::gate_matrix(hqc::GateSpec::hadamard())),
        loop_tol);

  // Connection components against central finite differences of the frame.
  for (const hqc::System system :
       {hqc::System::OneQubit, hqc::System::TwoQubit}) {
    const int dim = hqc::coord_count(system);
    double worst = 0.0;
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<double> p(dim);
      for (double& c : p) {
        c = angle();
      }
      const auto components = field_for(system).components(p);
      for (int c = 0; c < dim; ++c) {
        worst = std::max(
            worst, hqc::frob_dist(components[c].matrix,
                                  hqc::connection_fd_oracle(system, p, c)));
      }
    }
    std::snprintf(label, sizeof label,
                  "connection vs finite differences (%s)",
                  std::string(hqc::system_name(system)).c_str());
    check(label, worst, 1e-6);
  }

  // Iso-spectral property of the model Hamiltonians.
  {
    double worst1 = 0.0;
    double worst2 = 0.0;
    double worst_pattern = 0.0;
    for (int sample = 0; sample < 100; ++sample) {
      hqc::OneQubitPoint p{angle(), angle(), angle(), angle()};
      Eigen::SelfAdjointEigenSolver<Matrix> s1(hqc::hamiltonian_one(p));
      worst1 = std::max({worst1, std::abs(s1.eigenvalues()(0)),
                         std::abs(s1.eigenvalues()(1)),
                         std::abs(s1.eigenvalues()(2) - 1.0)});

      hqc::TwoQubitPoint q{{angle(), angle(), angle(), angle()},
                           {angle(), angle(), angle(), angle()},
                           angle()};
      const Matrix h2 = hqc::hamiltonian_two(q);
      Eigen::SelfAdjointEigenSolver<Matrix> s2(h2);
      for (int i = 0; i < 4; ++i) {
        worst2 = std::max(worst2, std::abs(s2.eigenvalues()(i)));
        worst2 = std::max(worst2, std::abs(s2.eigenvalues()(4 + i) - 1.0));
      }
      worst2 = std::max(worst2, std::abs(s2.eigenvalues()(8) - 2.0));
      worst_pattern = std::max(
          worst_pattern, (h2 - hqc::hamiltonian_two_entrywise(q))
                             .cwiseAbs()
                             .maxCoeff());
    }
    check("one-qubit spectrum {eps,0,0}", worst1, 1e-10);
    check("two-qubit spectrum {2eps,eps x4,0 x4}", worst2, 1e-10);
    check("entrywise pattern vs conjugation", worst_pattern, 1e-12);
  }

  bool all_pass = true;
  for (const CheckRow& row : rows) {
    const bool pass = row.value <= row.tol;
    all_pass = all_pass && pass;
    char line[160];
    std::snprintf(line, sizeof line, "%s  %-42s %.3e <= %.0e",
                  pass ? "PASS" : "FAIL", row.name.c_str(), row.value,
                  row.tol);
    std::cout << line << "\n";
  }
  std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all_pass ? kExitOk : kExitError;
}

// --------------------------------------------------------------- export-path

int cmd_export_path(const std::string& loop_file, int steps,
                    const std::string& rule_name, const std::string& out_file) {
  const hqc::LoadedLoop loaded = hqc::load_loop(fs::path(loop_file));
  std::ostringstream table;
  hqc::write_path_table(loaded.loop, steps, parse_rule(rule_name), table);
  write_text_atomic(fs::path(out_file), table.str());
  std::cout << "wrote " << out_file << " ("
            << static_cast<long>(steps) * loaded.loop.edge_count()
            << " rows)\n";
  return kExitOk;
}

// ------------------------------------------------------------------ landscape

int cmd_landscape(const std::string& gate_name, const std::string& min1_file,
                  const std::string& min2_file, int grid, std::uint64_t seed,
                  int steps, const std::string& out_file) {
  const hqc::LoadedLoop min1 = hqc::load_loop(fs::path(min1_file));
  const hqc::LoadedLoop min2 = hqc::load_loop(fs::path(min2_file));
  if (min1.loop.system() != min2.loop.system() ||
      min1.loop.vertex_count() != min2.loop.vertex_count()) {
    throw std::invalid_argument(
        "landscape: the two minima have different shapes");
  }
  const hqc::System system = min1.loop.system();
  const hqc::GateSpec spec = parse_gate(gate_name, system);
  if (spec.system() != system) {
    throw std::invalid_argument(
        "landscape: gate system does not match the loop files");
  }

  hqc::SynthesisConfig cfg;
  cfg.k = min1.loop.vertex_count();
  cfg.system = system;
  cfg.steps_per_edge = steps;

  const auto flatten = [](const hqc::PolygonalLoop& loop) {
    const auto flat = loop.flat_vertices();
    return Eigen::Map<const Eigen::VectorXd>(flat.data(),
                                             static_cast<Eigen::Index>(
                                                 flat.size()))
        .eval();
  };
  const Eigen::VectorXd origin = flatten(min1.loop);
  const Eigen::VectorXd axis1 = flatten(min2.loop) - origin;

  // Second axis: seeded random direction scaled to the first axis (unit
  // scale when the minima coincide).
  std::mt19937_64 rng(hqc::substream_seed(seed, 0));
  Eigen::VectorXd axis2(origin.size());
  for (Eigen::Index i = 0; i < axis2.size(); ++i) {
    axis2(i) = 2.0 * hqc::uniform_unit(rng) - 1.0;
  }
  const double norm1 = axis1.norm();
  axis2 *= (norm1 > 0 ? norm1 : 1.0) / axis2.norm();

  const Eigen::MatrixXd table = hqc::landscape_section(
      hqc::gate_matrix(spec), cfg, origin, axis1, axis2, grid);

  std::ostringstream out;
  out << "u\\v";
  for (int j = 0; j < grid; ++j) {
    const double v = grid == 1 ? 0.0 : static_cast<double>(j) / (grid - 1);
    out << "\t" << fmt_value(v);
  }
  out << "\n";
  for (int i = 0; i < grid; ++i) {
    const double u = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    out << fmt_value(u);
    for (int j = 0; j < grid; ++j) {
      out << "\t" << fmt_value(table(i, j));
    }
    out << "\n";
  }
  write_text_atomic(fs::path(out_file), out.str());
  std::cout << "wrote " << out_file << " (" << grid << "x" << grid
            << " values)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------- gates

int cmd_gates() {
  const auto show = [](const hqc::GateSpec& spec, const std::string& syntax) {
    std::cout << syntax << "  [" << hqc::system_name(spec.system()) << "]\n";
    print_matrix(hqc::gate_matrix(spec), std::cout);
    std::cout << "\n";
  };
  std::cout << "Gate catalog. Parameterized gates take radians; all matrices\n"
            << "act on the degenerate subspace in the order {|0>,|1>} or\n"
            << "{|00>,|01>,|10>,|11>}.\n\n";
  show(hqc::GateSpec::identity(hqc::System::OneQubit),
       "identity        (also available as two-qubit via --system two)");
  show(hqc::GateSpec::hadamard(), "hadamard");
  show(hqc::GateSpec::pi8(), "pi8");
  show(hqc::GateSpec::phase(kPi / 4), "phase(d)        shown for d=pi/4");
  show(hqc::GateSpec::su2(1, kPi / 7, 1.0 / 3, 1),
       "su2(d,a,b,c)    e^{id} exp(ia sz) exp(ib sy) exp(ic sz); shown for "
       "(1, pi/7, 1/3, 1)");
  show(hqc::GateSpec::cnot(), "cnot");
  show(hqc::GateSpec::swap(), "swap");
  show(hqc::GateSpec::controlled_phase(kPi),
       "cphase(T)       exp(iT|11><11|); shown for T=pi");
  show(hqc::GateSpec::qft2(), "qft2");
  std::cout << "custom          supply --matrix FILE (re im pairs row-major, "
               "8 or 32 numbers)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Holonomic gate toolkit: evaluate loop holonomies in the three-state "
      "model and synthesize loops realizing target gates"};
  app.require_subcommand(1);

  // evaluate
  std::string ev_loop;
  int ev_steps = 200;
  std::string ev_rule = "midpoint";
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Print the holonomy of a loop file");
  evaluate->add_option("--loop", ev_loop, "Loop file")->required();
  evaluate->add_option("--steps", ev_steps, "Steps per edge")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--rule", ev_rule, "midpoint|left")
      ->check(CLI::IsMember({"midpoint", "left"}));

  // synthesize
  std::string sy_gate;
  std::string sy_matrix;
  int sy_k = 3;
  std::string sy_system = "one";
  std::uint64_t sy_seed = 1;
  int sy_restarts = 0;
  double sy_target = 1e-8;
  int sy_steps = 200;
  std::string sy_rule = "midpoint";
  long sy_max_iter = 40000;
  double sy_init_range = kPi;
  int sy_threads = 0;
  std::string sy_out;
  CLI::App* synthesize = app.add_subcommand(
      "synthesize", "Search for a loop whose holonomy is a target gate");
  CLI::Option* opt_gate =
      synthesize->add_option("--gate", sy_gate, "Target gate name");
  CLI::Option* opt_matrix = synthesize->add_option(
      "--matrix", sy_matrix, "Target unitary from file (re im pairs)");
  opt_gate->excludes(opt_matrix);
  opt_matrix->excludes(opt_gate);
  synthesize->add_option("--k", sy_k, "Free vertices")
      ->check(CLI::PositiveNumber);
  synthesize->add_option("--system", sy_system, "one|two (identity only)")
      ->check(CLI::IsMember({"one", "two"}));
  synthesize->add_option("--seed", sy_seed, "Master seed");
  synthesize->add_option("--restarts", sy_restarts,
                         "Restart budget (0 = 100 one-qubit / 400 two-qubit)");
  synthesize->add_option("--target-f", sy_target, "Stop threshold on f")
      ->check(CLI::PositiveNumber);
  synthesize->add_option("--steps", sy_steps, "Steps per edge")
      ->check(CLI::PositiveNumber);
  synthesize->add_option("--rule", sy_rule, "midpoint|left")
      ->check(CLI::IsMember({"midpoint", "left"}));
  synthesize->add_option("--max-iter", sy_max_iter,
                         "Iteration cap per descent");
  synthesize->add_option("--init-range", sy_init_range,
                         "Initial vertex range");
  synthesize->add_option("--threads", sy_threads,
                         "Worker threads (0 = hardware)");
  synthesize->add_option("--out", sy_out, "Loop file to write");

  // verify
  int vf_steps = 200;
  std::string vf_rule = "midpoint";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the analytic oracle suite");
  verify->add_option("--steps", vf_steps, "Steps per edge")
      ->check(CLI::PositiveNumber);
  verify->add_option("--rule", vf_rule, "midpoint|left")
      ->check(CLI::IsMember({"midpoint", "left"}));

  // export-path
  std::string xp_loop;
  int xp_steps = 200;
  std::string xp_rule = "midpoint";
  std::string xp_out;
  CLI::App* export_path = app.add_subcommand(
      "export-path", "Write the discretized coordinate trace of a loop");
  export_path->add_option("--loop", xp_loop, "Loop file")->required();
  export_path->add_option("--steps", xp_steps, "Steps per edge")
      ->check(CLI::PositiveNumber);
  export_path->add_option("--rule", xp_rule, "midpoint|left")
      ->check(CLI::IsMember({"midpoint", "left"}));
  export_path->add_option("--out", xp_out, "Output table")->required();

  // landscape
  std::string ls_gate;
  std::string ls_min1;
  std::string ls_min2;
  int ls_grid = 33;
  std::uint64_t ls_seed = 1;
  int ls_steps = 200;
  std::string ls_out;
  CLI::App* landscape = app.add_subcommand(
      "landscape", "Sample the objective on a plane through two minima");
  landscape->add_option("--gate", ls_gate, "Target gate name")->required();
  landscape->add_option("--min1", ls_min1, "First minimum loop file")
      ->required();
  landscape->add_option("--min2", ls_min2, "Second minimum loop file")
      ->required();
  landscape->add_option("--grid", ls_grid, "Grid points per axis")
      ->check(CLI::PositiveNumber);
  landscape->add_option("--seed", ls_seed, "Seed for the second axis");
  landscape->add_option("--steps", ls_steps, "Steps per edge")
      ->check(CLI::PositiveNumber);
  landscape->add_option("--out", ls_out, "Output table")->required();

  // gates
  app.add_subcommand("gates", "Print the gate catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.got_subcommand("evaluate")) {
      return cmd_evaluate(ev_loop, ev_steps, ev_rule);
    }
    if (app.got_subcommand("synthesize")) {
      if (sy_gate.empty() && sy_matrix.empty()) {
        throw std::invalid_argument("synthesize needs --gate or --matrix");
      }
      return cmd_synthesize(sy_gate, sy_matrix, sy_k, sy_system,
                            synthesize->count("--system") > 0, sy_seed,
                            sy_restarts, sy_target, sy_steps, sy_rule,
                            sy_max_iter, sy_init_range, sy_threads, sy_out);
    }
    if (app.got_subcommand("verify")) {
      return cmd_verify(vf_steps, vf_rule);
    }
    if (app.got_subcommand("export-path")) {
      return cmd_export_path(xp_loop, xp_steps, xp_rule, xp_out);
    }
    if (app.got_subcommand("landscape")) {
      return cmd_landscape(ls_gate, ls_min1, ls_min2, ls_grid, ls_seed,
                           ls_steps, ls_out);
    }
    if (app.got_subcommand("gates")) {
      return cmd_gates();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
