// Command line front end: threshold geometry, curve export, reference
// table reproduction, adequacy checks, scenario solving, evidence
// chains and Monte Carlo spot checks.
//
// Exit codes: 0 success, 1 validation error, 2 no solution, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "infothresh/infothresh.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitIo = 3;

std::string fmt6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

// Writes through either stdout or --out; opening and flushing failures
// are I/O errors, distinct from validation.
template <typename WriteFn>
void with_output(const std::string& out_path, WriteFn&& write) {
  if (out_path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw infothresh::IoError("cannot open output file: " + out_path);
  }
  write(file);
  file.flush();
  if (!file) {
    throw infothresh::IoError("cannot write output file: " + out_path);
  }
}

struct Options {
  double tpr = 0.0;
  double tnr = 0.0;
  double lambda = 0.95;
  double step = 0.01;
  double prevalence = 0.0;
  std::string format = "csv";
  std::string out_path;
  std::string config_path;
  std::string fix;
  std::uint64_t n = 100000;
  std::uint64_t seed = 42;
};

int run_threshold(const Options& opt) {
  infothresh::render_threshold(std::cout,
                               infothresh::ClassifierRates(opt.tpr, opt.tnr));
  return kExitOk;
}

int run_curve(const Options& opt) {
  if (!(opt.step > 0.0) || opt.step > 0.1) {
    throw infothresh::DomainError("curve: --step must lie in (0, 0.1]");
  }
  infothresh::CurveExport request{
      opt.format == "svg" ? infothresh::CurveFormat::svg
                          : infothresh::CurveFormat::csv,
      infothresh::ClassifierRates(opt.tpr, opt.tnr), opt.step, true};
  with_output(opt.out_path, [&request](std::ostream& out) {
    infothresh::write_curve(out, request);
  });
  return kExitOk;
}

int run_tables() {
  infothresh::render_tables(std::cout);
  return kExitOk;
}

int run_adequacy(const Options& opt) {
  infothresh::render_adequacy(
      std::cout,
      infothresh::is_adequate(infothresh::ClassifierRates(opt.tpr, opt.tnr),
                              opt.lambda));
  return kExitOk;
}

int run_solve(const Options& opt) {
  const std::size_t eq = opt.fix.find('=');
  if (eq == std::string::npos) {
    throw infothresh::DomainError(
        "solve: --fix expects tpr=VALUE or tnr=VALUE");
  }
  const std::string side = opt.fix.substr(0, eq);
  double fixed_value = 0.0;
  try {
    std::size_t used = 0;
    const std::string text = opt.fix.substr(eq + 1);
    fixed_value = std::stod(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw infothresh::DomainError("solve: --fix value is not a number");
  }
  if (side != "tpr" && side != "tnr") {
    throw infothresh::DomainError(
        "solve: --fix side must be tpr or tnr, got " + side);
  }

  const infothresh::Probability fixed(fixed_value);
  const bool fix_tnr = side == "tnr";
  const infothresh::Probability solved =
      fix_tnr ? infothresh::solve_min_tpr(fixed, opt.lambda)
              : infothresh::solve_min_tnr(fixed, opt.lambda);
  const infothresh::ClassifierRates pair =
      fix_tnr ? infothresh::ClassifierRates(solved.value(), fixed.value())
              : infothresh::ClassifierRates(fixed.value(), solved.value());

  std::cout << "fixed " << side << "      " << fmt6(fixed.value()) << '\n';
  std::cout << "lambda         " << fmt6(opt.lambda) << '\n';
  std::cout << "minimal " << (fix_tnr ? "tpr" : "tnr") << "    "
            << fmt6(solved.value()) << '\n';
  std::cout << "achieved auc   " << fmt6(infothresh::auc_closed_form(pair))
            << '\n';
  return kExitOk;
}

int run_chain(const Options& opt) {
  const infothresh::ChainConfig config =
      infothresh::load_chain_config(opt.config_path);
  const infothresh::ChainTrace trace =
      infothresh::run_chain(config.initial_prior, config.items);
  infothresh::render_chain(std::cout, trace);
  return trace.aborted_at.has_value() ? kExitValidation : kExitOk;
}

int run_simulate(const Options& opt) {
  infothresh::render_simulation(
      std::cout,
      infothresh::simulate_confusion(
          infothresh::ClassifierRates(opt.tpr, opt.tnr),
          infothresh::Probability(opt.prevalence), opt.n, opt.seed));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information threshold toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* threshold =
      app.add_subcommand("threshold", "threshold point of a classifier");
  threshold->add_option("--tpr", opt.tpr, "true positive rate")->required();
  threshold->add_option("--tnr", opt.tnr, "true negative rate")->required();

  CLI::App* curve = app.add_subcommand("curve", "export the belief curve");
  curve->add_option("--tpr", opt.tpr, "true positive rate")->required();
  curve->add_option("--tnr", opt.tnr, "true negative rate")->required();
  curve->add_option("--step", opt.step, "sampling step, must divide 1");
  curve->add_option("--format", opt.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  curve->add_option("--out", opt.out_path, "output path (default stdout)");

  app.add_subcommand("tables", "recompute the built-in reference tables");

  CLI::App* adequacy =
      app.add_subcommand("adequacy", "area-under-curve adequacy check");
  adequacy->add_option("--tpr", opt.tpr, "true positive rate")->required();
  adequacy->add_option("--tnr", opt.tnr, "true negative rate")->required();
  adequacy->add_option("--lambda", opt.lambda, "adequacy level in (0,1)")
      ->required();

  CLI::App* solve =
      app.add_subcommand("solve", "minimal rate reaching a target area");
  solve->add_option("--fix", opt.fix, "fixed side, e.g. tnr=0.99")->required();
  solve->add_option("--lambda", opt.lambda, "adequacy level in (0,1)")
      ->required();

  CLI::App* chain =
      app.add_subcommand("chain", "sequential evidence accumulation");
  chain->add_option("--config", opt.config_path, "chain config file (JSON)")
      ->required();

  CLI::App* simulate =
      app.add_subcommand("simulate", "seeded Monte Carlo confusion table");
  simulate->add_option("--tpr", opt.tpr, "true positive rate")->required();
  simulate->add_option("--tnr", opt.tnr, "true negative rate")->required();
  simulate->add_option("--prevalence", opt.prevalence, "ground truth rate")
      ->required();
  simulate->add_option("--n", opt.n, "number of samples");
  simulate->add_option("--seed", opt.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (app.got_subcommand(threshold)) {
      return run_threshold(opt);
    }
    if (app.got_subcommand(curve)) {
      return run_curve(opt);
    }
    if (app.got_subcommand(adequacy)) {
      return run_adequacy(opt);
    }
    if (app.got_subcommand(solve)) {
      return run_solve(opt);
    }
    if (app.got_subcommand(chain)) {
      return run_chain(opt);
    }
    if (app.got_subcommand(simulate)) {
      return run_simulate(opt);
    }
    return run_tables();
  } catch (const infothresh::NoSolutionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoSolution;
  } catch (const infothresh::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const infothresh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
