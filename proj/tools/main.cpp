#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mdlmon/cli.hpp"

namespace {

std::string load_formula(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online verification of bounded temporal formulas over timed event streams"};

  std::string formula;
  std::string trace_path = "-";
  std::string dump_path;
  std::string horizon_text;
  mdlmon::cli::Options opts;

  app.add_option("--formula", formula, "Temporal formula, inline or a path to a file holding it")->required();
  app.add_option("--trace", trace_path, "Trace file of JSON events, one per line ('-' for stdin)");
  app.add_flag("--timer", opts.timer, "Inject synthetic states at earliest decision timepoints");
  app.add_flag("--explain", opts.explain, "Print the translation, polarity report and homogeneity, then exit");
  app.add_flag("--check", opts.check, "Cross-check the verdict against the reference run evaluator");
  app.add_option("--dump-ddd", dump_path, "Write the final decision diagrams to this file");
  app.add_option("--horizon", horizon_text, "Horizon for --check (defaults to the last event time)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return mdlmon::cli::kExitInputError;
  }

  opts.formula = load_formula(formula);
  if (!dump_path.empty()) opts.dump_ddd_path = dump_path;
  if (!horizon_text.empty()) {
    try {
      opts.horizon = mdlmon::Rational::parse(horizon_text);
    } catch (const std::exception& e) {
      std::cerr << "bad --horizon: " << e.what() << "\n";
      return mdlmon::cli::kExitInputError;
    }
  }

  if (opts.explain) {
    std::istringstream empty;
    return mdlmon::cli::run(opts, empty, std::cout, std::cerr);
  }

  if (trace_path == "-") {
    return mdlmon::cli::run(opts, std::cin, std::cout, std::cerr);
  }
  std::ifstream trace(trace_path);
  if (!trace) {
    std::cerr << "cannot open trace file " << trace_path << "\n";
    return mdlmon::cli::kExitInputError;
  }
  return mdlmon::cli::run(opts, trace, std::cout, std::cerr);
}
