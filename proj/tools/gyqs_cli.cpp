// gyqs: analytical tables, simulations and self-checks for generalized
// dual-pivot Quicksort.
//
//   gyqs analyze --t 1,1,1
//   gyqs simulate --t 0,0,0 --sizes 1000,100000 --trials 100 --seed 7 --out sim.csv
//   gyqs contour --measure bytecodes --grid-step 0.01 --svg bc.svg
//
// Options may also come from a flat key=value file given with --config;
// flags on the command line take precedence.

#include <gyqs/harness/contour.hpp>
#include <gyqs/harness/reports.hpp>
#include <gyqs/harness/simulate.hpp>
#include <gyqs/harness/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines become "--key value" tokens; '#' starts a comment and a
// bare key is a flag. Returned tokens go in front of the real arguments, so
// the later command-line occurrence wins.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string key = trim(line.substr(0, eq));
    if (key.empty() || key == "config")
      throw UsageError(path + ":" + std::to_string(lineno) + ": bad key");
    out.push_back("--" + key);
    if (eq != std::string::npos) out.push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

std::optional<std::string> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<gyqs::CostMeasure> parse_measures(const std::string& text) {
  if (text == "all") return {gyqs::all_measures.begin(), gyqs::all_measures.end()};
  std::vector<gyqs::CostMeasure> out;
  for (const auto& m : gyqs::harness::split_list(text)) out.push_back(gyqs::parse_measure(m));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{"Generalized dual-pivot Quicksort: analysis, simulation and verification"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  std::string config_path, t_text = "1,1,1", sizes_text = "1000,10000,100000", measure_text, mode = "discrete",
                           out_path, svg_path;
  int cutoff = -1, k = 5, parallel = 1;
  long long trials = 100, n_max = 50;
  std::uint64_t seed = 42;
  double grid_step = 0.005;
  bool inject_fault = false;

  app.add_option("--config", config_path, "flat key=value file with default flag values");
  app.add_option("--t", t_text, "sampling parameter t1,t2,t3");
  app.add_option("--cutoff", cutoff, "Insertionsort threshold M (default k-1)");
  app.add_option("--k", k, "sample size for table/optimize");
  app.add_option("--measure", measure_text, "comparisons|swaps|bytecodes (simulate: comma list or all)");
  app.add_option("--sizes", sizes_text, "comma-separated input sizes");
  app.add_option("--trials", trials, "trials per size");
  app.add_option("--seed", seed, "64-bit master seed");
  app.add_option("--out", out_path, "write CSV here instead of stdout");
  app.add_option("--svg", svg_path, "contour: also write an SVG heat map");
  app.add_option("--grid-step", grid_step, "contour grid spacing");
  app.add_option("--parallel", parallel, "simulate: worker threads");
  app.add_option("--nmax", n_max, "recurrence: largest n");
  app.add_option("--mode", mode, "optimize: discrete|continuous")->check(CLI::IsMember({"discrete", "continuous"}));
  app.add_flag("--inject-fault", inject_fault)->group("");

  auto* analyze = app.add_subcommand("analyze", "exact leading-term coefficients for t");
  auto* table = app.add_subcommand("table", "a/H for every t with sample size k");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo cost measurements");
  auto* recurrence = app.add_subcommand("recurrence", "exact expected costs from the recurrence");
  auto* optimize = app.add_subcommand("optimize", "optimal sampling parameters");
  auto* contour = app.add_subcommand("contour", "continuous ratio over the simplex");
  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> full;
    if (const auto cfg = find_config(args)) full = config_tokens(*cfg);
    full.insert(full.end(), args.begin(), args.end());
    std::vector<std::string> reversed(full.rbegin(), full.rend());  // CLI11 consumes from the back
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  using namespace gyqs;
  using namespace gyqs::harness;
  try {
    const auto measure_or = [&](CostMeasure fallback) {
      return measure_text.empty() ? fallback : parse_measure(measure_text);
    };
    const auto params = [&] {
      const auto t = parse_triple(t_text);
      return PivotParams(t, cutoff < 0 ? sample_size(t) - 1 : cutoff);
    };

    if (*analyze) {
      emit(analyze_csv(params()), out_path);
    } else if (*table) {
      emit(table_csv(k, measure_or(CostMeasure::comparisons)), out_path);
    } else if (*simulate) {
      ExperimentConfig cfg;
      cfg.t = parse_triple(t_text);
      if (cutoff >= 0) cfg.cutoff = cutoff;
      cfg.sizes = parse_sizes(sizes_text);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.measures = parse_measures(measure_text.empty() ? "all" : measure_text);
      cfg.parallelism = parallel;
      cfg.validate();
      emit(simulation_csv(harness::simulate(cfg)), out_path);
    } else if (*recurrence) {
      if (n_max < 0 || n_max > 5000) throw std::invalid_argument("--nmax must be in [0, 5000]");
      emit(recurrence_csv(params(), n_max, measure_or(CostMeasure::comparisons)), out_path);
    } else if (*optimize) {
      if (mode == "discrete") {
        emit(discrete_optimum_csv(k, measure_or(CostMeasure::comparisons)), out_path);
      } else {
        emit(continuous_optimum_csv(measure_text.empty() ? parse_measures("all") : parse_measures(measure_text)),
             out_path);
      }
    } else if (*contour) {
      const ContourGrid g = contour_grid(measure_or(CostMeasure::comparisons), grid_step);
      emit(contour_csv(g), out_path);
      if (!svg_path.empty()) emit(contour_svg(g), svg_path);
      (out_path.empty() ? std::cerr : std::cout) << contour_summary_csv(g);
    } else if (*verify) {
      const auto results = run_verify(VerifyOptions{inject_fault});
      std::cout << verify_report(results);
      return all_passed(results) ? kOk : kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}
