#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gccp/apps.hpp"
#include "gccp/baseline.hpp"
#include "gccp/errors.hpp"
#include "gccp/instance.hpp"
#include "gccp/oracle.hpp"
#include "gccp/probability.hpp"
#include "gccp/transversal.hpp"
#include "gccp/transversoul.hpp"

namespace {

using namespace gccp;

struct GlobalOptions {
  int decimals = 6;
};

std::string fraction_line(const char* label, const BigRational& value, int decimals) {
  std::ostringstream out;
  out << label << " = " << value.get_str() << " ≈ " << to_fixed(value, decimals);
  return out.str();
}

std::string joined_counts(const std::vector<BigInt>& counts) {
  std::ostringstream out;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) out << " ";
    out << counts[k].get_str();
  }
  return out.str();
}

void print_report(const GccpReport& report, int decimals, bool variance) {
  std::cout << "w = " << report.w << "  h = " << report.h << "\n";
  std::cout << fraction_line("ℓ_nr", report.expected_no_replacement, decimals) << "\n";
  std::cout << fraction_line("ℓ_r", report.expected_with_replacement, decimals) << "\n";
  if (variance) {
    std::cout << fraction_line("var_nr", report.variance_no_replacement, decimals) << "\n";
    std::cout << fraction_line("var_r", report.variance_with_replacement, decimals) << "\n";
  }
}

void print_summary(const SimSummary& summary) {
  std::cout << "trials = " << summary.trials << "\n";
  std::cout << "mean = " << summary.mean << "\n";
  std::cout << "sample variance = " << summary.sample_variance << "\n";
  std::cout << "standard error = " << summary.standard_error << "\n";
  if (summary.cap_hits) std::cout << "cap hits = " << summary.cap_hits << "\n";
}

void solve_instance(const Instance& raw, const GlobalOptions& global, bool use_alpha,
                    bool variance, std::optional<long> goals_n,
                    const DecomposeOptions& dec_options) {
  const Instance inst = reduce_goals(raw);
  GccpReport report;
  if (use_alpha) {
    const AlphaVector alpha = alpha_or_default(inst);
    const TVector counts = count_transversouls(inst, alpha);
    std::cout << "alpha =";
    for (int a : alpha.thresholds) std::cout << " " << a;
    std::cout << "\n";
    report = make_report(inst, TauVector{counts.counts});
  } else {
    report = make_report(inst, tau_vector(inst, dec_options));
  }
  print_report(report, global.decimals, variance);
  if (goals_n) {
    const GoalExpectations with = goal_expectations(raw, *goals_n, true);
    const GoalExpectations without = goal_expectations(raw, *goals_n, false);
    std::cout << fraction_line(("e_" + std::to_string(*goals_n) + " (replacement)").c_str(),
                               with.total, global.decimals)
              << "\n";
    std::cout << fraction_line(("e_" + std::to_string(*goals_n) + " (no replacement)").c_str(),
                               without.total, global.decimals)
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized coupon-collector solver"};
  app.require_subcommand(1);
  app.fallthrough();  // lets global flags appear after the subcommand
  GlobalOptions global;
  app.add_option("--decimals", global.decimals, "Decimal places in renderings")
      ->check(CLI::Range(0, 60));

  std::string file;
  bool use_alpha = false, variance = false, dump = false, replacement = false;
  std::optional<long> goals_n;
  std::uint64_t trials = 100000, seed = 1, max_rows = 0;
  std::string order = "size", strategy = "auto", family = "triangular";
  std::string piece = "queen", variant = "closed", probs;
  std::vector<int> h_list;
  int cap = 27, homogeneous = 0;
  std::uint64_t simulate_trials = 0;

  auto dec_options = [&]() {
    DecomposeOptions options;
    options.order = order == "given" ? GoalOrder::AsGiven : GoalOrder::AscendingSize;
    options.max_rows = max_rows;
    return options;
  };

  auto* solve = app.add_subcommand("solve", "Solve an instance file exactly");
  solve->add_option("file", file)->required();
  solve->add_flag("--alpha", use_alpha, "Use the instance's alpha thresholds");
  solve->add_flag("--variance", variance, "Also print both variances");
  solve->add_option("--goals", goals_n, "Expected goals gathered in a length-N trial");
  solve->add_option("--order", order)->check(CLI::IsMember({"size", "given"}));
  solve->add_option("--max-rows", max_rows, "Abort beyond this many rows");

  auto* tau_cmd = app.add_subcommand("tau", "Print the transversal count vector");
  tau_cmd->add_option("file", file)->required();
  tau_cmd->add_flag("--dump", dump, "Print the row decomposition");
  tau_cmd->add_option("--order", order)->check(CLI::IsMember({"size", "given"}));
  tau_cmd->add_option("--max-rows", max_rows);

  auto* trans = app.add_subcommand("transversoul", "Print T and Q vectors");
  trans->add_option("file", file)->required();
  trans->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "enumerate", "reduce"}));

  auto* bench = app.add_subcommand("bench", "Benchmark the triangular family");
  bench->set_help_flag("--help", "Print help");  // frees -h/--h for the value list
  bench->add_option("--h", h_list, "h values")->required();
  bench->add_option("--family", family)->check(CLI::IsMember({"triangular"}));
  bench->add_option("--cap", cap, "Inclusion-exclusion cap");

  auto* chess = app.add_subcommand("chess", "Expected draws to dominate the board");
  chess->add_option("--piece", piece)->check(CLI::IsMember({"queen", "rook", "king"}));
  chess->add_option("--variant", variant)->check(CLI::IsMember({"closed", "open"}));
  chess->add_option("--simulate", simulate_trials, "Estimate by trials instead of exact counting");
  chess->add_flag("--variance", variance);
  chess->add_option("--seed", seed);
  chess->add_option("--order", order)->check(CLI::IsMember({"size", "given"}));
  chess->add_option("--max-rows", max_rows);

  auto* roulette = app.add_subcommand("roulette", "Solve the roulette instance");
  roulette->add_flag("--variance", variance);

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo trials on an instance file");
  sim->add_option("file", file)->required();
  sim->add_option("--trials", trials);
  sim->add_option("--seed", seed);
  sim->add_flag("--replacement", replacement, "Draw with replacement");
  sim->add_flag("--alpha", use_alpha, "Honor the instance's alpha thresholds");

  auto* baseline = app.add_subcommand("baseline", "Classic-CCP inclusion-exclusion");
  baseline->add_option("--probs", probs, "Comma-separated drawing probabilities");
  baseline->add_option("--homogeneous", homogeneous, "Uniform case with h types");
  baseline->add_option("--cap", cap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      solve_instance(load_instance_file(file), global, use_alpha, variance, goals_n,
                     dec_options());
    } else if (tau_cmd->parsed()) {
      const Instance inst = load_instance_file(file);
      const RowDecomposition dec = decompose(reduce_goals(inst), dec_options());
      const TauVector tau = tau_vector(dec);
      BigInt total(0);
      for (const auto& t : tau.counts) total += t;
      std::cout << "w = " << inst.width() << "  h = " << inst.goal_count() << "\n";
      std::cout << "rows = " << dec.rows.size() << "\n";
      std::cout << "|Tr| = " << total.get_str() << "\n";
      std::cout << "tau = " << joined_counts(tau.counts) << "\n";
      if (dump) std::cout << render_decomposition(dec);
    } else if (trans->parsed()) {
      const Instance inst = load_instance_file(file);
      const AlphaVector alpha = alpha_or_default(inst);
      TransversoulOptions options;
      options.strategy = strategy == "enumerate" ? TransversoulStrategy::Enumerate
                         : strategy == "reduce"  ? TransversoulStrategy::Reduce
                                                 : TransversoulStrategy::Auto;
      const TVector counts = count_transversouls(inst, alpha, options);
      const QVector q = success_probabilities(counts, inst.width());
      std::cout << "alpha =";
      for (int a : alpha.thresholds) std::cout << " " << a;
      std::cout << "\n";
      std::cout << "T = " << joined_counts(counts.counts) << "\n";
      std::cout << "Q =";
      for (const auto& value : q.values) std::cout << " " << to_fixed(value, global.decimals);
      std::cout << "\n";
    } else if (bench->parsed()) {
      std::cout << benchmark_csv(run_benchmark(h_list, cap));
    } else if (chess->parsed()) {
      ChessSpec spec;
      spec.piece = piece == "queen" ? ChessPiece::Queen
                   : piece == "rook" ? ChessPiece::Rook
                                     : ChessPiece::King;
      spec.variant = variant == "closed" ? ChessVariant::Closed : ChessVariant::Open;
      const Instance inst = build_chess(spec);
      std::cout << piece << " (" << variant << ")\n";
      if (simulate_trials > 0) {
        const SimSummary without = simulate(inst, false, std::nullopt, simulate_trials, seed);
        const SimSummary with = simulate(inst, true, std::nullopt, simulate_trials, seed + 1);
        std::cout << "ℓ_nr ≈ " << without.mean << " (se " << without.standard_error
                  << ")\n";
        std::cout << "ℓ_r ≈ " << with.mean << " (se " << with.standard_error << ")\n";
      } else {
        solve_instance(inst, global, false, variance, std::nullopt, dec_options());
      }
    } else if (roulette->parsed()) {
      solve_instance(build_roulette(), global, false, variance, std::nullopt,
                     DecomposeOptions{});
    } else if (sim->parsed()) {
      const Instance inst = load_instance_file(file);
      std::optional<AlphaVector> alpha;
      if (use_alpha) alpha = alpha_or_default(inst);
      print_summary(simulate(inst, replacement, alpha, trials, seed));
    } else if (baseline->parsed()) {
      if (homogeneous > 0) {
        std::cout << fraction_line("expected length", homogeneous_length(homogeneous),
                                   global.decimals)
                  << "\n";
      } else if (!probs.empty()) {
        std::vector<BigRational> p;
        std::string token;
        std::istringstream stream(probs);
        while (std::getline(stream, token, ',')) p.push_back(parse_rational(token));
        std::cout << fraction_line("expected length", incl_excl_length(p, cap), global.decimals)
                  << "\n";
      } else {
        throw ValidationError("baseline needs --probs or --homogeneous");
      }
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
