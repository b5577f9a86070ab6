#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qrc/dataio.hpp"
#include "qrc/sweep.hpp"

namespace {

qrc::Dataset load_dataset(const std::string& arg) {
  if (arg.rfind("synthetic:", 0) == 0) {
    const std::uint64_t seed = std::stoull(arg.substr(10));
    return qrc::dataset_from_synthetic(471, seed);
  }
  const qrc::DailyTable daily = qrc::load_daily_csv(arg);
  const qrc::WeeklyTable weekly = qrc::aggregate_weekly(daily);
  if (!weekly.filled_weeks.empty()) {
    std::cerr << "note: " << weekly.filled_weeks.size()
              << " empty week(s) filled by carry-forward\n";
  }
  return qrc::dataset_from_weekly(weekly);
}

int run_sweep_command(const std::string& plan_arg, const std::string& data_arg,
                      const std::string& out_dir, int workers, int sims_override,
                      std::uint64_t seed_override, bool seed_given) {
  qrc::SweepPlan plan = qrc::is_preset_name(plan_arg) ? qrc::preset_plan(plan_arg)
                                                      : qrc::load_plan(plan_arg);
  if (sims_override > 0) plan.n_sims = sims_override;
  if (seed_given) plan.base_seed = seed_override;

  const qrc::Dataset dataset = load_dataset(data_arg);
  std::filesystem::create_directories(out_dir);
  const auto dir = std::filesystem::path(out_dir);

  const auto results =
      qrc::run_sweep(plan, dataset, (dir / "results.csv").string(), workers);
  if (results.empty()) {
    std::cerr << "no feasible configurations in the plan\n";
    return 2;
  }
  const auto summary = qrc::aggregate(results);
  qrc::write_summary_csv(summary, (dir / "summary.csv").string());

  std::vector<std::int64_t> ising_counts;
  for (qrc::ReservoirKind kind : plan.families) {
    if (kind == qrc::ReservoirKind::Ising) {
      ising_counts = qrc::ising_g3_counts(plan.n_sims, plan.qubit_counts.front(),
                                          plan.ising_js, plan.ising_ratio,
                                          plan.ising_time, plan.base_seed,
                                          /*trotter_steps=*/0, /*epsilon=*/1e-3);
      break;
    }
  }
  qrc::emit_plotdata(summary, ising_counts, out_dir, plan.with_regressors);
  std::cout << "wrote " << results.size() << " result rows to "
            << (dir / "results.csv").string() << '\n';
  return 0;
}

int run_ising_count_command(int sims, int qubits, double js, double ratio,
                            double time, double eps, int trotter, double c0,
                            double c1, std::uint64_t seed, const std::string& out_dir) {
  const auto counts =
      qrc::ising_g3_counts(sims, qubits, js, ratio, time, seed, trotter, eps, c0, c1);
  double mean = 0.0;
  for (auto c : counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(counts.size());
  qrc::emit_plotdata({}, counts, out_dir, false);
  std::cout << "mean G3 gate count over " << sims << " simulations: " << mean
            << " (written to " << out_dir << "/fig3.csv)\n";
  return 0;
}

int run_predict_command(const std::string& family, int gates, int qubits, int n_v,
                        int washout, std::uint64_t seed, bool with_regressors,
                        double gamma, const std::string& data_arg,
                        const std::string& out_file) {
  qrc::SweepPlan plan;
  plan.families = {qrc::reservoir_kind_from_string(family)};
  plan.gate_counts = {gates};
  plan.qubit_counts = {qubits};
  plan.n_sims = 1;
  plan.n_v = n_v;
  plan.washout = washout;
  plan.with_regressors = with_regressors;
  plan.gamma = gamma;

  const qrc::Dataset dataset = load_dataset(data_arg);
  qrc::RunSpec spec;
  spec.kind = plan.families.front();
  spec.gate_count = gates;
  spec.n_qubits = qubits;
  spec.seed = seed;
  const qrc::RunOutcome outcome = qrc::run_forecast(spec, plan, dataset);

  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
  out << "week,actual,predicted\n";
  const auto len = dataset.series.size();
  const auto test_start = static_cast<std::size_t>(dataset.split.val_end);
  char buf[64];
  for (std::size_t t = test_start; t < len; ++t) {
    out << qrc::to_string(dataset.series.weeks[t]);
    std::snprintf(buf, sizeof(buf), "%.17g", dataset.series.values[t]);
    out << ',' << buf;
    std::snprintf(buf, sizeof(buf), "%.17g",
                  outcome.test.predictions[static_cast<Eigen::Index>(t - test_start)]);
    out << ',' << buf << '\n';
  }

  // Keep the sampled evolution next to the predictions for provenance.
  std::ofstream prov(out_file + ".evolution.txt");
  if (spec.kind == qrc::ReservoirKind::Ising) {
    prov << qrc::ising_to_text(qrc::sample_ising(qubits, plan.ising_js,
                                                 plan.ising_ratio, seed,
                                                 plan.ising_time));
  } else {
    qrc::Family fam = qrc::family_from_string(qrc::to_string(spec.kind));
    prov << qrc::circuit_to_text(qrc::sample_circuit(fam, qubits, gates, seed));
  }

  std::cout << "test MAE " << outcome.test.mae << " EUR/kg, test MDA "
            << outcome.test.mda << "; predictions in " << out_file << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-reservoir time-series forecasting harness"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run an experiment grid");
  std::string plan_arg, data_arg = "synthetic:1", out_dir = "out";
  int workers = 1, sims_override = 0;
  std::uint64_t seed_override = 0;
  sweep->add_option("--plan", plan_arg,
                    "Plan file or preset (paper-fig2, paper-fig4, paper-fig5)")
      ->required();
  sweep->add_option("--data", data_arg, "Daily CSV path or synthetic:SEED");
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_option("--workers", workers, "Concurrent simulations");
  sweep->add_option("--sims", sims_override, "Override simulations per config");
  auto* seed_opt = sweep->add_option("--seed", seed_override, "Override base seed");

  // ising-count
  auto* icount = app.add_subcommand("ising-count",
                                    "G3-gate-count estimates for Ising evolutions");
  int ic_sims = 100, ic_qubits = 7, ic_trotter = 0;
  double ic_js = 1.0, ic_ratio = 0.1, ic_time = 10.0, ic_eps = 1e-3, ic_c0 = 4.0,
         ic_c1 = 3.0;
  std::uint64_t ic_seed = 1;
  std::string ic_out = "out";
  icount->add_option("--sims", ic_sims, "Number of sampled evolutions");
  icount->add_option("--qubits", ic_qubits, "Qubit count");
  icount->add_option("--js", ic_js, "Coupling scale");
  icount->add_option("--ratio", ic_ratio, "Field/coupling ratio");
  icount->add_option("--time", ic_time, "Evolution time");
  icount->add_option("--eps", ic_eps, "Rz synthesis accuracy");
  icount->add_option("--trotter", ic_trotter, "Trotter steps (0 = auto)");
  icount->add_option("--c0", ic_c0, "Rz cost offset");
  icount->add_option("--c1", ic_c1, "Rz cost slope per bit of accuracy");
  icount->add_option("--seed", ic_seed, "Base seed");
  icount->add_option("--out", ic_out, "Output directory");

  // predict
  auto* predict = app.add_subcommand("predict", "Single forecasting run");
  std::string pr_family = "G3", pr_data = "synthetic:1", pr_out = "prediction.csv";
  int pr_gates = 150, pr_qubits = 7, pr_nv = 2, pr_washout = 10;
  std::uint64_t pr_seed = 1;
  bool pr_regressors = false;
  double pr_gamma = -1.0;
  predict->add_option("--family", pr_family, "Reservoir type (G1..DN, ISING)");
  predict->add_option("--gates", pr_gates, "Gate count (sized families)");
  predict->add_option("--qubits", pr_qubits, "Qubit count");
  predict->add_option("--nv", pr_nv, "Readouts per step");
  predict->add_option("--washout", pr_washout, "Initial steps dropped");
  predict->add_option("--seed", pr_seed, "Run seed");
  predict->add_flag("--regressors", pr_regressors, "Feed regressor columns");
  predict->add_option("--gamma", pr_gamma, "Ridge penalty (negative = scenario default)");
  predict->add_option("--data", pr_data, "Daily CSV path or synthetic:SEED");
  predict->add_option("--out", pr_out, "Prediction CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep_command(plan_arg, data_arg, out_dir, workers, sims_override,
                               seed_override, seed_opt->count() > 0);
    }
    if (icount->parsed()) {
      return run_ising_count_command(ic_sims, ic_qubits, ic_js, ic_ratio, ic_time,
                                     ic_eps, ic_trotter, ic_c0, ic_c1, ic_seed,
                                     ic_out);
    }
    if (predict->parsed()) {
      return run_predict_command(pr_family, pr_gates, pr_qubits, pr_nv, pr_washout,
                                 pr_seed, pr_regressors, pr_gamma, pr_data, pr_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
