#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrc/dataio.hpp"
#include "qrc/gates.hpp"
#include "qrc/readout.hpp"
#include "qrc/reservoir.hpp"

namespace qrc {

// The seven circuit families plus the Ising evolution, as selectable
// reservoir types in an experiment grid.
enum class ReservoirKind { G1, G2, G3, MG, D2, D3, DN, Ising };

std::string to_string(ReservoirKind kind);
ReservoirKind reservoir_kind_from_string(const std::string& name);
bool is_sized_circuit_kind(ReservoirKind kind);  // gate count applies (G1/G2/G3/MG)

struct SweepPlan {
  std::vector<ReservoirKind> families;
  std::vector<int> gate_counts;   // ignored by D2/D3/DN/Ising
  std::vector<int> qubit_counts;
  int n_sims = 20;
  bool with_regressors = false;
  std::uint64_t base_seed = 1;
  // Negative means "scenario default": 1e-10 without regressors, 0.1 with.
  double gamma = -1.0;
  int n_v = 2;
  int input_qubits = 1;
  int washout = 10;
  double ising_time = 10.0;
  double ising_js = 1.0;
  double ising_ratio = 0.1;
};

double effective_gamma(const SweepPlan& plan);

// Line-oriented "key = value" plan files; '#' starts a comment.
SweepPlan parse_plan_text(const std::string& text);
SweepPlan load_plan(const std::string& path);

// Built-in grids: paper-fig2 (all families vs gate count at N=7),
// paper-fig4 (G3@150 vs qubit count), paper-fig5 (fig2 with regressors).
SweepPlan preset_plan(const std::string& name);
bool is_preset_name(const std::string& name);

// A prepared experiment input: weekly series, aligned regressors, split.
struct Dataset {
  PriceSeries series;
  Eigen::MatrixXd regressors;  // one row per week; zero cols when absent
  std::vector<std::string> regressor_names;
  SplitSpec split;
};

Dataset dataset_from_weekly(const WeeklyTable& weekly);
Dataset dataset_from_synthetic(int length, std::uint64_t seed,
                               const SynthRecipe& recipe = {});

struct RunSpec {
  ReservoirKind kind = ReservoirKind::G3;
  int gate_count = 150;
  int n_qubits = 7;
  std::uint64_t seed = 0;
};

struct RunOutcome {
  ForecastReport val;
  ForecastReport test;
  double train_mae = 0.0;       // EUR/kg, fit diagnostics
  int recorded_gate_count = 0;  // fixed-structure kinds report their own size
};

// Non-empty when the combination cannot run (e.g. D3 on 2 qubits).
std::optional<std::string> infeasible_reason(ReservoirKind kind, int n_qubits,
                                             const SweepPlan& plan);

// One full train/validate/test pass: scale on the training split, run the
// reservoir over the whole series, fit the ridge readout, report metrics on
// the validation and test splits.
RunOutcome run_forecast(const RunSpec& spec, const SweepPlan& plan,
                        const Dataset& dataset);

struct ExperimentResult {
  ReservoirKind family = ReservoirKind::G3;
  int gate_count = 0;
  int n_qubits = 0;
  std::uint64_t seed = 0;
  std::string split;  // "val" or "test"
  double mae_scaled = 0.0;
  double mae_unscaled = 0.0;
  double mda = 0.0;
};

// Stable per-run seed from the configuration coordinates; adding grid points
// never changes existing runs' seeds.
std::uint64_t run_seed(std::uint64_t base_seed, ReservoirKind kind,
                       int gate_count, int n_qubits, int sim_index);

// Execute the whole grid. Rows stream to out_csv in deterministic plan order
// as runs complete, regardless of worker count. Infeasible combinations are
// skipped with a note on stderr.
std::vector<ExperimentResult> run_sweep(const SweepPlan& plan, const Dataset& dataset,
                                        const std::string& out_csv, int workers = 1);

struct SummaryRow {
  ReservoirKind family = ReservoirKind::G3;
  int gate_count = 0;
  int n_qubits = 0;
  std::string split;
  int count = 0;
  double mae_scaled_mean = 0.0, mae_scaled_std = 0.0;
  double mae_unscaled_mean = 0.0, mae_unscaled_std = 0.0;
  double mda_mean = 0.0, mda_std = 0.0;
};

// Mean and sample standard deviation per (family, gate_count, n_qubits,
// split), groups in first-appearance order.
std::vector<SummaryRow> aggregate(const std::vector<ExperimentResult>& results);

void write_summary_csv(const std::vector<SummaryRow>& summary, const std::string& path);

// Gate-count estimates for n_sims independently sampled Ising evolutions.
// trotter_steps <= 0 selects the per-sample default from the error-bound
// model.
std::vector<std::int64_t> ising_g3_counts(int n_sims, int n_qubits, double js,
                                          double ratio, double time,
                                          std::uint64_t base_seed,
                                          int trotter_steps, double epsilon,
                                          double c0 = 4.0, double c1 = 3.0);

// Plot-ready CSVs: gate-count sweep (fig2 or fig5 style depending on the
// regressor scenario), qubit sweep (fig4 style), Ising gate-count histogram
// with a moment-matched log-normal fit (fig3 style), plus a README describing
// every column. Refuses to write when both inputs are empty.
void emit_plotdata(const std::vector<SummaryRow>& summary,
                   const std::vector<std::int64_t>& ising_counts,
                   const std::string& out_dir, bool with_regressors);

}  // namespace qrc
