#include "qrc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qrc/rng.hpp"

namespace qrc {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i =  0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

}  // namespace

std::string to_string(ReservoirKind kind) {
  switch (kind) {
    case ReservoirKind::G1: return "G1";
    case ReservoirKind::G2: return "G2";
    case ReservoirKind::G3: return "G3";
    case ReservoirKind::MG: return "MG";
    case ReservoirKind::D2: return "D2";
    case ReservoirKind::D3: return "D3";
    case ReservoirKind::DN: return "DN";
    case ReservoirKind::Ising: return "ISING";
  }
  throw std::logic_error("unknown reservoir kind");
}

ReservoirKind reservoir_kind_from_string(const std::string& name) {
  if (name == "G1") return ReservoirKind::G1;
  if (name == "G2") return ReservoirKind::G2;
  if (name == "G3") return ReservoirKind::G3;
  if (name == "MG") return ReservoirKind::MG;
  if (name == "D2") return ReservoirKind::D2;
  if (name == "D3") return ReservoirKind::D3;
  if (name == "DN") return ReservoirKind::DN;
  if (name == "ISING" || name == "Ising") return ReservoirKind::Ising;
  throw std::invalid_argument("unknown reservoir type '" + name + "'");
}

bool is_sized_circuit_kind(ReservoirKind kind) {
  return kind == ReservoirKind::G1 || kind == ReservoirKind::G2 ||
         kind == ReservoirKind::G3 || kind == ReservoirKind::MG;
}

double effective_gamma(const SweepPlan& plan) {
  if (plan.gamma >= 0.0) return plan.gamma;
  return plan.with_regressors ? 0.1 : 1e-10;
}

namespace {

Family family_of(ReservoirKind kind) {
  switch (kind) {
    case ReservoirKind::G1: return Family::G1;
    case ReservoirKind::G2: return Family::G2;
    case ReservoirKind::G3: return Family::G3;
    case ReservoirKind::MG: return Family::MG;
    case ReservoirKind::D2: return Family::D2;
    case ReservoirKind::D3: return Family::D3;
    case ReservoirKind::DN: return Family::DN;
    case ReservoirKind::Ising: break;
  }
  throw std::logic_error("not a circuit kind");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string item = text.substr(pos, next - pos);
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    pos = next + 1;
  }
  return out;
}

}  // namespace

SweepPlan parse_plan_text(const std::string& text) {
  SweepPlan plan;
  plan.families.clear();
  plan.gate_counts.clear();
  plan.qubit_counts.clear();

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw std::invalid_argument("plan line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "families") {
        for (const auto& f : split_list(value)) {
          plan.families.push_back(reservoir_kind_from_string(f));
        }
      } else if (key == "gate_counts") {
        for (const auto& g : split_list(value)) plan.gate_counts.push_back(std::stoi(g));
      } else if (key == "qubit_counts") {
        for (const auto& q : split_list(value)) plan.qubit_counts.push_back(std::stoi(q));
      } else if (key == "n_sims") {
        plan.n_sims = std::stoi(value);
      } else if (key == "scenario") {
        if (value == "no_regressors") plan.with_regressors = false;
        else if (value == "with_regressors") plan.with_regressors = true;
        else throw std::invalid_argument("scenario must be no_regressors or with_regressors");
      } else if (key == "base_seed") {
        plan.base_seed = std::stoull(value);
      } else if (key == "gamma") {
        plan.gamma = std::stod(value);
      } else if (key == "n_v") {
        plan.n_v = std::stoi(value);
      } else if (key == "input_qubits") {
        plan.input_qubits = std::stoi(value);
      } else if (key == "washout") {
        plan.washout = std::stoi(value);
      } else if (key == "ising_time") {
        plan.ising_time = std::stod(value);
      } else if (key == "ising_js") {
        plan.ising_js = std::stod(value);
      } else if (key == "ising_ratio") {
        plan.ising_ratio = std::stod(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("plan line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  if (plan.families.empty()) throw std::invalid_argument("plan sets no families");
  if (plan.qubit_counts.empty()) plan.qubit_counts = {7};
  if (plan.gate_counts.empty()) {
    for (ReservoirKind k : plan.families) {
      if (is_sized_circuit_kind(k)) {
        throw std::invalid_argument("plan needs gate_counts for sized families");
      }
    }
    plan.gate_counts = {0};
  }
  if (plan.n_sims < 1) throw std::invalid_argument("n_sims must be >= 1");
  return plan;
}

SweepPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open plan '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_plan_text(buf.str());
}

bool is_preset_name(const std::string& name) {
  return name == "paper-fig2" || name == "paper-fig4" || name == "paper-fig5" ||
         name == "fig2" || name == "fig4" || name == "fig5";
}

SweepPlan preset_plan(const std::string& name) {
  SweepPlan plan;
  plan.families.clear();
  const std::string id = name.rfind("paper-", 0) == 0 ? name.substr(6) : name;
  if (id == "fig2" || id == "fig5") {
    plan.families = {ReservoirKind::G1, ReservoirKind::G2, ReservoirKind::G3,
                     ReservoirKind::MG, ReservoirKind::D2, ReservoirKind::D3,
                     ReservoirKind::DN, ReservoirKind::Ising};
    plan.gate_counts = {10, 20, 40, 60, 100, 150, 200, 300, 400, 600, 800, 1000};
    plan.qubit_counts = {7};
    plan.with_regressors = (id == "fig5");
  } else if (id == "fig4") {
    plan.families = {ReservoirKind::G3};
    plan.gate_counts = {150};
    plan.qubit_counts = {2, 3, 4, 5, 6, 7, 8};
    plan.with_regressors = false;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return plan;
}

Dataset dataset_from_weekly(const WeeklyTable& weekly) {
  Dataset ds;
  ds.series = weekly.series;
  ds.regressors = weekly.regressors;
  ds.regressor_names = weekly.regressor_names;
  ds.split = default_split(ds.series.size());
  return ds;
}

Dataset dataset_from_synthetic(int length, std::uint64_t seed,
                               const SynthRecipe& recipe) {
  SyntheticSeries synth = synthesize_series(length, seed, recipe);
  Dataset ds;
  ds.series = std::move(synth.series);
  ds.regressors = std::move(synth.regressors);
  ds.regressor_names = std::move(synth.regressor_names);
  ds.split = default_split(ds.series.size());
  return ds;
}

std::optional<std::string> infeasible_reason(ReservoirKind kind, int n_qubits,
                                             const SweepPlan& plan) {
  if (n_qubits < 2) return "a reservoir needs at least 2 qubits";
  if (plan.input_qubits >= n_qubits) {
    return "input qubits (" + std::to_string(plan.input_qubits) +
           ") leave no memory qubits at N=" + std::to_string(n_qubits);
  }
  if (kind == ReservoirKind::D3 && n_qubits < 3) return "D3 needs at least 3 qubits";
  return std::nullopt;
}

std::uint64_t run_seed(std::uint64_t base_seed, ReservoirKind kind,
                       int gate_count, int n_qubits, int sim_index) {
  std::uint64_t h = fnv1a64(&base_seed, sizeof(base_seed));
  const std::string name = to_string(kind);
  h = fnv1a64(name.data(), name.size(), h);
  const std::int64_t coords[3] = {gate_count, n_qubits, sim_index};
  return fnv1a64(coords, sizeof(coords), h);
}

namespace {

int recorded_gate_count(ReservoirKind kind, int requested, int n_qubits) {
  switch (kind) {
    case ReservoirKind::D2: return binomial(n_qubits, 2);
    case ReservoirKind::D3: return binomial(n_qubits, 3);
    case ReservoirKind::DN: return 1;
    case ReservoirKind::Ising: return 0;
    default: return requested;
  }
}

}  // namespace

RunOutcome run_forecast(const RunSpec& spec, const SweepPlan& plan,
                        const Dataset& dataset) {
  if (auto reason = infeasible_reason(spec.kind, spec.n_qubits, plan)) {
    throw std::invalid_argument(*reason);
  }
  const std::size_t len = dataset.series.size();
  const SplitSpec split = dataset.split;
  if (!(split.train_end > 0 && split.train_end < split.val_end &&
        static_cast<std::size_t>(split.val_end) < len)) {
    throw std::invalid_argument("invalid split");
  }
  const int w = plan.washout;
  if (split.train_end - 1 - w < 2) {
    throw std::invalid_argument("washout of " + std::to_string(w) +
                                " leaves too few training pairs");
  }

  ReservoirConfig config;
  config.n_qubits = spec.n_qubits;
  config.input_qubits = plan.input_qubits;
  config.n_v = plan.n_v;
  config.washout = w;
  config.seed = spec.seed;
  if (spec.kind == ReservoirKind::Ising) {
    config.evolution = sample_ising(spec.n_qubits, plan.ising_js, plan.ising_ratio,
                                    spec.seed, plan.ising_time);
  } else {
    config.evolution =
        sample_circuit(family_of(spec.kind), spec.n_qubits, spec.gate_count, spec.seed);
  }

  const Scaler scaler = fit_scaler(dataset.series.values, split);
  std::vector<double> encoded(len);
  std::vector<double> scaled(len);
  for (std::size_t t = 0; t < len; ++t) {
    scaled[t] = scaler.apply(dataset.series.values[t]);
    encoded[t] = scaler.apply_clipped(dataset.series.values[t]);
  }

  // Regressors enter the readout only; rescale each column on the training
  // rows so its magnitude is comparable to the reservoir features.
  Eigen::MatrixXd regressors;
  const bool use_regressors = plan.with_regressors && dataset.regressors.cols() > 0;
  if (use_regressors) {
    regressors = dataset.regressors;
    for (Eigen::Index c = 0; c < regressors.cols(); ++c) {
      const auto train = regressors.col(c).head(split.train_end);
      const double lo = train.minCoeff();
      const double hi = train.maxCoeff();
      if (hi > lo) {
        regressors.col(c) = (regressors.col(c).array() - lo) / (hi - lo);
      } else {
        regressors.col(c).setZero();
      }
    }
  }

  const FeatureMatrix features =
      run_series(encoded, config, use_regressors ? &regressors : nullptr,
                 use_regressors ? &dataset.regressor_names : nullptr);

  // Feature row r describes the state after ingesting step t = w + r; its
  // prediction target is the next value. A pair belongs to the split that
  // owns the target index t + 1.
  const auto rows = static_cast<Eigen::Index>(len) - w;
  Eigen::VectorXd targets(rows - 1), prev(rows - 1);
  for (Eigen::Index r = 0; r + 1 < rows; ++r) {
    targets[r] = scaled[static_cast<std::size_t>(w + r + 1)];
    prev[r] = scaled[static_cast<std::size_t>(w + r)];
  }
  const Eigen::Index train_rows = split.train_end - 1 - w;
  const Eigen::Index val_rows = split.val_end - split.train_end;
  const Eigen::Index test_rows = static_cast<Eigen::Index>(len) - split.val_end;

  const Eigen::MatrixXd& x = features.values;
  const RidgeModel model = fit_ridge(x.topRows(train_rows), targets.head(train_rows),
                                     effective_gamma(plan));

  RunOutcome outcome;
  outcome.recorded_gate_count = recorded_gate_count(spec.kind, spec.gate_count, spec.n_qubits);
  outcome.train_mae = evaluate(model, x.topRows(train_rows), targets.head(train_rows),
                               prev.head(train_rows), scaler)
                          .mae;
  outcome.val = evaluate(model, x.middleRows(train_rows, val_rows),
                         targets.segment(train_rows, val_rows),
                         prev.segment(train_rows, val_rows), scaler);
  outcome.test = evaluate(model, x.middleRows(train_rows + val_rows, test_rows),
                          targets.segment(train_rows + val_rows, test_rows),
                          prev.segment(train_rows + val_rows, test_rows), scaler);
  return outcome;
}

namespace {

void write_result_row(std::ofstream& out, const ExperimentResult& r) {
  out << to_string(r.family) << ',' << r.gate_count << ',' << r.n_qubits << ','
      << r.seed << ',' << r.split << ',' << fmt_real(r.mae_scaled) << ','
      << fmt_real(r.mae_unscaled) << ',' << fmt_real(r.mda) << '\n';
}

}  // namespace

std::vector<ExperimentResult> run_sweep(const SweepPlan& plan, const Dataset& dataset,
                                        const std::string& out_csv, int workers) {
  if (plan.families.empty() || plan.qubit_counts.empty() || plan.gate_counts.empty()) {
    throw std::invalid_argument("plan grids must be nonempty");
  }
  if (plan.n_sims < 1) throw std::invalid_argument("n_sims must be >= 1");
  if (workers < 1) workers = 1;

  struct Item {
    RunSpec spec;
  };
  std::vector<Item> items;
  for (ReservoirKind kind : plan.families) {
    // Fixed-structure reservoirs contribute one configuration, not one per
    // grid entry.
    const std::vector<int> counts =
        is_sized_circuit_kind(kind) ? plan.gate_counts : std::vector<int>{0};
    for (int gc : counts) {
      for (int nq : plan.qubit_counts) {
        if (auto reason = infeasible_reason(kind, nq, plan)) {
          std::cerr << "skipping " << to_string(kind) << " at N=" << nq << ": "
                    << *reason << '\n';
          continue;
        }
        const int recorded = recorded_gate_count(kind, gc, nq);
        for (int sim = 0; sim < plan.n_sims; ++sim) {
          Item item;
          item.spec.kind = kind;
          item.spec.gate_count = recorded;
          item.spec.n_qubits = nq;
          item.spec.seed = run_seed(plan.base_seed, kind, recorded, nq, sim);
          items.push_back(item);
        }
      }
    }
  }

  std::vector<RunOutcome> outcomes(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::vector<std::atomic<bool>> done(items.size());
  for (auto& d : done) d.store(false, std::memory_order_relaxed);
  std::atomic<std::size_t> next{0};

  auto worker_fn = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) break;
      try {
        outcomes[i] = run_forecast(items[i].spec, plan, dataset);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      done[i].store(true, std::memory_order_release);
    }
  };

  std::vector<std::thread> pool;
  const int n_workers = std::min<std::size_t>(static_cast<std::size_t>(workers),
                                              std::max<std::size_t>(items.size(), 1));
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker_fn);

  std::ofstream out(out_csv);
  if (!out) {
    for (auto& th : pool) th.join();
    throw std::runtime_error("cannot write '" + out_csv + "'");
  }
  out << "family,gate_count,n_qubits,seed,split,mae_scaled,mae_unscaled,mda\n";

  std::vector<ExperimentResult> results;
  results.reserve(items.size() * 2);
  std::exception_ptr failure;
  for (std::size_t i = 0; i < items.size(); ++i) {
    while (!done[i].load(std::memory_order_acquire)) {
      std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
    if (errors[i]) {
      failure = errors[i];
      break;
    }
    const Item& item = items[i];
    const RunOutcome& oc = outcomes[i];
    for (const char* split_name : {"val", "test"}) {
      const ForecastReport& rep = split_name == std::string("val") ? oc.val : oc.test;
      ExperimentResult row;
      row.family = item.spec.kind;
      row.gate_count = oc.recorded_gate_count;
      row.n_qubits = item.spec.n_qubits;
      row.seed = item.spec.seed;
      row.split = split_name;
      row.mae_scaled = rep.mae_scaled;
      row.mae_unscaled = rep.mae;
      row.mda = rep.mda;
      write_result_row(out, row);
      results.push_back(std::move(row));
    }
    out.flush();
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<SummaryRow> aggregate(const std::vector<ExperimentResult>& results) {
  if (results.empty()) throw std::invalid_argument("nothing to aggregate");
  struct Acc {
    SummaryRow row;
    std::vector<double> mae_s, mae_u, mda_v;
  };
  std::vector<Acc> groups;
  for (const auto& r : results) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Acc& g) {
      return g.row.family == r.family && g.row.gate_count == r.gate_count &&
             g.row.n_qubits == r.n_qubits && g.row.split == r.split;
    });
    if (it == groups.end()) {
      Acc acc;
      acc.row.family = r.family;
      acc.row.gate_count = r.gate_count;
      acc.row.n_qubits = r.n_qubits;
      acc.row.split = r.split;
      groups.push_back(std::move(acc));
      it = groups.end() - 1;
    }
    it->mae_s.push_back(r.mae_scaled);
    it->mae_u.push_back(r.mae_unscaled);
    it->mda_v.push_back(r.mda);
  }

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto sample_std = [&](const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
  };

  std::vector<SummaryRow> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    g.row.count = static_cast<int>(g.mda_v.size());
    g.row.mae_scaled_mean = mean_of(g.mae_s);
    g.row.mae_scaled_std = sample_std(g.mae_s, g.row.mae_scaled_mean);
    g.row.mae_unscaled_mean = mean_of(g.mae_u);
    g.row.mae_unscaled_std = sample_std(g.mae_u, g.row.mae_unscaled_mean);
    g.row.mda_mean = mean_of(g.mda_v);
    g.row.mda_std = sample_std(g.mda_v, g.row.mda_mean);
    out.push_back(g.row);
  }
  return out;
}

void write_summary_csv(const std::vector<SummaryRow>& summary, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "family,gate_count,n_qubits,split,n,mae_scaled_mean,mae_scaled_std,"
         "mae_unscaled_mean,mae_unscaled_std,mda_mean,mda_std\n";
  for (const auto& row : summary) {
    out << to_string(row.family) << ',' << row.gate_count << ',' << row.n_qubits
        << ',' << row.split << ',' << row.count << ','
        << fmt_real(row.mae_scaled_mean) << ',' << fmt_real(row.mae_scaled_std) << ','
        << fmt_real(row.mae_unscaled_mean) << ',' << fmt_real(row.mae_unscaled_std)
        << ',' << fmt_real(row.mda_mean) << ',' << fmt_real(row.mda_std) << '\n';
  }
}

std::vector<std::int64_t> ising_g3_counts(int n_sims, int n_qubits, double js,
                                          double ratio, double time,
                                          std::uint64_t base_seed,
                                          int trotter_steps, double epsilon,
                                          double c0, double c1) {
  if (n_sims < 1) throw std::invalid_argument("n_sims must be >= 1");
  std::vector<std::int64_t> counts;
  counts.reserve(static_cast<std::size_t>(n_sims));
  for (int i = 0; i < n_sims; ++i) {
    const std::uint64_t seed = run_seed(base_seed, ReservoirKind::Ising, 0, n_qubits, i);
    const IsingSpec spec = sample_ising(n_qubits, js, ratio, seed, time);
    const int steps =
        trotter_steps > 0 ? trotter_steps : default_trotter_steps(spec, time);
    counts.push_back(estimate_g3_count(spec, time, steps, epsilon, c0, c1));
  }
  return counts;
}

void emit_plotdata(const std::vector<SummaryRow>& summary,
                   const std::vector<std::int64_t>& ising_counts,
                   const std::string& out_dir, bool with_regressors) {
  if (summary.empty() && ising_counts.empty()) {
    throw std::invalid_argument("nothing to emit: summary and gate counts are empty");
  }
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  std::ostringstream readme;
  readme << "# Plot data\n\n";

  if (!summary.empty()) {
    const std::string sweep_name = with_regressors ? "fig5.csv" : "fig2.csv";
    write_summary_csv(summary, (dir / sweep_name).string());
    readme << "## " << sweep_name << "\n"
           << "Metric means vs gate count, one row per (family, gate_count, "
              "n_qubits, split).\n"
           << "Scenario: " << (with_regressors ? "with" : "no") << " regressors. "
           << "Columns: family, gate_count (fixed-structure families report "
              "their own size; ISING reports 0), n_qubits, split (val/test), n "
              "(simulations), mae_scaled_mean/std, mae_unscaled_mean/std "
              "(EUR/kg), mda_mean/std.\n\n";

    std::vector<SummaryRow> qubit_rows;
    for (const auto& row : summary) {
      if (row.family == ReservoirKind::G3) qubit_rows.push_back(row);
    }
    std::stable_sort(qubit_rows.begin(), qubit_rows.end(),
                     [](const SummaryRow& a, const SummaryRow& b) {
                       return a.n_qubits < b.n_qubits;
                     });
    if (!qubit_rows.empty()) {
      write_summary_csv(qubit_rows, (dir / "fig4.csv").string());
      readme << "## fig4.csv\n"
             << "G3 rows from the same summary ordered by qubit count, for the "
                "metric-vs-N view. Same columns as above.\n\n";
    }
  }

  if (!ising_counts.empty()) {
    double mean = 0.0;
    for (auto c : ising_counts) mean += static_cast<double>(c);
    mean /= static_cast<double>(ising_counts.size());
    double var = 0.0;
    for (auto c : ising_counts) {
      var += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
    }
    var = ising_counts.size() > 1 ? var / static_cast<double>(ising_counts.size() - 1) : 0.0;
    // Moment-matched log-normal; its mean equals the sample mean by
    // construction.
    const double sigma2 = mean > 0.0 ? std::log(1.0 + var / (mean * mean)) : 0.0;
    const double mu = mean > 0.0 ? std::log(mean) - sigma2 / 2.0 : 0.0;

    std::ofstream out((dir / "fig3.csv").string());
    if (!out) throw std::runtime_error("cannot write fig3.csv");
    out << "sim,g3_gate_count,fit_mu,fit_sigma,fit_mean\n";
    for (std::size_t i = 0; i < ising_counts.size(); ++i) {
      out << i << ',' << ising_counts[i] << ',' << fmt_real(mu) << ','
          << fmt_real(std::sqrt(sigma2)) << ',' << fmt_real(mean) << '\n';
    }
    readme << "## fig3.csv\n"
           << "Per-simulation G3-gate-count estimates for the Ising evolution, "
              "with a moment-matched log-normal fit (fit_mu, fit_sigma in log "
              "space; fit_mean is the fitted distribution mean, repeated on "
              "every row).\n\n";
  }

  std::ofstream rd((dir / "README.md").string());
  if (!rd) throw std::runtime_error("cannot write plot-data README");
  rd << readme.str();
}

}  // namespace qrc
