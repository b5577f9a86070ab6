#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace qrc {

// ISO-8601 year/week pair.
struct WeekId {
  int year = 0;
  int week = 0;

  friend auto operator<=>(const WeekId&, const WeekId&) = default;
};

std::string to_string(const WeekId& id);

// Days since 1970-01-01 for a proleptic Gregorian date, and back.
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);
WeekId iso_week(std::int64_t days);

// Weekly mean prices in chronological order, no gaps.
struct PriceSeries {
  std::vector<WeekId> weeks;
  std::vector<double> values;  // EUR/kg, nonnegative

  std::size_t size() const { return values.size(); }
};

struct DailyRecord {
  std::int64_t day = 0;  // days since epoch
  double price = 0.0;
  std::vector<double> extras;  // regressor columns, file order
};

struct DailyTable {
  std::vector<DailyRecord> records;
  std::vector<std::string> extra_names;
};

// Parse "date,price[,name...]" with ISO dates and '.' decimals. Throws with
// the offending line number on malformed input.
DailyTable load_daily_csv(const std::string& path);

struct WeeklyTable {
  PriceSeries series;
  Eigen::MatrixXd regressors;  // one row per week; zero columns when absent
  std::vector<std::string> regressor_names;
  std::vector<int> filled_weeks;  // indices produced by carry-forward
  std::vector<int> week_counts;   // daily records per week (0 where filled)
};

// Mean per ISO week; empty weeks inside the span are carried forward from
// the previous week and flagged.
WeeklyTable aggregate_weekly(const DailyTable& table);

void write_weekly_csv(const WeeklyTable& table, const std::string& path);

// Linear [min, max] -> [0, 1] map fit on the training rows only.
struct Scaler {
  double min = 0.0;
  double max = 1.0;

  double apply(double v) const { return (v - min) / (max - min); }
  double apply_clipped(double v) const {
    const double s = apply(v);
    return s < 0.0 ? 0.0 : s > 1.0 ? 1.0 : s;
  }
  double invert(double s) const { return min + s * (max - min); }
};

// Chronological split given as exclusive end indices of train and validation.
struct SplitSpec {
  int train_end = 0;
  int val_end = 0;
};

Scaler fit_scaler(const std::vector<double>& values, const SplitSpec& split);

// 356/53/62 when the series is long enough for it, otherwise a proportional
// 0.756/0.113/0.131 split (half-up rounding). Series shorter than 30 points
// are rejected.
SplitSpec default_split(std::size_t length);

// Synthetic weekly price generator: seasonal cycle + an AR(2) component
// (complex roots give quasi-cycles of a few months, so direction depends on
// several past values, not just the last one) + occasional jumps, floored at
// a small positive price. Regressor columns are noisy copies of the next
// week's price, so they carry genuine look-ahead information with
// per-column noise levels.
struct SynthRecipe {
  double base_level = 1.1;
  double seasonal_amp = 0.40;
  double seasonal_amp2 = 0.12;
  double ar_coeff = 0.134;
  double ar_coeff2 = -0.81;
  double ar_sigma = 0.05;
  double jump_prob = 0.04;
  double jump_scale = 0.30;
  double price_floor = 0.05;
  int n_regressors = 9;
  double regressor_noise_min = 0.01;
  double regressor_noise_max = 0.20;
};

struct SyntheticSeries {
  PriceSeries series;
  Eigen::MatrixXd regressors;
  std::vector<std::string> regressor_names;
};

SyntheticSeries synthesize_series(int length, std::uint64_t seed,
                                  const SynthRecipe& recipe = {});

}  // namespace qrc
