#include "qrc/dataio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qrc/rng.hpp"

namespace qrc {

std::string to_string(const WeekId& id) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-W%02d", id.year, id.week);
  return buf;
}

std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t days, int& year, int& month, int& day) {
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  year = static_cast<int>(y + (month <= 2));
}

WeekId iso_week(std::int64_t days) {
  // ISO weeks run Monday..Sunday; the week belongs to the year holding its
  // Thursday. 1970-01-01 was a Thursday.
  const int dow = static_cast<int>(((days % 7) + 7 + 3) % 7) + 1;  // Mon=1..Sun=7
  const std::int64_t thursday = days + (4 - dow);
  int y, m, d;
  civil_from_days(thursday, y, m, d);
  const std::int64_t jan1 = days_from_civil(y, 1, 1);
  return WeekId{y, static_cast<int>((thursday - jan1) / 7 + 1)};
}

namespace {

std::int64_t parse_iso_date(const std::string& text, int line_no) {
  int y = 0, m = 0, d = 0;
  char dash1 = 0, dash2 = 0;
  std::istringstream in(text);
  if (!(in >> y >> dash1 >> m >> dash2 >> d) || dash1 != '-' || dash2 != '-' ||
      m < 1 || m > 12 || d < 1 || d > 31) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad date '" + text + "' (expected YYYY-MM-DD)");
  }
  return days_from_civil(y, m, d);
}

double parse_price(const std::string& text, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad number '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(',', pos);
    if (next == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return fields;
}

}  // namespace

DailyTable load_daily_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "date" || header[1] != "price") {
    throw std::runtime_error("'" + path + "': header must start with 'date,price'");
  }
  DailyTable table;
  table.extra_names.assign(header.begin() + 2, header.end());

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    DailyRecord rec;
    rec.day = parse_iso_date(fields[0], line_no);
    rec.price = parse_price(fields[1], line_no);
    if (rec.price < 0.0) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": negative price " + fields[1]);
    }
    for (std::size_t i = 2; i < fields.size(); ++i) {
      rec.extras.push_back(parse_price(fields[i], line_no));
    }
    table.records.push_back(std::move(rec));
  }
  return table;
}

WeeklyTable aggregate_weekly(const DailyTable& table) {
  if (table.records.empty()) throw std::invalid_argument("no records to aggregate");
  const std::size_t n_extra = table.extra_names.size();

  // Group by the Monday of each record's ISO week; Mondays are 7 days apart,
  // which makes gap detection trivial.
  auto monday_of = [](std::int64_t day) {
    const int dow = static_cast<int>(((day % 7) + 7 + 3) % 7);  // Mon=0..Sun=6
    return day - dow;
  };

  std::int64_t first = monday_of(table.records.front().day);
  std::int64_t last = first;
  for (const auto& rec : table.records) {
    const std::int64_t m = monday_of(rec.day);
    first = std::min(first, m);
    last = std::max(last, m);
  }
  const std::size_t n_weeks = static_cast<std::size_t>((last - first) / 7) + 1;

  std::vector<double> sums(n_weeks, 0.0);
  std::vector<int> counts(n_weeks, 0);
  Eigen::MatrixXd extra_sums = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(n_weeks), static_cast<Eigen::Index>(n_extra));
  for (const auto& rec : table.records) {
    const auto w = static_cast<std::size_t>((monday_of(rec.day) - first) / 7);
    sums[w] += rec.price;
    ++counts[w];
    for (std::size_t i = 0; i < n_extra; ++i) {
      extra_sums(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(i)) +=
          rec.extras[i];
    }
  }

  WeeklyTable out;
  out.regressor_names = table.extra_names;
  out.regressors.resize(static_cast<Eigen::Index>(n_weeks),
                        static_cast<Eigen::Index>(n_extra));
  out.week_counts = counts;
  for (std::size_t w = 0; w < n_weeks; ++w) {
    out.series.weeks.push_back(iso_week(first + static_cast<std::int64_t>(w) * 7));
    if (counts[w] > 0) {
      out.series.values.push_back(sums[w] / counts[w]);
      for (std::size_t i = 0; i < n_extra; ++i) {
        out.regressors(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(i)) =
            extra_sums(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(i)) /
            counts[w];
      }
    } else {
      out.series.values.push_back(out.series.values.back());
      if (n_extra > 0) {
        out.regressors.row(static_cast<Eigen::Index>(w)) =
            out.regressors.row(static_cast<Eigen::Index>(w) - 1);
      }
      out.filled_weeks.push_back(static_cast<int>(w));
    }
  }
  return out;
}

void write_weekly_csv(const WeeklyTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "week,price";
  for (const auto& name : table.regressor_names) out << ',' << name;
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < table.series.size(); ++i) {
    out << to_string(table.series.weeks[i]);
    std::snprintf(buf, sizeof(buf), "%.17g", table.series.values[i]);
    out << ',' << buf;
    for (Eigen::Index c = 0; c < table.regressors.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g",
                    table.regressors(static_cast<Eigen::Index>(i), c));
      out << ',' << buf;
    }
    out << '\n';
  }
}

Scaler fit_scaler(const std::vector<double>& values, const SplitSpec& split) {
  if (split.train_end <= 0 || static_cast<std::size_t>(split.train_end) > values.size()) {
    throw std::invalid_argument("train split end " + std::to_string(split.train_end) +
                                " out of range");
  }
  double lo = values[0], hi = values[0];
  for (int i = 0; i < split.train_end; ++i) {
    lo = std::min(lo, values[static_cast<std::size_t>(i)]);
    hi = std::max(hi, values[static_cast<std::size_t>(i)]);
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("degenerate training range: min == max == " +
                                std::to_string(lo));
  }
  return Scaler{lo, hi};
}

SplitSpec default_split(std::size_t length) {
  if (length < 30) {
    throw std::invalid_argument("series of " + std::to_string(length) +
                                " points is too short to split");
  }
  if (length >= 471) return SplitSpec{356, 409};
  const int train_end = static_cast<int>(std::floor(0.756 * static_cast<double>(length) + 0.5));
  const int val_end = static_cast<int>(std::floor(0.869 * static_cast<double>(length) + 0.5));
  return SplitSpec{train_end, val_end};
}

SyntheticSeries synthesize_series(int length, std::uint64_t seed,
                                  const SynthRecipe& recipe) {
  if (length < 30) {
    throw std::invalid_argument("synthetic series needs at least 30 points");
  }
  SyntheticSeries out;
  Rng rng(derive_seed(seed, 0));
  const double phase1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double phase2 = rng.uniform(0.0, 2.0 * std::numbers::pi);

  std::vector<double>& v = out.series.values;
  v.resize(static_cast<std::size_t>(length));
  double ar = 0.0, ar_prev = 0.0;
  for (int t = 0; t < length; ++t) {
    const double next = recipe.ar_coeff * ar + recipe.ar_coeff2 * ar_prev +
                        recipe.ar_sigma * rng.normal();
    ar_prev = ar;
    ar = next;
    if (rng.uniform() < recipe.jump_prob) {
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      ar += sign * recipe.jump_scale * (0.3 + std::abs(rng.normal()));
    }
    const double season =
        recipe.seasonal_amp * std::sin(2.0 * std::numbers::pi * t / 52.0 + phase1) +
        recipe.seasonal_amp2 * std::sin(4.0 * std::numbers::pi * t / 52.0 + phase2);
    v[static_cast<std::size_t>(t)] =
        std::max(recipe.price_floor, recipe.base_level + season + ar);
  }

  const std::int64_t first_monday = days_from_civil(2013, 3, 4);
  for (int t = 0; t < length; ++t) {
    out.series.weeks.push_back(iso_week(first_monday + static_cast<std::int64_t>(t) * 7));
  }

  const int k = recipe.n_regressors;
  out.regressors.resize(length, k);
  Rng reg_rng(derive_seed(seed, 1));
  for (int j = 0; j < k; ++j) {
    const double noise =
        k > 1 ? recipe.regressor_noise_min +
                    (recipe.regressor_noise_max - recipe.regressor_noise_min) * j / (k - 1)
              : recipe.regressor_noise_min;
    out.regressor_names.push_back("reg" + std::to_string(j));
    for (int t = 0; t < length; ++t) {
      const auto next = static_cast<std::size_t>(std::min(t + 1, length - 1));
      out.regressors(t, j) = v[next] + noise * reg_rng.normal();
    }
  }
  return out;
}

}  // namespace qrc
