#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "qrc/dataio.hpp"
#include "qrc/readout.hpp"

using namespace qrc;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("civil date round trip and known ISO weeks") {
  CHECK(days_from_civil(1970, 1, 1) == 0);
  int y, m, d;
  civil_from_days(days_from_civil(2022, 3, 17), y, m, d);
  CHECK(y == 2022);
  CHECK(m == 3);
  CHECK(d == 17);

  CHECK(iso_week(days_from_civil(1970, 1, 1)) == WeekId{1970, 1});
  CHECK(iso_week(days_from_civil(2016, 1, 1)) == WeekId{2015, 53});
  CHECK(iso_week(days_from_civil(2021, 1, 4)) == WeekId{2021, 1});
  CHECK(iso_week(days_from_civil(2020, 12, 31)) == WeekId{2020, 53});
  CHECK(iso_week(days_from_civil(2013, 3, 4)) == WeekId{2013, 10});
  CHECK(to_string(WeekId{2019, 7}) == "2019-W07");
}

TEST_CASE("daily csv parsing") {
  const std::string path = write_temp(
      "qrc_ok.csv", "date,price\n2020-01-01,1.5\n2020-01-02,2.5\n2020-01-03,3\n");
  const DailyTable table = load_daily_csv(path);
  CHECK(table.records.size() == 3);
  CHECK(table.extra_names.empty());
  CHECK(table.records[1].price == 2.5);
  std::remove(path.c_str());
}

TEST_CASE("daily csv errors carry line numbers") {
  const std::string bad_price =
      write_temp("qrc_badprice.csv", "date,price\n2020-01-01,abc\n");
  CHECK_THROWS_WITH_AS(load_daily_csv(bad_price), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(bad_price.c_str());

  const std::string bad_header = write_temp("qrc_badheader.csv", "day,cost\n");
  CHECK_THROWS_AS(load_daily_csv(bad_header), std::runtime_error);
  std::remove(bad_header.c_str());

  const std::string bad_date =
      write_temp("qrc_baddate.csv", "date,price\n2020-01-01,1.0\nnot-a-date,2.0\n");
  CHECK_THROWS_WITH_AS(load_daily_csv(bad_date), doctest::Contains("line 3"),
                       std::runtime_error);
  std::remove(bad_date.c_str());
}

TEST_CASE("daily csv carries regressor columns") {
  std::string content = "date,price,r1,r2,r3,r4,r5,r6,r7,r8,r9\n";
  content += "2020-01-01,1.0,1,2,3,4,5,6,7,8,9\n";
  const std::string path = write_temp("qrc_reg.csv", content);
  const DailyTable table = load_daily_csv(path);
  CHECK(table.extra_names.size() == 9);
  CHECK(table.records[0].extras.size() == 9);
  CHECK(table.records[0].extras[8] == 9.0);
  std::remove(path.c_str());
}

TEST_CASE("weekly aggregation averages within ISO weeks") {
  DailyTable table;
  // one full week of constant prices
  for (int d = 0; d < 7; ++d) {
    table.records.push_back({days_from_civil(2021, 1, 4) + d, 2.0, {}});
  }
  // next week: 1, 2, 3
  for (int d = 0; d < 3; ++d) {
    table.records.push_back({days_from_civil(2021, 1, 11) + d, 1.0 + d, {}});
  }
  const WeeklyTable weekly = aggregate_weekly(table);
  REQUIRE(weekly.series.size() == 2);
  CHECK(weekly.series.values[0] == doctest::Approx(2.0));
  CHECK(weekly.series.values[1] == doctest::Approx(2.0));
  CHECK(weekly.filled_weeks.empty());

  int total = 0;
  for (int c : weekly.week_counts) total += c;
  CHECK(total == static_cast<int>(table.records.size()));
}

TEST_CASE("empty weeks are carried forward and flagged") {
  DailyTable table;
  table.records.push_back({days_from_civil(2021, 1, 4), 3.0, {}});
  table.records.push_back({days_from_civil(2021, 1, 18), 5.0, {}});  // skips one week
  const WeeklyTable weekly = aggregate_weekly(table);
  REQUIRE(weekly.series.size() == 3);
  CHECK(weekly.series.values[1] == doctest::Approx(3.0));
  REQUIRE(weekly.filled_weeks.size() == 1);
  CHECK(weekly.filled_weeks[0] == 1);
  CHECK(weekly.week_counts[1] == 0);
}

TEST_CASE("scaler maps the training range onto [0,1]") {
  const std::vector<double> values{1.0, 3.0, 2.0, 4.0};
  const Scaler s = fit_scaler(values, SplitSpec{2, 3});
  CHECK(s.apply(2.0) == doctest::Approx(0.5));
  CHECK(s.invert(s.apply(2.7)) == doctest::Approx(2.7).epsilon(1e-12));
  CHECK(s.apply(4.0) == doctest::Approx(1.5));
  CHECK(s.apply_clipped(4.0) == 1.0);
  CHECK(s.apply_clipped(0.0) == 0.0);

  const std::vector<double> flat{2.0, 2.0, 2.0};
  CHECK_THROWS_AS(fit_scaler(flat, SplitSpec{3, 3}), std::invalid_argument);
}

TEST_CASE("default split follows the reference counts then falls back") {
  const SplitSpec exact = default_split(471);
  CHECK(exact.train_end == 356);
  CHECK(exact.val_end == 409);

  const SplitSpec longer = default_split(600);
  CHECK(longer.train_end == 356);
  CHECK(longer.val_end == 409);

  const SplitSpec prop = default_split(100);
  CHECK(prop.train_end == 76);
  CHECK(prop.val_end == 87);

  CHECK_THROWS_AS(default_split(20), std::invalid_argument);
}

TEST_CASE("synthetic series contract") {
  const SyntheticSeries a = synthesize_series(471, 1);
  CHECK(a.series.size() == 471);
  for (double v : a.series.values) CHECK(v >= 0.0);
  for (std::size_t i = 1; i < a.series.weeks.size(); ++i) {
    CHECK(a.series.weeks[i - 1] < a.series.weeks[i]);
  }
  CHECK(a.regressors.rows() == 471);
  CHECK(a.regressors.cols() == 9);

  const SyntheticSeries b = synthesize_series(471, 1);
  CHECK(a.series.values == b.series.values);
  CHECK((a.regressors - b.regressors).cwiseAbs().maxCoeff() == 0.0);

  const SyntheticSeries c = synthesize_series(471, 2);
  CHECK(a.series.values != c.series.values);

  CHECK_THROWS_AS(synthesize_series(10, 1), std::invalid_argument);
}

TEST_CASE("lead-lag regressors improve direction accuracy") {
  // The regressor columns are noisy previews of the next value, so a linear
  // readout with them must beat one that only sees the current value.
  // Averaged over 20 seeds to keep the check stable.
  int wins = 0;
  double with_sum = 0.0, without_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SyntheticSeries synth = synthesize_series(200, seed);
    const int len = 200, train_end = 150;
    Eigen::MatrixXd x_with(len - 1, 1 + synth.regressors.cols());
    Eigen::MatrixXd x_without(len - 1, 1);
    Eigen::VectorXd target(len - 1), prev(len - 1);
    for (int t = 0; t + 1 < len; ++t) {
      x_without(t, 0) = synth.series.values[static_cast<std::size_t>(t)];
      x_with(t, 0) = x_without(t, 0);
      x_with.row(t).tail(synth.regressors.cols()) = synth.regressors.row(t);
      target[t] = synth.series.values[static_cast<std::size_t>(t + 1)];
      prev[t] = synth.series.values[static_cast<std::size_t>(t)];
    }
    auto eval = [&](const Eigen::MatrixXd& x) {
      const RidgeModel m = fit_ridge(x.topRows(train_end), target.head(train_end), 0.1);
      const Eigen::Index rest = x.rows() - train_end;
      return mda(target.tail(rest), predict(m, x.bottomRows(rest)), prev.tail(rest));
    };
    const double with_reg = eval(x_with);
    const double without_reg = eval(x_without);
    with_sum += with_reg;
    without_sum += without_reg;
    wins += with_reg > without_reg;
  }
  CHECK(with_sum > without_sum);
  CHECK(wins >= 15);
}
