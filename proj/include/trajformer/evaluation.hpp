#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trajformer/dataset.hpp"

namespace trajformer {

/// Mean euclidean distance over steps 1..upto_step.
double ade(std::span<const Point2> pred, std::span<const Point2> gt, std::size_t upto_step);
/// Root of the mean squared euclidean distance over steps 1..upto_step.
double rmse(std::span<const Point2> pred, std::span<const Point2> gt, std::size_t upto_step);

enum class HorizonMode { cumulative, at_step };
enum class RmseAggregation { pooled, per_window };

struct EvalOptions {
  std::vector<double> horizons_s{1.0, 2.0, 3.0, 4.0, 5.0};
  double rate_hz = 10.0;
  HorizonMode horizon_mode = HorizonMode::cumulative;
  RmseAggregation rmse_aggregation = RmseAggregation::pooled;

  /// Step count of a horizon at rate_hz (1 s at 10 Hz -> 10).
  std::size_t steps_for(double horizon_s) const;
};

struct MetricsRow {
  std::string dataset;
  std::string method;
  double horizon_s = 0.0;
  double ade_m = 0.0;
  double rmse_m = 0.0;
  std::size_t n_windows = 0;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct MetricsTable {
  std::vector<MetricsRow> rows;

  void append(const MetricsTable& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }
  friend bool operator==(const MetricsTable&, const MetricsTable&) = default;
};

/// Scores one method's predictions (one κ-step trajectory per window) against ground truth.
/// Per-window values are reduced in sorted order, so the result does not depend on window order.
MetricsTable evaluate_predictions(std::string_view dataset, std::string_view method,
                                  std::span<const std::vector<Point2>> predictions,
                                  std::span<const std::vector<Point2>> ground_truth, const EvalOptions& options);

using Predictor = std::function<std::vector<Point2>(std::size_t window_index)>;

/// Runs `predictor` on every window, then scores the results.
MetricsTable evaluate(std::string_view dataset, std::string_view method, const Predictor& predictor,
                      std::span<const std::vector<Point2>> ground_truth, const EvalOptions& options);

enum class ReportFormat { csv, markdown };

/// Columns: dataset, method, horizon_s, ade_m, rmse_m, n_windows.
std::string format_report(const MetricsTable& table, ReportFormat format);
void emit_report(const MetricsTable& table, ReportFormat format, const std::filesystem::path& path);
MetricsTable parse_report_csv(std::string_view csv);

struct CvKalmanConfig {
  double accel_noise = 0.5;  // m/s², white-noise acceleration
  double meas_noise = 0.1;   // m
  double dt = 0.1;           // s

  void validate() const;
};

/// Constant-velocity filter state: (x, y, vx, vy) and its 4×4 covariance (row-major).
struct CvKalmanState {
  std::array<double, 4> x{};
  std::array<double, 16> P{};
};

class CvKalmanFilter {
 public:
  explicit CvKalmanFilter(const CvKalmanConfig& cfg);

  /// State at the time of z1: position z1, velocity (z1 - z0)/dt.
  void initialize(Point2 z0, Point2 z1);
  void predict();
  void update(Point2 z);
  const CvKalmanState& state() const { return state_; }

 private:
  CvKalmanConfig cfg_;
  CvKalmanState state_;
  std::array<double, 16> F_{};
  std::array<double, 16> Q_{};
};

/// Filters the observed track, then extrapolates κ steps without measurement updates.
std::vector<Point2> cv_kalman_predict(std::span<const Point2> observed, std::size_t kappa, const CvKalmanConfig& cfg);

}  // namespace trajformer
