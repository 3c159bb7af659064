#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballot_rates/rates.hpp"

namespace ballot_rates {

enum class Metric {
    winner_set_miss_fraction,  // |top tier missed| / |top tier|
    exact_outcome_miss,        // 1 unless every tier matches
    pairwise_error_count,      // cross-tier inversions (the Q^N statistic)
};

struct ErrorCurve {
    std::vector<std::int64_t> n_grid;
    Metric metric;
    std::vector<double> values;  // mean over trials, per N
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> stderrs;  // sample standard error of each mean
    bool non_convergent = false;  // cross-tier expected scores tie (rate 0)
};

/// Resamples N ballots with replacement per trial and scores the realized
/// outcome against the full-data asymptotic outcome. Per-trial RNG streams
/// derive from (seed, N, trial); curves are reproducible bit for bit.
ErrorCurve bootstrap_curve(const EmpiricalPreferences& prefs, const ScoringRule& rule,
                           const Goal& goal, const std::vector<std::int64_t>& n_grid,
                           int trials, Metric metric, std::uint64_t seed);

/// Same, drawing voters from the Mallows model; the target outcome is the
/// reference tiering. phi = 1 never converges and is flagged, not an error.
ErrorCurve model_curve(const MallowsModel& model, const ScoringRule& rule, const Goal& goal,
                       const std::vector<std::int64_t>& n_grid, int trials, Metric metric,
                       std::uint64_t seed);

/// Geometric grid 25, 50, ..., 3200.
std::vector<std::int64_t> default_n_grid();
inline constexpr int kDefaultTrials = 2000;

struct OverlayRow {
    std::int64_t n;
    double empirical;
    double bound;  // exp(-rate N)
};

struct Overlay {
    std::vector<OverlayRow> rows;
    std::optional<double> slope;  // least-squares slope of log(empirical) vs N
    std::optional<double> ratio;  // slope / (-rate)
    int fit_points = 0;
    std::string note;
};

/// Pairs the curve with exp(-rate N) and fits the log-error slope over the
/// band where the metric is in [1e-3, 0.2] (at least 4 positive points; large
/// deviation asymptotics and sampling noise dominate outside it).
Overlay overlay(const ErrorCurve& curve, const Rate& rate);

}  // namespace ballot_rates
