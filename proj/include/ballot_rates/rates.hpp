#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ballot_rates/core.hpp"
#include "ballot_rates/mallows.hpp"
#include "ballot_rates/types.hpp"

namespace ballot_rates {

/// Either preference source the rate machinery accepts.
using Source = std::variant<MallowsModel, EmpiricalPreferences>;

int source_m(const Source& source);
std::vector<double> expected_scores(const MallowsModel& model, const ScoringRule& rule);
std::vector<double> expected_scores(const Source& source, const ScoringRule& rule);

/// Distribution of the per-voter score difference D = beta(sigma(i)) - beta(sigma(j)).
struct ScoreDiffDistribution {
    std::vector<std::pair<double, double>> support;  // (value, probability)

    double expectation() const;
    void validate() const;
};

/// A large-deviation rate. Pairs with no possible error (Pr(D <= 0) = 0) get
/// the distinguished unbounded value, which is never serialized as a float
/// infinity.
class Rate {
public:
    static Rate finite(double v) { return Rate(v, false); }
    static Rate unbounded() { return Rate(0.0, true); }

    bool is_unbounded() const { return unbounded_; }
    /// Finite value; meaningless when unbounded.
    double value() const { return value_; }

    friend bool operator<(const Rate& a, const Rate& b) {
        if (a.unbounded_) return false;
        if (b.unbounded_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const Rate& a, const Rate& b) { return b < a; }
    friend bool operator<=(const Rate& a, const Rate& b) { return !(b < a); }
    friend bool operator>=(const Rate& a, const Rate& b) { return !(a < b); }

private:
    Rate(double v, bool u) : value_(v), unbounded_(u) {}
    double value_;
    bool unbounded_;
};

/// -inf_z log E[exp(zD)]. Requires E[D] > 0 (the caller orients the pair);
/// one-sided support (Pr(D < 0) = 0) short-circuits to -log Pr(D = 0), the
/// analytic infimum, and Pr(D <= 0) = 0 yields the unbounded rate.
Rate rate_general(const ScoreDiffDistribution& diff);

/// K-Approval closed form -log(2 sqrt(t_i t_j) + 1 - t_i - t_j).
Rate rate_approval(double t_i, double t_j);

/// Per-pair learning-rate report for an outcome goal.
struct PairRateEntry {
    int i;  // better-tier candidate
    int j;
    Rate rate;
    std::optional<double> t_i;  // approval separations when the rule is an indicator
    std::optional<double> t_j;
};

struct RateReport {
    std::string mechanism;
    std::vector<int> goal_sizes;
    Outcome asymptotic;
    std::vector<PairRateEntry> pairs;  // every cross-tier pair, canonical order
    std::pair<int, int> pivotal_pair;
    Rate overall = Rate::finite(0.0);
};

/// Caches per-pair position distributions (and, for empirical sources,
/// per-ballot diff assembly) so scans over many K or W reuse the O(M^4) DP.
class SourceEvaluator {
public:
    explicit SourceEvaluator(const Source& source);

    int m() const { return m_; }
    const Source& source() const { return source_; }

    /// Joint distribution for an ordered pair (i, j).
    const PairPositionDistribution& pair_dist(int i, int j);
    std::pair<double, double> separation(int i, int j, int k);
    ScoreDiffDistribution diff(const ScoringRule& rule, int i, int j) const;

private:
    const Source& source_;
    int m_;
    std::map<std::pair<int, int>, std::unique_ptr<PairPositionDistribution>> cache_;
};

/// Rate for one candidate pair. The pair may be given in either order; it is
/// oriented by expected score internally. Indicator rules dispatch to the
/// closed form.
Rate pair_rate(const Source& source, const ScoringRule& rule, int i, int j);
Rate pair_rate(SourceEvaluator& eval, const ScoringRule& rule, int i, int j);

/// All cross-tier pair rates plus the pivotal minimum. The asymptotic outcome
/// is computed from expected scores unless supplied. Throws MismatchError if
/// any cross-tier pair has s_i <= s_j.
RateReport outcome_rate(const Source& source, const ScoringRule& rule, const Goal& goal,
                        const std::optional<Outcome>& asymptotic = std::nullopt);
RateReport outcome_rate(SourceEvaluator& eval, const ScoringRule& rule, const Goal& goal,
                        const std::optional<Outcome>& asymptotic = std::nullopt);

/// Pairwise Chernoff bound exp(-rate N).
double chernoff_error_bound(const Rate& rate, std::int64_t n);
/// Outcome bound M^2 exp(-rate N) on the expected number of pairwise errors.
double chernoff_error_bound(const Rate& rate, std::int64_t n, int m);

/// Smallest N with exp(-rate N) < epsilon.
std::int64_t voters_needed(const Rate& rate, double epsilon);
std::int64_t voters_needed(double rate, double epsilon);

/// Randomized mechanism: rule p served with probability prob p.
struct WeightedRule {
    ScoringRule rule;
    double prob;
};
Rate mixture_rate_scoring(const Source& source, const std::vector<WeightedRule>& components,
                          int i, int j);
Rate mixture_rate_scoring(SourceEvaluator& eval, const std::vector<WeightedRule>& components,
                          int i, int j);

/// Mixture of K-Approval mechanisms: separations average, then the closed form.
struct WeightedK {
    int k;
    double prob;
};
Rate mixture_rate_approval(const std::vector<WeightedK>& components,
                           const std::vector<std::pair<double, double>>& separations);

}  // namespace ballot_rates
