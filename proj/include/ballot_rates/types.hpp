#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballot_rates/errors.hpp"

namespace ballot_rates {

/// Candidate ids are 0-based everywhere in code; file formats and reports use
/// 1-based ids (PrefLib convention). Positions are 1-based (1 = best).
using Weight = std::int64_t;

/// A voter's strict complete ranking of all M candidates.
class Ranking {
public:
    /// positions[c] = position of candidate c, a permutation of 1..M.
    static Ranking from_positions(std::vector<int> positions);
    /// order = candidate ids best to worst.
    static Ranking from_order(const std::vector<int>& order);
    static Ranking identity(int m);

    int m() const { return static_cast<int>(pos_.size()); }
    int position(int candidate) const { return pos_[candidate]; }
    const std::vector<int>& positions() const { return pos_; }
    std::vector<int> order() const;

    bool operator==(const Ranking&) const = default;

private:
    explicit Ranking(std::vector<int> pos) : pos_(std::move(pos)) {}
    std::vector<int> pos_;
};

/// A (possibly truncated) ballot: the voter's favorite candidates, best
/// first, with a positive integer multiplicity.
struct Ballot {
    std::vector<int> prefix;
    Weight weight = 1;

    bool operator==(const Ballot&) const = default;
};

/// Positional scoring rule: non-increasing, non-constant score vector
/// beta(1..M). The label identifies the mechanism in reports; labels
/// beginning with "borda" opt in to the per-ballot tied-tail convention for
/// unranked candidates.
class ScoringRule {
public:
    ScoringRule(std::vector<double> beta, std::string label);

    int m() const { return static_cast<int>(beta_.size()); }
    double at(int position) const { return beta_[position - 1]; }
    const std::vector<double>& beta() const { return beta_; }
    const std::string& label() const { return label_; }

    bool borda_tail() const;
    /// If the rule is an indicator rule (two score levels, high then low),
    /// returns the number of high positions; empty otherwise.
    std::optional<int> approval_k() const;
    /// If beta is constant on every position > after, returns that value.
    std::optional<double> constant_tail(int after) const;

private:
    std::vector<double> beta_;
    std::string label_;
};

ScoringRule approval_rule(int k, int m);
ScoringRule borda_rule(int k, int m);

/// Ordered partition sizes for the election's target output: tier 1 is best.
class Goal {
public:
    explicit Goal(std::vector<int> tier_sizes);
    static Goal winners(int w, int m);   // (W, M-W)
    static Goal full_ranking(int m);     // (1, 1, ..., 1)

    int m() const { return m_; }
    int tiers() const { return static_cast<int>(sizes_.size()); }
    const std::vector<int>& sizes() const { return sizes_; }
    /// Cumulative count of candidates in tiers 1..t.
    int boundary(int t) const { return bounds_[t]; }
    int tier_of_rank(int rank) const;  // rank 1-based

    bool operator==(const Goal&) const = default;

private:
    std::vector<int> sizes_;
    std::vector<int> bounds_;
    int m_ = 0;
};

/// Realized ordered partition of candidates; each tier sorted ascending.
struct Outcome {
    std::vector<std::vector<int>> tiers;

    bool operator==(const Outcome&) const = default;
};

/// A weighted multiset of ballots over M candidates. Construction
/// canonicalizes: ballots listing M-1 candidates are completed (the missing
/// candidate's position is implied), duplicates are merged, and ballots are
/// sorted, so equal preference profiles compare equal.
class EmpiricalPreferences {
public:
    static EmpiricalPreferences from_ballots(int m, std::vector<Ballot> ballots,
                                             std::vector<std::string> names = {});

    int m() const { return m_; }
    const std::vector<Ballot>& ballots() const { return ballots_; }
    Weight total_weight() const { return total_weight_; }
    int min_prefix() const { return min_prefix_; }
    bool complete() const { return min_prefix_ == m_; }
    /// Candidate names; empty when the source carried none, else size M.
    const std::vector<std::string>& names() const { return names_; }

    /// Keeps only complete-ranking ballots.
    EmpiricalPreferences complete_only() const;

    bool operator==(const EmpiricalPreferences& other) const {
        return m_ == other.m_ && ballots_ == other.ballots_;
    }

private:
    int m_ = 0;
    std::vector<Ballot> ballots_;
    Weight total_weight_ = 0;
    int min_prefix_ = 0;
    std::vector<std::string> names_;
};

}  // namespace ballot_rates
