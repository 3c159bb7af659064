#pragma once

#include <cstdint>
#include <vector>

#include "ballot_rates/types.hpp"
#include "ballot_rates/util.hpp"

namespace ballot_rates {

/// Mallows preference model: Pr(sigma) proportional to phi^(Kendall-tau
/// distance to the reference ranking). phi = 0 is deterministic, phi = 1
/// uniform; both limits are handled exactly, never via 0^0.
struct MallowsModel {
    MallowsModel(int m, double phi);
    MallowsModel(double phi, Ranking reference);

    int m;
    double phi;
    Ranking reference;
};

/// Probability that the item with reference rank `item` lands at `position`
/// when inserted: phi^(item-position) / (1 + phi + ... + phi^(item-1)).
/// Incremental powers of phi floor at the smallest normal double instead of
/// underflowing to zero (phi > 0 only), which keeps the distribution strictly
/// positive as the exact model is.
double insertion_probability(int item, int position, double phi);

/// Exact joint pmf of the positions of two candidates. An observation horizon
/// below M (empirical top-K data) routes unknown positions into censored
/// cells; the exact Mallows construction always has horizon = M and zero
/// censored mass.
class PairPositionDistribution {
public:
    PairPositionDistribution(int m, int i, int j, int horizon);

    int m() const { return m_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int horizon() const { return horizon_; }

    /// Pr(sigma(i) = l, sigma(j) = k), positions 1-based.
    double p(int l, int k) const { return cell(l, k); }
    double& p(int l, int k) { return cell(l, k); }
    /// Pr(sigma(i) = l, sigma(j) > horizon).
    double censored_j(int l) const { return cell(l, m_ + 1); }
    double& censored_j(int l) { return cell(l, m_ + 1); }
    /// Pr(sigma(i) > horizon, sigma(j) = k).
    double censored_i(int k) const { return cell(m_ + 1, k); }
    double& censored_i(int k) { return cell(m_ + 1, k); }
    /// Pr(both positions beyond the horizon).
    double censored_mass() const { return cell(m_ + 1, m_ + 1); }
    double& censored_mass() { return cell(m_ + 1, m_ + 1); }
    /// Everything except the both-censored cell.
    double total_mass() const;

    /// (t_i, t_j) for K-Approval: Pr(one approved, the other not). Throws
    /// CensoredPosition when k exceeds the horizon.
    std::pair<double, double> separation(int k) const;

    /// Pr(sigma(i) <= k) for k = 1..horizon (censored column included: a
    /// censored partner says nothing about this candidate's own position).
    std::vector<double> cdf_i() const;
    std::vector<double> cdf_j() const;
    /// Pr(sigma(i) <= k and sigma(j) <= k) for k = 1..horizon.
    std::vector<double> joint_box() const;

    /// Swapped view: distribution of (j, i).
    PairPositionDistribution transposed() const;

private:
    double cell(int a, int b) const { return data_[idx(a, b)]; }
    double& cell(int a, int b) { return data_[idx(a, b)]; }
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a - 1) * (m_ + 1) + (b - 1);
    }
    int m_, i_, j_, horizon_;
    std::vector<double> data_;  // (m+1) x (m+1); index m+1 = beyond horizon
};

/// Exact joint position distribution of candidates i, j under the model.
/// Dynamic program over insertion steps; both pair members are tracked
/// jointly from the start with "not yet inserted" as a sentinel, O(M^4).
PairPositionDistribution pair_joint(const MallowsModel& model, int i, int j);

/// Pr(sigma(i) <= k) for k = 1..M, by a single-item insertion DP.
std::vector<double> position_cdf(const MallowsModel& model, int candidate);

std::pair<double, double> approval_separation(const PairPositionDistribution& dist, int k);
std::pair<double, double> approval_separation(const MallowsModel& model, int i, int j, int k);

/// Repeated-insertion sampler with precomputed insertion tables.
class MallowsSampler {
public:
    explicit MallowsSampler(const MallowsModel& model);
    Ranking sample(Rng& rng) const;
    int m() const { return m_; }

private:
    int m_;
    std::vector<int> insert_order_;          // candidate inserted at each step
    std::vector<std::vector<double>> cum_;   // cum_[step][pos-1] cumulative insertion probs
};

Ranking sample(const MallowsModel& model, std::uint64_t seed);

}  // namespace ballot_rates
