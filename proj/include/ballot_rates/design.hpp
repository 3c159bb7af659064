#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ballot_rates/rates.hpp"

namespace ballot_rates {

/// Result of the exact design-invariance test: either a witness tiering that
/// every reasonable scoring rule recovers asymptotically, or the first
/// violating (i, j, k) triple (candidates 0-based, cutoff position 1-based).
struct InvarianceVerdict {
    bool exact = false;
    std::optional<Outcome> witness_tiers;
    std::optional<std::tuple<int, int, int>> violation;
};

/// Strict cumulative-placement dominance across every tier boundary at every
/// cutoff k < M. Candidates are ordered by expected full-Borda score; a tie
/// straddling a tier boundary throws AmbiguousTiers.
InvarianceVerdict check_invariance(const Source& source, const Goal& goal);

/// Pairwise top-W overlap fractions between mechanisms' full-data tallies.
std::vector<std::vector<double>> approx_invariance(const EmpiricalPreferences& prefs, int w,
                                                   const std::vector<ScoringRule>& mechanisms,
                                                   std::uint64_t seed);

/// Full-ranking variant: pairwise Kendall-tau correlation between tallies.
std::vector<std::vector<double>> approx_invariance_kendall(
    const EmpiricalPreferences& prefs, const std::vector<ScoringRule>& mechanisms,
    std::uint64_t seed);

struct KEvaluation {
    Rate rate = Rate::finite(0.0);
    bool mismatch = false;                          // excluded from the argmax
    std::optional<std::pair<int, int>> mismatch_pair;
    std::optional<std::pair<int, int>> pivotal;
};

struct OptimalKResult {
    std::map<int, KEvaluation> per_k;
    std::optional<int> best_k;        // ties broken toward smaller K
    Rate best_rate = Rate::finite(0.0);
};

/// Evaluates outcome_rate for each K-Approval mechanism in k_range. A K whose
/// asymptotic outcome mismatches the goal is recorded and excluded rather
/// than aborting the scan. Throws MismatchError only if every K mismatches.
OptimalKResult optimal_k(const Source& source, const Goal& goal,
                         const std::vector<int>& k_range);
OptimalKResult optimal_k(SourceEvaluator& eval, const Goal& goal,
                         const std::vector<int>& k_range);

/// Every K admissible for the source: 1..M-1, capped at min_prefix for
/// partial empirical data.
std::vector<int> admissible_k_range(const Source& source);

struct ScanRow {
    int w;
    std::optional<int> best_k;
    Rate best_rate = Rate::finite(0.0);
    std::string flag;  // "", "mismatch:K=..." for excluded K, or "all-mismatch"
};

/// optimal_k for the goal (W, M-W) at each W in w_range.
std::vector<ScanRow> optimal_k_scan(const Source& source, const std::vector<int>& w_range);

struct MixtureFinding {
    int k_a;
    int k_b;
    double d;          // weight on K_a after refinement
    double rate_mix;
    double rate_a;
    double rate_b;
    bool beats_opt;
    std::pair<int, int> pivotal_a;
    std::pair<int, int> pivotal_b;
};

struct SkippedPair {
    int k_a;
    int k_b;
    std::string reason;
};

struct RandomizationScan {
    std::vector<MixtureFinding> findings;
    std::vector<SkippedPair> skipped;
    std::optional<int> opt_k;       // Approval rate optimal over all admissible K
    Rate opt_rate = Rate::finite(0.0);
    int cells = 0;                  // (pair, d) cells evaluated
};

/// Scans two-mechanism mixtures: for each (K_a, K_b) and d in the grid the
/// overall rate is the min of per-pair approval mixture rates; the best d is
/// refined by golden section. Reports cases where the mixture strictly beats
/// both pure mechanisms. Pairs whose asymptotic outcomes disagree are skipped
/// with a flag.
RandomizationScan randomization_scan(const Source& source, const Goal& goal,
                                     const std::vector<std::pair<int, int>>& k_pairs,
                                     const std::vector<double>& d_grid);

std::vector<double> default_d_grid();  // 0.05, 0.10, ..., 0.95

/// Decision kernel for one mechanism pair given per-pair separations under
/// K_a and K_b (index-aligned vectors over the goal's cross-tier pairs).
/// Exposed for direct evaluation of published instances.
struct MixtureEvaluation {
    double best_d;
    Rate rate_mix = Rate::finite(0.0);
    std::size_t pivotal_index;  // argmin pair at best_d
};
MixtureEvaluation best_mixture(const std::vector<std::pair<double, double>>& seps_a,
                               const std::vector<std::pair<double, double>>& seps_b,
                               const std::vector<double>& d_grid);

}  // namespace ballot_rates
