#pragma once

#include <cstdint>
#include <vector>

#include "ballot_rates/types.hpp"
#include "ballot_rates/util.hpp"

namespace ballot_rates {

struct TallyResult {
    std::vector<double> scores;
    Ranking ranking;
};

/// Weighted-mean positional scores plus the score-sorted ranking. Tied score
/// blocks (absolute tolerance 1e-12) are permuted uniformly at random;
/// deterministic given the seed.
TallyResult tally(const EmpiricalPreferences& prefs, const ScoringRule& rule,
                  std::uint64_t seed);
TallyResult tally(const EmpiricalPreferences& prefs, const ScoringRule& rule, Rng& rng);

/// Score a single candidate on a single ballot. Unlisted candidates take the
/// rule's constant tail value past the ballot's depth, or the per-ballot
/// Borda tied-tail (M - K_b - 1)/2 when the rule label requests it; otherwise
/// the position is censored and this throws.
double ballot_score(const Ballot& ballot, int m, const ScoringRule& rule, int candidate,
                    int ballot_index = -1);

/// Sorts candidates by score (descending) into the goal's tiers.
Outcome outcome_of(const Ranking& ranking, const Goal& goal);

/// Asymptotic outcome from expected scores; throws MismatchError when scores
/// tie (1e-12) or invert across a tier boundary.
Outcome asymptotic_outcome(const std::vector<double>& scores, const Goal& goal);

/// Expected per-candidate score under the empirical distribution. Identical
/// to tally()'s score vector; shares its censoring rules.
std::vector<double> expected_scores(const EmpiricalPreferences& prefs,
                                    const ScoringRule& rule);

/// Ranks candidates by score, shuffling tied blocks with rng.
Ranking rank_by_scores(const std::vector<double>& scores, Rng& rng);

/// Absolute tolerance below which two scores count as tied.
inline constexpr double kScoreTieTol = 1e-12;

}  // namespace ballot_rates
