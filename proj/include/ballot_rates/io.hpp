#pragma once

#include <string>
#include <vector>

#include "ballot_rates/mallows.hpp"
#include "ballot_rates/types.hpp"

namespace ballot_rates {

/// Ballot file grammar (UTF-8, LF or CRLF; '#' starts a comment):
///   M=<int>                          header, required first
///   name <int>: <text>               optional candidate names, ids 1-based
///   <count>: <id> (> <id>)*          one ballot line, best first
/// The reader also tolerates PrefLib .soc/.soi bodies: comma-separated orders
/// ("<count>: 3,1,2") and "# NUMBER ALTERNATIVES: <int>" /
/// "# ALTERNATIVE NAME <int>: <text>" metadata in place of the native header.
EmpiricalPreferences parse_text(const std::string& text);
EmpiricalPreferences parse_file(const std::string& path);

/// Canonical native-format serialization (LF line endings, merged and sorted
/// ballots). parse_text(write_text(p)) == p.
std::string write_text(const EmpiricalPreferences& prefs);
void write_file(const EmpiricalPreferences& prefs, const std::string& path);

/// Simulates K-Ranking elicitation from deeper data: every ballot cut to its
/// first K entries. Throws InsufficientDepth when K > min_prefix.
EmpiricalPreferences truncate(const EmpiricalPreferences& prefs, int k);

/// Empirical joint position distribution of a candidate pair. Top-K ballots
/// route unlisted candidates into censored cells; the horizon is the smallest
/// depth among censoring ballots, so approval separations at K' <= horizon
/// stay exact.
PairPositionDistribution pair_distribution(const EmpiricalPreferences& prefs, int i, int j);

/// Exact weighted count of ballots placing the candidate at position <= k,
/// for k = 1..M. Requires complete rankings (integer counts make the
/// invariance check's strict comparisons exact).
std::vector<Weight> position_cdf_counts(const EmpiricalPreferences& prefs, int candidate);

}  // namespace ballot_rates
