#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ballot_rates/design.hpp"
#include "ballot_rates/rates.hpp"
#include "ballot_rates/sim.hpp"

namespace ballot_rates {

using json = nlohmann::ordered_json;

/// Candidate ids are 1-based in every serialized form. Unbounded rates
/// serialize as the string "unbounded", never a float infinity.
json rate_json(const Rate& rate);
json report_json(const RateReport& report);
json mismatch_report_json(const std::string& mechanism, const std::vector<int>& goal_sizes,
                          int i, int j);
json optimal_k_json(const OptimalKResult& result, const std::vector<int>& goal_sizes);
json scan_json(const std::vector<ScanRow>& rows);
json randomization_json(const RandomizationScan& scan);
json invariance_json(const InvarianceVerdict& verdict);
json overlap_json(const std::vector<std::vector<double>>& matrix,
                  const std::vector<std::string>& labels, const std::string& statistic);
json curve_json(const ErrorCurve& curve, const Overlay& overlay, const Rate& rate);
json pair_table_json(const PairPositionDistribution& dist);

/// CSV renderings with the fixed column sets.
std::string optimal_k_csv(const OptimalKResult& result, int w);       // W,K,rate,flag
std::string scan_csv(const std::vector<ScanRow>& rows);               // W,K,rate,flag
std::string randomization_csv(const RandomizationScan& scan);  // Ka,Kb,d,rate_mix,rate_a,rate_b,beats_opt
std::string curve_csv(const ErrorCurve& curve, const Overlay& overlay);  // N,value,bound
std::string pair_table_csv(const PairPositionDistribution& dist);     // l,k,p
std::string overlap_csv(const std::vector<std::vector<double>>& matrix,
                        const std::vector<std::string>& labels);

std::string rate_csv_field(const Rate& rate);
std::string format_double(double v);

}  // namespace ballot_rates
