#ifndef HCENSUS_CENSUS_HPP
#define HCENSUS_CENSUS_HPP

#include "clemens.hpp"
#include "enumerate.hpp"

#include <map>
#include <string>

namespace hc {

// Example selector plus every per-example parameter the CLI understands.
struct ExampleParams {
    std::string example = "ex2"; // "ex1" | "ex2" | "ex3"
    unsigned n = 1;
    unsigned lambda1 = 1, lambda2 = 1;
    unsigned kappa1 = 1, kappa2 = 1;
    double eta = 0.5;
    std::string instance = "default"; // ex1 quadric pair preset
};

struct LadderConfig {
    ExampleParams params;
    Rat r_min = Rat(1);
    Rat r_max = Rat(100);
    unsigned steps = 8;
    unsigned workers = 1;
    bool timing = true; // false zeroes the seconds column for reproducible output
};

struct CensusRow {
    double radius = 0.0;
    Rat radius_exact;
    bool weighted = false; // ex3 rows carry a real-valued weighted sum
    Int count;             // exact count (raw count for ex3)
    double weighted_sum = 0.0;
    long long points_scanned = 0;
    double seconds = 0.0;

    double value() const { return weighted ? weighted_sum : count.get_d(); }
};

// One enumerator invocation.
CensusRow run_count(const ExampleParams& p, const Rat& radius, unsigned workers,
                    const PointSink& sink = nullptr);

// Geometric ladder from r_min to r_max; deterministic for a fixed config
// regardless of the worker count.
std::vector<CensusRow> run_ladder(const LadderConfig& cfg);

std::string rows_to_csv(const std::vector<CensusRow>& rows, bool timing = true);
std::vector<CensusRow> rows_from_csv(const std::string& text);

struct FitReport {
    double a_hat = 0.0;
    double c_hat = 0.0;
    double rss_with_log = 0.0;
    double rss_without_log = 0.0;
    std::string preferred_model = "no-log"; // "log" | "no-log"
    GrowthPrediction prediction;
    std::string verdict = "inconclusive"; // "consistent" | "inconsistent" | "inconclusive"
    size_t rows_used = 0;
};

// Least squares of log(value) against {1, log R}, with and without the
// prediction's log-power correction (whose coefficient is pinned to b-1,
// not fitted).  Only the top half of the ladder enters, and only rows with
// value >= value_floor.
FitReport fit_growth(const std::vector<CensusRow>& rows,
                     const GrowthPrediction& prediction, double tolerance = 0.15,
                     double value_floor = 30.0);

std::string fit_report_json(const FitReport& rep, const ExampleParams& params);

// Prediction for the configured example.
GrowthPrediction predict_for(const ExampleParams& p);

// Flat "key = value" config files; '#' starts a comment.
std::map<std::string, std::string> parse_config_file(const std::string& path);
void apply_config(const std::map<std::string, std::string>& kv, ExampleParams& p,
                  LadderConfig* ladder = nullptr, double* tolerance = nullptr,
                  long* oracle_box = nullptr);

} // namespace hc

#endif
