#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leginet/match.hpp"

namespace leginet {

/// Everything the pipeline stages need; populated from command-line flags.
struct PipelineConfig {
    std::string corpus_dir;
    std::string manifest_path;
    std::string master_path;
    std::string rules_path;
    std::string canon_config_path;
    std::string annotations_dir;
    std::string out_dir = "out";

    MatchConfig match_cfg;
    std::vector<int> snapshot_years;
    uint64_t seed = 0;
    int jobs = 1;
    bool gexf = false;
    bool keep_multiedges = false;
    int sigma_samples = 50;

    std::vector<double> node_fractions = {0.01, 0.05, 0.10, 0.20};
    int node_reps = 20;
    std::vector<double> edge_levels = {0.01, 0.05, 0.10, 0.20};
    int edge_reps = 100;
};

namespace stages {
void canonicalize(const PipelineConfig& cfg);
void extract(const PipelineConfig& cfg);
void match(const PipelineConfig& cfg);
void build(const PipelineConfig& cfg);
void metrics(const PipelineConfig& cfg);
void robustness(const PipelineConfig& cfg);
void evaluate(const PipelineConfig& cfg);
void pipeline(const PipelineConfig& cfg);
}  // namespace stages

/// Parse argv-style arguments and run the requested subcommand.
/// Exit codes: 0 ok, 1 configuration/IO failure, 2 data-integrity failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace leginet
