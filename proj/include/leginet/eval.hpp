#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leginet/corpus.hpp"
#include "leginet/extract.hpp"
#include "leginet/match.hpp"

namespace leginet {

struct Estimate {
    double mean = 0.0;
    std::optional<double> std_dev;  // missing when fewer than two samples
    int n_samples = 0;
};

Estimate estimate_from_rates(const std::vector<double>& rates);

/// One annotated cluster of match outcomes: how many entities it holds and
/// how many resolved to a wrong master entry.
struct MatchCluster {
    int total = 0;
    int wrong = 0;
};

/// Per-cluster wrong-match rates. A wrong match is simultaneously a false
/// positive and a false negative, so alpha1 and beta1 are the same estimate.
std::pair<Estimate, Estimate> estimate_match_errors(const std::vector<MatchCluster>& clusters);

/// One sampled document's extraction outcome against its annotations.
struct DocExtractionOutcome {
    std::string doc_id;
    int n_true = 0;
    int rule_misses = 0;
    int typo_misses = 0;
};

/// (beta2, beta3): per-document missed-entity rates split by cause.
std::pair<Estimate, Estimate> estimate_extraction_errors(
    const std::vector<DocExtractionOutcome>& outcomes);

struct ErrorEstimates {
    Estimate alpha1, beta1, beta2, beta3;
    double alpha = 0.0;
    double beta = 0.0;
};

ErrorEstimates combine_errors(const Estimate& alpha1, const Estimate& beta1,
                              const Estimate& beta2, const Estimate& beta3);

/// precision = (1-a-b)/(1-b), recall = (1-a-b)/(1-a); requires a + b < 1.
std::pair<double, double> precision_recall(double alpha, double beta);

/// Joining layer: compare extraction + matching output for one document with
/// its annotations. Mentions pair with annotated entities by surface string.
struct DocComparison {
    MatchCluster cluster;                 // alpha1/beta1 sample
    DocExtractionOutcome outcome;         // beta2/beta3 sample
    int spurious_mentions = 0;            // extracted but not annotated
    bool entities_exact = true;           // extracted set equals annotations
    bool relations_exact = true;
};

DocComparison compare_document(const AnnotationSet& ann,
                               const std::vector<EntityMention>& mentions,
                               const std::vector<MatchResult>& match_results,
                               const std::vector<RelationMention>& relations,
                               const MasterList& master);

struct EvalReport {
    ErrorEstimates errors;
    double precision = 0.0;
    double recall = 0.0;
    int docs_evaluated = 0;
    int spurious_mentions = 0;
    bool all_exact = true;  // every document matched its annotations exactly
};

std::string eval_json(const EvalReport& report);
std::string eval_csv(const EvalReport& report);

}  // namespace leginet
