#include "leginet/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "leginet/log.hpp"
#include "leginet/util.hpp"

namespace leginet {

Estimate estimate_from_rates(const std::vector<double>& rates) {
    Estimate e;
    e.n_samples = static_cast<int>(rates.size());
    if (rates.empty()) return e;
    double sum = 0.0;
    for (double r : rates) sum += r;
    e.mean = sum / static_cast<double>(rates.size());
    if (rates.size() >= 2) {
        double ss = 0.0;
        for (double r : rates) ss += (r - e.mean) * (r - e.mean);
        e.std_dev = std::sqrt(ss / static_cast<double>(rates.size() - 1));
    }
    return e;
}

std::pair<Estimate, Estimate> estimate_match_errors(const std::vector<MatchCluster>& clusters) {
    std::vector<double> rates;
    for (const auto& c : clusters) {
        if (c.total <= 0) {
            log::warn("empty match cluster excluded from error estimation");
            continue;
        }
        rates.push_back(static_cast<double>(c.wrong) / static_cast<double>(c.total));
    }
    Estimate e = estimate_from_rates(rates);
    return {e, e};  // the same wrong-match events drive both alpha1 and beta1
}

std::pair<Estimate, Estimate> estimate_extraction_errors(
    const std::vector<DocExtractionOutcome>& outcomes) {
    std::vector<double> rule_rates, typo_rates;
    for (const auto& o : outcomes) {
        if (o.n_true <= 0) {
            log::warn("document " + o.doc_id + " has no annotated entities; excluded");
            continue;
        }
        rule_rates.push_back(static_cast<double>(o.rule_misses) / static_cast<double>(o.n_true));
        typo_rates.push_back(static_cast<double>(o.typo_misses) / static_cast<double>(o.n_true));
    }
    return {estimate_from_rates(rule_rates), estimate_from_rates(typo_rates)};
}

ErrorEstimates combine_errors(const Estimate& alpha1, const Estimate& beta1,
                              const Estimate& beta2, const Estimate& beta3) {
    for (const auto* e : {&alpha1, &beta1, &beta2, &beta3}) {
        if (e->mean < 0.0 || e->mean > 1.0) {
            throw DataError("error component mean outside [0, 1]");
        }
    }
    ErrorEstimates out;
    out.alpha1 = alpha1;
    out.beta1 = beta1;
    out.beta2 = beta2;
    out.beta3 = beta3;
    out.alpha = alpha1.mean;
    out.beta = beta1.mean + beta2.mean + beta3.mean;
    if (out.beta > 1.0) throw DataError("combined beta exceeds 1: inconsistent inputs");
    return out;
}

std::pair<double, double> precision_recall(double alpha, double beta) {
    if (alpha + beta >= 1.0) {
        throw DataError("precision_recall requires alpha + beta < 1");
    }
    double tp = 1.0 - alpha - beta;
    return {tp / (1.0 - beta), tp / (1.0 - alpha)};
}

DocComparison compare_document(const AnnotationSet& ann,
                               const std::vector<EntityMention>& mentions,
                               const std::vector<MatchResult>& match_results,
                               const std::vector<RelationMention>& relations,
                               const MasterList& master) {
    DocComparison out;
    out.outcome.doc_id = ann.doc_id;
    out.outcome.n_true = static_cast<int>(ann.entities.size());
    out.cluster.total = static_cast<int>(ann.entities.size());

    std::map<std::string, std::string> miss_cause;
    for (const auto& m : ann.misses) miss_cause[m.canonical] = m.cause;

    // Matched canonical title per extracted surface.
    std::map<std::string, std::string> found;  // surface -> matched title ("" when unmatched)
    for (size_t i = 0; i < mentions.size(); ++i) {
        std::string matched;
        if (i < match_results.size() && match_results[i].entry_id) {
            matched = master.at(static_cast<size_t>(*match_results[i].entry_id)).canonical_title;
        }
        found[mentions[i].surface] = matched;
    }

    std::set<std::string> annotated_surfaces;
    for (const auto& ent : ann.entities) {
        annotated_surfaces.insert(ent.surface);
        auto it = found.find(ent.surface);
        if (it == found.end()) {
            auto cause = miss_cause.find(ent.canonical);
            if (cause != miss_cause.end() && cause->second == "typo") {
                ++out.outcome.typo_misses;
            } else {
                ++out.outcome.rule_misses;
            }
            out.entities_exact = false;
        } else if (it->second != ent.canonical) {
            ++out.cluster.wrong;
            out.entities_exact = false;
        }
    }
    for (const auto& [surface, matched] : found) {
        if (!annotated_surfaces.count(surface)) {
            ++out.spurious_mentions;
            out.entities_exact = false;
        }
    }

    // Relations compare as multisets of (type, matched target title).
    std::multiset<std::pair<std::string, std::string>> got, want;
    for (const auto& rel : relations) {
        auto it = found.find(rel.target.surface);
        std::string title = it != found.end() ? it->second : "";
        got.insert({std::string(to_string(rel.rtype)), title});
    }
    for (const auto& rel : ann.relations) want.insert({rel.type, rel.target});
    out.relations_exact = got == want;
    return out;
}

std::string eval_json(const EvalReport& report) {
    auto estimate = [](const Estimate& e) {
        nlohmann::json j;
        j["mean"] = e.mean;
        if (e.std_dev) j["std"] = *e.std_dev;
        else j["std"] = nullptr;
        j["n_samples"] = e.n_samples;
        return j;
    };
    nlohmann::json j;
    j["alpha1"] = estimate(report.errors.alpha1);
    j["beta1"] = estimate(report.errors.beta1);
    j["beta2"] = estimate(report.errors.beta2);
    j["beta3"] = estimate(report.errors.beta3);
    j["alpha"] = report.errors.alpha;
    j["beta"] = report.errors.beta;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["docs_evaluated"] = report.docs_evaluated;
    j["spurious_mentions"] = report.spurious_mentions;
    j["exact_against_annotations"] = report.all_exact;
    return j.dump(2) + "\n";
}

std::string eval_csv(const EvalReport& report) {
    auto std_or_na = [](const Estimate& e) {
        return e.std_dev ? fmt_double(*e.std_dev, 4) : std::string("NA");
    };
    std::string out = "measure,alpha1,beta1,beta2,beta3,alpha,beta\n";
    out += "mu," + fmt_double(report.errors.alpha1.mean, 4) + "," +
           fmt_double(report.errors.beta1.mean, 4) + "," +
           fmt_double(report.errors.beta2.mean, 4) + "," +
           fmt_double(report.errors.beta3.mean, 4) + "," + fmt_double(report.errors.alpha, 4) +
           "," + fmt_double(report.errors.beta, 4) + "\n";
    out += "sigma," + std_or_na(report.errors.alpha1) + "," + std_or_na(report.errors.beta1) +
           "," + std_or_na(report.errors.beta2) + "," + std_or_na(report.errors.beta3) + ",," +
           "\n";
    return out;
}

}  // namespace leginet
