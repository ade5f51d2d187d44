#include "entmap/infer.hpp"

#include <cmath>
#include <unordered_map>
#include <utility>

#include "entmap/errors.hpp"

namespace entmap {

namespace {

void check_alpha(double alpha) {
  if (alpha < 0.0 || !std::isfinite(alpha)) {
    throw NegativeAlpha("prior weight alpha must be finite and nonnegative, got " +
                        std::to_string(alpha));
  }
}

}  // namespace

double posterior_log_objective(const LabelVector& labels, const LikelihoodRecord& rec,
                               const IsingPrior& prior, double alpha) {
  check_alpha(alpha);
  if (labels.size() != rec.size() || rec.size() != prior.space().size()) {
    throw DimensionMismatch("labels, record, and prior must share one label space");
  }
  return likelihood_log_score(labels, rec) + alpha * prior_log_score(labels, prior);
}

MapResult map_infer(const LikelihoodRecord& rec, const IsingPrior& prior, double alpha) {
  check_alpha(alpha);
  if (rec.size() != prior.space().size()) {
    throw DimensionMismatch("record '" + rec.id() + "' has " + std::to_string(rec.size()) +
                            " labels but the prior has " +
                            std::to_string(prior.space().size()));
  }
  const std::uint32_t count = configuration_count(prior.space());
  LabelVector best = configuration_at(prior.space(), 0);
  double best_objective = posterior_log_objective(best, rec, prior, alpha);
  for (std::uint32_t k = 1; k < count; ++k) {
    LabelVector candidate = configuration_at(prior.space(), k);
    const double objective = posterior_log_objective(candidate, rec, prior, alpha);
    if (objective > best_objective ||
        (objective == best_objective && tie_break_less(candidate, best))) {
      best_objective = objective;
      best = std::move(candidate);
    }
  }
  return {rec.id(), std::move(best), best_objective, threshold_decode(rec)};
}

std::vector<MapResult> infer_batch(const std::vector<LikelihoodRecord>& records,
                                   const IsingPrior& prior, double alpha) {
  check_alpha(alpha);
  std::vector<MapResult> results;
  results.reserve(records.size());
  for (const LikelihoodRecord& rec : records) {
    if (rec.size() != prior.space().size()) {
      throw DimensionMismatch("record '" + rec.id() + "' has " +
                              std::to_string(rec.size()) + " labels but the prior has " +
                              std::to_string(prior.space().size()));
    }
    results.push_back(map_infer(rec, prior, alpha));
  }
  return results;
}

SweepReport alpha_sweep(const std::vector<LikelihoodRecord>& records, const LabeledDataset& gold,
                        const IsingPrior& prior, std::vector<double> alphas,
                        double zero_division) {
  if (alphas.empty()) {
    alphas.assign(kDefaultAlphaGrid.begin(), kDefaultAlphaGrid.end());
  }
  for (double alpha : alphas) check_alpha(alpha);
  if (!(gold.space() == prior.space())) {
    throw DimensionMismatch("gold label space does not match the prior's");
  }

  std::unordered_map<std::string, int> gold_index;
  gold_index.reserve(gold.items().size());
  for (int i = 0; i < gold.size(); ++i) {
    gold_index.emplace(gold.items()[static_cast<std::size_t>(i)].id, i);
  }
  std::vector<LabelVector> gold_vectors;
  gold_vectors.reserve(records.size());
  for (const LikelihoodRecord& rec : records) {
    const auto it = gold_index.find(rec.id());
    if (it == gold_index.end()) {
      throw MissingGold("no gold item with id '" + rec.id() + "'");
    }
    gold_vectors.push_back(gold.items()[static_cast<std::size_t>(it->second)].labels);
  }

  SweepReport report;
  report.alphas = std::move(alphas);
  report.reports.reserve(report.alphas.size());
  for (double alpha : report.alphas) {
    std::vector<MapResult> results = infer_batch(records, prior, alpha);
    std::vector<LabelVector> pred;
    pred.reserve(results.size());
    for (MapResult& r : results) pred.push_back(std::move(r.map_vector));
    report.reports.push_back(evaluate(gold.space(), pred, gold_vectors, zero_division));
  }

  // Best alpha per metric; equal values resolve toward the smaller alpha.
  const auto pick = [&report](auto metric, bool larger_is_better) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < report.alphas.size(); ++i) {
      const double value = metric(report.reports[i]);
      const double best_value = metric(report.reports[best]);
      const bool better = larger_is_better ? value > best_value : value < best_value;
      if (better || (value == best_value && report.alphas[i] < report.alphas[best])) {
        best = i;
      }
    }
    return report.alphas[best];
  };
  report.best_lexical_alpha = pick([](const EvalReport& r) { return r.lexical_accuracy; }, true);
  report.best_vector_alpha = pick([](const EvalReport& r) { return r.vector_accuracy; }, true);
  report.best_hamming_alpha = pick([](const EvalReport& r) { return r.hamming_loss; }, false);
  report.best_macro_f1_alpha = pick([](const EvalReport& r) { return r.macro_f1; }, true);
  return report;
}

}  // namespace entmap
