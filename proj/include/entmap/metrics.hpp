#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "entmap/labels.hpp"

namespace entmap {

struct LabelMetrics {
  std::string label;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;
};

struct EvalReport {
  long n_instances = 0;
  double lexical_accuracy = 0.0;  // fraction of correct (instance, label) cells
  double vector_accuracy = 0.0;   // fraction of exact full-vector matches
  double hamming_loss = 0.0;      // complement of lexical accuracy
  double macro_f1 = 0.0;          // unweighted mean of per-label F1
  double zero_division = 0.0;     // value substituted for 0/0 in per-label metrics
  std::vector<LabelMetrics> per_label;
};

/// Fraction of (instance, label) cells where pred differs from gold.
double hamming_loss(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold);

/// 1 - hamming_loss, with an independent matching-cell count cross-checked
/// against the mismatch count. Returned as the exact complement so
/// lexical_accuracy + hamming_loss == 1 holds bit-for-bit.
double lexical_accuracy(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold);

/// Fraction of instances whose predicted vector equals gold exactly.
double vector_accuracy(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold);

/// Confusion-count metrics per label. 0/0 divisions (precision with no
/// predicted positives, recall with no gold positives, F1 with an empty
/// confusion mass) take the zero_division value; everything else is the
/// standard tp / (tp + fp), tp / (tp + fn), 2 tp / (2 tp + fp + fn).
std::vector<LabelMetrics> per_label_metrics(const LabelSpace& space,
                                            const std::vector<LabelVector>& pred,
                                            const std::vector<LabelVector>& gold,
                                            double zero_division = 0.0);

/// Unweighted mean of per-label F1 over all labels.
double macro_f1(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold,
                double zero_division = 0.0);

/// Co-occurrence counts of predicted labels; same contract as
/// cooccurrence_counts applied to predictions.
CooccurrenceCounts predicted_cooccurrence(const LabelSpace& space,
                                          const std::vector<LabelVector>& pred);

/// Full report over aligned prediction/gold sequences.
EvalReport evaluate(const LabelSpace& space, const std::vector<LabelVector>& pred,
                    const std::vector<LabelVector>& gold, double zero_division = 0.0);

}  // namespace entmap
