#pragma once

#include <string>
#include <utility>

#include <Eigen/Core>

#include "entmap/labels.hpp"

namespace entmap {

// Probabilities are floored away from {0, 1} so log scores stay finite even
// for saturated classifier outputs; the perturbation is negligible for
// ranking purposes.
inline constexpr double kProbFloor = 1e-9;

/// Per-instance Bernoulli likelihood terms: for each label a "yes"
/// probability p_yes and a "no" probability p_no, both clamped into
/// [kProbFloor, 1 - kProbFloor]. The pair need not sum to one; a common
/// positive scale only shifts log scores by a constant, which no argmax sees.
class LikelihoodRecord {
 public:
  LikelihoodRecord(std::string id, Eigen::VectorXd p_yes, Eigen::VectorXd p_no);

  const std::string& id() const { return id_; }
  int size() const { return static_cast<int>(p_yes_.size()); }
  const Eigen::VectorXd& p_yes() const { return p_yes_; }
  const Eigen::VectorXd& p_no() const { return p_no_; }

 private:
  std::string id_;
  Eigen::VectorXd p_yes_;
  Eigen::VectorXd p_no_;
};

/// Two-way softmax of a (yes, no) logit pair in the shifted, numerically
/// stable form, clamped by kProbFloor. Adding a constant to both logits does
/// not change the result. Throws NonFiniteLogit on NaN/inf input.
std::pair<double, double> logits_to_probs(double yes_logit, double no_logit);

/// Bernoulli log likelihood of a configuration:
///   sum_i [ E_i * log p_yes(i) + (1 - E_i) * log p_no(i) ]
double likelihood_log_score(const LabelVector& labels, const LikelihoodRecord& rec);

/// Independent per-label decode: label i active iff p_yes(i) > p_no(i).
/// Exact ties resolve to 0, consistent with the global tie rule.
LabelVector threshold_decode(const LikelihoodRecord& rec);

}  // namespace entmap
