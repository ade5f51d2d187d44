#include "entmap/likelihood.hpp"

#include <algorithm>
#include <cmath>

#include "entmap/errors.hpp"

namespace entmap {

namespace {

double clamp_prob(double p) { return std::clamp(p, kProbFloor, 1.0 - kProbFloor); }

}  // namespace

LikelihoodRecord::LikelihoodRecord(std::string id, Eigen::VectorXd p_yes,
                                   Eigen::VectorXd p_no)
    : id_(std::move(id)), p_yes_(std::move(p_yes)), p_no_(std::move(p_no)) {
  if (p_yes_.size() != p_no_.size()) {
    throw DimensionMismatch("p_yes has " + std::to_string(p_yes_.size()) +
                            " entries but p_no has " + std::to_string(p_no_.size()));
  }
  if (p_yes_.size() == 0) {
    throw ValidationError("likelihood record needs at least one label");
  }
  if (!p_yes_.allFinite() || !p_no_.allFinite()) {
    throw ValidationError("likelihood probabilities must be finite");
  }
  if ((p_yes_.array() < 0.0).any() || (p_yes_.array() > 1.0).any() ||
      (p_no_.array() < 0.0).any() || (p_no_.array() > 1.0).any()) {
    throw ValidationError("likelihood probabilities must lie in [0, 1]");
  }
  p_yes_ = p_yes_.unaryExpr([](double p) { return clamp_prob(p); });
  p_no_ = p_no_.unaryExpr([](double p) { return clamp_prob(p); });
}

std::pair<double, double> logits_to_probs(double yes_logit, double no_logit) {
  if (!std::isfinite(yes_logit) || !std::isfinite(no_logit)) {
    throw NonFiniteLogit("logits must be finite, got yes=" + std::to_string(yes_logit) +
                         " no=" + std::to_string(no_logit));
  }
  const double shift = std::max(yes_logit, no_logit);
  const double ey = std::exp(yes_logit - shift);
  const double en = std::exp(no_logit - shift);
  // p0 is the exact complement of p1 so the pair sums to one bit-for-bit.
  const double p1 = ey / (ey + en);
  return {clamp_prob(p1), clamp_prob(1.0 - p1)};
}

double likelihood_log_score(const LabelVector& labels, const LikelihoodRecord& rec) {
  if (labels.size() != rec.size()) {
    throw DimensionMismatch("label vector size " + std::to_string(labels.size()) +
                            " does not match record size " + std::to_string(rec.size()));
  }
  double score = 0.0;
  for (int i = 0; i < rec.size(); ++i) {
    score += labels[i] != 0 ? std::log(rec.p_yes()(i)) : std::log(rec.p_no()(i));
  }
  return score;
}

LabelVector threshold_decode(const LikelihoodRecord& rec) {
  Eigen::ArrayXi bits(rec.size());
  for (int i = 0; i < rec.size(); ++i) {
    bits(i) = rec.p_yes()(i) > rec.p_no()(i) ? 1 : 0;
  }
  return LabelVector(bits);
}

}  // namespace entmap
