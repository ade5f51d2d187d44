#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "entmap/labels.hpp"

namespace entmap {

/// Pairwise binary Markov random field over a label space:
///
///   P(E) = exp( sum_i bias(i)*E_i + sum_{i<j} coupling(i,j)*E_i*E_j ) / Z
///
/// bias(i) is the log-odds of label i on its own; coupling(i, j) is the
/// pairwise interaction strength. The normalizer Z is never stored: MAP
/// decoding and mode finding only need unnormalized log scores, and sampling
/// forms it transiently.
class IsingPrior {
 public:
  /// `coupling` must be strictly upper triangular (diagonal and below zero);
  /// score evaluation treats it as symmetric. All parameters must be finite.
  IsingPrior(LabelSpace space, Eigen::VectorXd bias, Eigen::MatrixXd coupling,
             double epsilon, std::string source = "");

  const LabelSpace& space() const { return space_; }
  const Eigen::VectorXd& bias() const { return bias_; }
  const Eigen::MatrixXd& coupling() const { return coupling_; }

  /// Smoothing pseudo-count used at estimation time, kept for provenance.
  double epsilon() const { return epsilon_; }
  /// Where the parameters were estimated from (file path or empty).
  const std::string& source() const { return source_; }

 private:
  LabelSpace space_;
  Eigen::VectorXd bias_;
  Eigen::MatrixXd coupling_;
  double epsilon_ = 0.0;
  std::string source_;
};

/// Closed-form maximum-entropy estimation from a labeled corpus:
///
///   bias(i)       = log( q_i / (1 - q_i) )       q_i  = (c_i + eps) / (N + 2 eps)
///   coupling(i,j) = log( q_ij / (q_i * q_j) )    q_ij = (C_ij + eps) / (N + 4 eps)
///
/// where c_i are marginal counts and C_ij pairwise joint counts. With eps > 0
/// every parameter is finite. With eps = 0 a marginal count of 0 or N throws
/// DegenerateMarginal and an empty joint count throws DegenerateJoint rather
/// than producing infinities.
IsingPrior estimate_prior(const LabeledDataset& data, double epsilon);

/// Unnormalized log prior of a configuration, i.e. the exponent
/// sum_i bias(i)*E_i + sum_{i<j} coupling(i,j)*E_i*E_j. The all-zero vector
/// scores exactly 0.
double prior_log_score(const LabelVector& labels, const IsingPrior& prior);

/// Exact mode of the prior by enumeration over all 2^L configurations; exact
/// score ties resolve via tie_break_less.
LabelVector prior_mode(const IsingPrior& prior);

/// Draws n i.i.d. configurations by inverse CDF over the exactly normalized
/// 2^L-cell distribution. Fully deterministic for a given seed (the generator
/// and the uniform mapping are pinned, not implementation-defined).
LabeledDataset sample_prior(const IsingPrior& prior, int n, std::uint64_t seed);

enum class MiUnit { nats, bits };

/// Mutual information between labels i and j on the eps-smoothed empirical
/// 2x2 table (eps added to each of the four cells, marginals taken from the
/// smoothed table, so the value is nonnegative up to rounding). Natural log
/// by default. Zero-probability cells contribute zero.
double mutual_information(const LabeledDataset& data, int i, int j, double epsilon,
                          MiUnit unit = MiUnit::nats);

}  // namespace entmap
