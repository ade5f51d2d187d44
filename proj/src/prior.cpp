#include "entmap/prior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace entmap {

namespace {

// Maps a raw 64-bit draw onto [0, 1) with 53 uniform bits. The standard
// distributions are implementation-defined, this mapping is not.
double canonical_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

IsingPrior::IsingPrior(LabelSpace space, Eigen::VectorXd bias, Eigen::MatrixXd coupling,
                       double epsilon, std::string source)
    : space_(std::move(space)),
      bias_(std::move(bias)),
      coupling_(std::move(coupling)),
      epsilon_(epsilon),
      source_(std::move(source)) {
  const int size = space_.size();
  if (bias_.size() != size || coupling_.rows() != size || coupling_.cols() != size) {
    throw DimensionMismatch("prior parameter shapes do not match the label space");
  }
  if (epsilon_ < 0.0 || !std::isfinite(epsilon_)) {
    throw ValidationError("smoothing epsilon must be finite and nonnegative");
  }
  if (!bias_.allFinite() || !coupling_.allFinite()) {
    throw ValidationError("prior parameters must all be finite");
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (coupling_(i, j) != 0.0) {
        throw ValidationError("couplings must be strictly upper triangular");
      }
    }
  }
}

IsingPrior estimate_prior(const LabeledDataset& data, double epsilon) {
  if (data.size() == 0) {
    throw ValidationError("prior estimation requires at least one item");
  }
  if (epsilon < 0.0 || !std::isfinite(epsilon)) {
    throw ValidationError("smoothing epsilon must be finite and nonnegative");
  }
  const int size = data.space().size();
  const double n = static_cast<double>(data.size());
  const CooccurrenceCounts counts = cooccurrence_counts(data);

  Eigen::VectorXd marginal_prob(size);
  Eigen::VectorXd bias(size);
  for (int i = 0; i < size; ++i) {
    const int c = counts.marginals(i);
    if (epsilon == 0.0 && (c == 0 || c == data.size())) {
      throw DegenerateMarginal("label '" + data.space().name(i) + "' occurs in " +
                               std::to_string(c) + " of " + std::to_string(data.size()) +
                               " items; use epsilon > 0");
    }
    marginal_prob(i) = (static_cast<double>(c) + epsilon) / (n + 2.0 * epsilon);
    bias(i) = std::log(marginal_prob(i) / (1.0 - marginal_prob(i)));
  }

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      const int c = counts.joint(i, j);
      if (epsilon == 0.0 && c == 0) {
        throw DegenerateJoint("labels '" + data.space().name(i) + "' and '" +
                              data.space().name(j) + "' never co-occur; use epsilon > 0");
      }
      const double joint_prob = (static_cast<double>(c) + epsilon) / (n + 4.0 * epsilon);
      coupling(i, j) = std::log(joint_prob / (marginal_prob(i) * marginal_prob(j)));
    }
  }
  return IsingPrior(data.space(), std::move(bias), std::move(coupling), epsilon);
}

double prior_log_score(const LabelVector& labels, const IsingPrior& prior) {
  const int size = prior.space().size();
  if (labels.size() != size) {
    throw DimensionMismatch("label vector size " + std::to_string(labels.size()) +
                            " does not match prior size " + std::to_string(size));
  }
  double score = 0.0;
  for (int i = 0; i < size; ++i) {
    if (labels[i] == 0) continue;
    score += prior.bias()(i);
    for (int j = i + 1; j < size; ++j) {
      if (labels[j] != 0) score += prior.coupling()(i, j);
    }
  }
  return score;
}

LabelVector prior_mode(const IsingPrior& prior) {
  const std::uint32_t count = configuration_count(prior.space());
  LabelVector best = configuration_at(prior.space(), 0);
  double best_score = prior_log_score(best, prior);
  for (std::uint32_t k = 1; k < count; ++k) {
    LabelVector candidate = configuration_at(prior.space(), k);
    const double score = prior_log_score(candidate, prior);
    if (score > best_score || (score == best_score && tie_break_less(candidate, best))) {
      best_score = score;
      best = std::move(candidate);
    }
  }
  return best;
}

LabeledDataset sample_prior(const IsingPrior& prior, int n, std::uint64_t seed) {
  if (n < 1) {
    throw ValidationError("sample count must be at least 1");
  }
  const std::uint32_t count = configuration_count(prior.space());

  // Exactly normalized CDF over all configurations; the only place the
  // partition constant is ever formed. Scores are shifted by the maximum
  // before exponentiation so large parameters cannot overflow.
  std::vector<double> scores(count);
  double max_score = -std::numeric_limits<double>::infinity();
  for (std::uint32_t k = 0; k < count; ++k) {
    scores[k] = prior_log_score(configuration_at(prior.space(), k), prior);
    max_score = std::max(max_score, scores[k]);
  }
  std::vector<double> cdf(count);
  double total = 0.0;
  for (std::uint32_t k = 0; k < count; ++k) {
    total += std::exp(scores[k] - max_score);
    cdf[k] = total;
  }

  std::mt19937_64 gen(seed);
  std::vector<LabeledItem> items;
  items.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const double u = canonical_unit(gen()) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint32_t k =
        std::min(static_cast<std::uint32_t>(it - cdf.begin()), count - 1);
    items.push_back({"synth-" + std::to_string(s + 1), configuration_at(prior.space(), k)});
  }
  return LabeledDataset(prior.space(), std::move(items));
}

double mutual_information(const LabeledDataset& data, int i, int j, double epsilon,
                          MiUnit unit) {
  if (i == j) {
    throw SameIndex("mutual information requires two distinct labels, got index " +
                    std::to_string(i) + " twice");
  }
  const int size = data.space().size();
  if (i < 0 || i >= size || j < 0 || j >= size) {
    throw DimensionMismatch("label index out of range");
  }
  if (data.size() == 0) {
    throw ValidationError("mutual information requires at least one item");
  }
  if (epsilon < 0.0 || !std::isfinite(epsilon)) {
    throw ValidationError("smoothing epsilon must be finite and nonnegative");
  }

  // Smoothed 2x2 contingency table; marginals come from the table itself so
  // the result is a genuine mutual information (nonnegative up to rounding).
  double cell[2][2] = {{epsilon, epsilon}, {epsilon, epsilon}};
  for (const LabeledItem& item : data.items()) {
    cell[item.labels[i]][item.labels[j]] += 1.0;
  }
  const double total = static_cast<double>(data.size()) + 4.0 * epsilon;
  double row[2] = {cell[0][0] + cell[0][1], cell[1][0] + cell[1][1]};
  double col[2] = {cell[0][0] + cell[1][0], cell[0][1] + cell[1][1]};

  double mi = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (cell[a][b] == 0.0) continue;  // 0 * log(0 / .) contributes nothing
      const double p = cell[a][b] / total;
      const double pa = row[a] / total;
      const double pb = col[b] / total;
      mi += p * std::log(p / (pa * pb));
    }
  }
  return unit == MiUnit::bits ? mi / std::log(2.0) : mi;
}

}  // namespace entmap
