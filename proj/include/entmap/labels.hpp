#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "entmap/errors.hpp"

namespace entmap {

// Exact inference enumerates all 2^L label configurations, so the label space
// is capped at 20 labels (~1M configurations). Larger spaces are rejected
// instead of silently approximated.
inline constexpr int kMaxLabels = 20;

/// Ordered set of binary label names. Index i of every vector, matrix row and
/// column in the library refers to names()[i].
class LabelSpace {
 public:
  explicit LabelSpace(std::vector<std::string> names);

  /// The default 8-dimension space: joy, trust, fear, surprise, sadness,
  /// disgust, anger, anticipation (in this order).
  static LabelSpace plutchik();

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  /// Position of a label name; throws ValidationError for unknown names.
  int index(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  bool operator==(const LabelSpace& other) const { return names_ == other.names_; }
  bool operator!=(const LabelSpace& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Binary label configuration aligned to a LabelSpace: bit i belongs to the
/// i-th declared label. Immutable after construction.
class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(Eigen::ArrayXi bits);
  LabelVector(std::initializer_list<int> bits);

  static LabelVector zeros(int size);

  int size() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_(i); }
  const Eigen::ArrayXi& bits() const { return bits_; }

  int active_count() const { return bits_.size() == 0 ? 0 : bits_.sum(); }

  bool operator==(const LabelVector& other) const {
    return bits_.size() == other.bits_.size() && (bits_ == other.bits_).all();
  }
  bool operator!=(const LabelVector& other) const { return !(*this == other); }

 private:
  Eigen::ArrayXi bits_;
};

struct LabeledItem {
  std::string id;
  LabelVector labels;
};

/// A corpus of labeled items over one LabelSpace. Ids are unique; the dataset
/// may be empty for pure vector utilities, estimation requires N >= 1.
class LabeledDataset {
 public:
  LabeledDataset(LabelSpace space, std::vector<LabeledItem> items);

  const LabelSpace& space() const { return space_; }
  const std::vector<LabeledItem>& items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }

 private:
  LabelSpace space_;
  std::vector<LabeledItem> items_;
};

/// Number of configurations 2^L.
std::uint32_t configuration_count(const LabelSpace& space);

/// Configuration at position `index` in ascending binary order: bit i of the
/// index (least significant first) becomes label i.
LabelVector configuration_at(const LabelSpace& space, std::uint32_t index);

/// All 2^L configurations in ascending binary order. Materializes the whole
/// list; intended for small spaces, hot loops should use configuration_at.
std::vector<LabelVector> enumerate_configurations(const LabelSpace& space);

/// Deterministic ordering used to resolve exact score ties everywhere in the
/// library: fewer active labels first, then the lexicographically smaller bit
/// pattern in declared label order.
bool tie_break_less(const LabelVector& a, const LabelVector& b);

struct CooccurrenceCounts {
  // joint(i, j) = number of items with both label i and label j active;
  // symmetric, with joint(i, i) equal to the marginal count of label i.
  Eigen::MatrixXi joint;
  Eigen::VectorXi marginals;
};

CooccurrenceCounts cooccurrence_counts(const LabelSpace& space,
                                       const std::vector<LabelVector>& vectors);
CooccurrenceCounts cooccurrence_counts(const LabeledDataset& data);

struct StatsReport {
  long n = 0;
  Eigen::VectorXi label_counts;
  long single_label_count = 0;
  double multi_label_fraction = 0.0;
  double mean_label_cardinality = 0.0;
};

StatsReport dataset_statistics(const LabeledDataset& data);

}  // namespace entmap
