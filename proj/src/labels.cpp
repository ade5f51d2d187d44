#include "entmap/labels.hpp"

#include <algorithm>
#include <unordered_set>

namespace entmap {

LabelSpace::LabelSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw ValidationError("label space must contain at least one label");
  }
  if (static_cast<int>(names_.size()) > kMaxLabels) {
    throw EnumerationTooLarge("label space has " + std::to_string(names_.size()) +
                              " labels, exact enumeration is capped at " +
                              std::to_string(kMaxLabels));
  }
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& name = names_[static_cast<std::size_t>(i)];
    if (name.empty()) {
      throw ValidationError("label names must be non-empty");
    }
    if (!index_.emplace(name, i).second) {
      throw ValidationError("duplicate label name '" + name + "'");
    }
  }
}

LabelSpace LabelSpace::plutchik() {
  return LabelSpace({"joy", "trust", "fear", "surprise", "sadness", "disgust", "anger",
                     "anticipation"});
}

int LabelSpace::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw ValidationError("unknown label name '" + name + "'");
  }
  return it->second;
}

LabelVector::LabelVector(Eigen::ArrayXi bits) : bits_(std::move(bits)) {
  for (Eigen::Index i = 0; i < bits_.size(); ++i) {
    if (bits_(i) != 0 && bits_(i) != 1) {
      throw ValidationError("label vector elements must be 0 or 1, got " +
                            std::to_string(bits_(i)));
    }
  }
}

LabelVector::LabelVector(std::initializer_list<int> bits)
    : LabelVector(Eigen::Map<const Eigen::ArrayXi>(bits.begin(),
                                                   static_cast<Eigen::Index>(bits.size()))) {}

LabelVector LabelVector::zeros(int size) {
  return LabelVector(Eigen::ArrayXi::Zero(size));
}

LabeledDataset::LabeledDataset(LabelSpace space, std::vector<LabeledItem> items)
    : space_(std::move(space)), items_(std::move(items)) {
  std::unordered_set<std::string> seen;
  for (const LabeledItem& item : items_) {
    if (!seen.insert(item.id).second) {
      throw ValidationError("duplicate item id '" + item.id + "'");
    }
    if (item.labels.size() != space_.size()) {
      throw DimensionMismatch("item '" + item.id + "' has " +
                              std::to_string(item.labels.size()) + " labels, space has " +
                              std::to_string(space_.size()));
    }
  }
}

std::uint32_t configuration_count(const LabelSpace& space) {
  return std::uint32_t{1} << space.size();
}

LabelVector configuration_at(const LabelSpace& space, std::uint32_t index) {
  Eigen::ArrayXi bits(space.size());
  for (int i = 0; i < space.size(); ++i) {
    bits(i) = static_cast<int>((index >> i) & 1u);
  }
  return LabelVector(std::move(bits));
}

std::vector<LabelVector> enumerate_configurations(const LabelSpace& space) {
  const std::uint32_t count = configuration_count(space);
  std::vector<LabelVector> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    out.push_back(configuration_at(space, k));
  }
  return out;
}

bool tie_break_less(const LabelVector& a, const LabelVector& b) {
  if (a.active_count() != b.active_count()) {
    return a.active_count() < b.active_count();
  }
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i];
    }
  }
  return false;
}

CooccurrenceCounts cooccurrence_counts(const LabelSpace& space,
                                       const std::vector<LabelVector>& vectors) {
  const int size = space.size();
  CooccurrenceCounts counts;
  counts.joint = Eigen::MatrixXi::Zero(size, size);
  for (const LabelVector& v : vectors) {
    if (v.size() != size) {
      throw DimensionMismatch("label vector size " + std::to_string(v.size()) +
                              " does not match space size " + std::to_string(size));
    }
    const Eigen::VectorXi bits = v.bits().matrix();
    counts.joint.noalias() += bits * bits.transpose();
  }
  counts.marginals = counts.joint.diagonal();
  return counts;
}

CooccurrenceCounts cooccurrence_counts(const LabeledDataset& data) {
  std::vector<LabelVector> vectors;
  vectors.reserve(static_cast<std::size_t>(data.size()));
  for (const LabeledItem& item : data.items()) {
    vectors.push_back(item.labels);
  }
  return cooccurrence_counts(data.space(), vectors);
}

StatsReport dataset_statistics(const LabeledDataset& data) {
  if (data.size() == 0) {
    throw ValidationError("dataset statistics require at least one item");
  }
  StatsReport report;
  report.n = data.size();
  report.label_counts = Eigen::VectorXi::Zero(data.space().size());
  long total_active = 0;
  long multi = 0;
  for (const LabeledItem& item : data.items()) {
    report.label_counts += item.labels.bits().matrix();
    const int active = item.labels.active_count();
    total_active += active;
    if (active == 1) ++report.single_label_count;
    if (active >= 2) ++multi;
  }
  report.multi_label_fraction = static_cast<double>(multi) / static_cast<double>(report.n);
  report.mean_label_cardinality =
      static_cast<double>(total_active) / static_cast<double>(report.n);
  return report;
}

}  // namespace entmap
