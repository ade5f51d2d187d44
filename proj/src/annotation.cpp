#include "entmap/annotation.hpp"

#include <unordered_set>
#include <utility>

#include "entmap/errors.hpp"

namespace entmap {

namespace {

// Fleiss kappa over binary subjects given each subject's yes-count out of
// raters. Expected agreement of exactly 1 (unanimity everywhere) returns 1.
double fleiss_from_counts(const std::vector<int>& yes_counts, int raters) {
  const double a = static_cast<double>(raters);
  const double m = static_cast<double>(yes_counts.size());
  double observed_sum = 0.0;
  double yes_total = 0.0;
  for (int y : yes_counts) {
    const double yes = static_cast<double>(y);
    const double no = a - yes;
    observed_sum += (yes * (yes - 1.0) + no * (no - 1.0)) / (a * (a - 1.0));
    yes_total += yes;
  }
  const double p_observed = observed_sum / m;
  const double p_yes = yes_total / (m * a);
  const double p_expected = p_yes * p_yes + (1.0 - p_yes) * (1.0 - p_yes);
  if (p_expected == 1.0) return 1.0;
  return (p_observed - p_expected) / (1.0 - p_expected);
}

void check_nonempty(const AnnotationSet& set) {
  if (set.size() == 0) {
    throw IncompleteAnnotation("agreement needs at least one annotated item");
  }
}

}  // namespace

AnnotationSet::AnnotationSet(LabelSpace space, std::vector<AnnotatedItem> items)
    : space_(std::move(space)), items_(std::move(items)) {
  std::unordered_set<std::string> seen;
  for (const AnnotatedItem& item : items_) {
    if (!seen.insert(item.id).second) {
      throw ValidationError("duplicate annotation id '" + item.id + "'");
    }
    const int raters = static_cast<int>(item.annotations.size());
    if (raters < 2) {
      throw IncompleteAnnotation("item '" + item.id + "' has " + std::to_string(raters) +
                                 " annotator vectors; need at least 2");
    }
    if (annotator_count_ == 0) {
      annotator_count_ = raters;
    } else if (raters != annotator_count_) {
      throw IncompleteAnnotation("item '" + item.id + "' has " + std::to_string(raters) +
                                 " annotator vectors but earlier items have " +
                                 std::to_string(annotator_count_));
    }
    for (const LabelVector& v : item.annotations) {
      if (v.size() != space_.size()) {
        throw DimensionMismatch("annotation for item '" + item.id + "' has " +
                                std::to_string(v.size()) + " labels; expected " +
                                std::to_string(space_.size()));
      }
    }
  }
}

LabelVector majority_vote(const std::vector<LabelVector>& annotations) {
  const int raters = static_cast<int>(annotations.size());
  if (raters < 2) {
    throw IncompleteAnnotation("majority vote needs at least 2 annotator vectors, got " +
                               std::to_string(raters));
  }
  const int size = annotations.front().size();
  for (const LabelVector& v : annotations) {
    if (v.size() != size) {
      throw DimensionMismatch("annotator vectors disagree on label count");
    }
  }
  Eigen::ArrayXi bits = Eigen::ArrayXi::Zero(size);
  for (int i = 0; i < size; ++i) {
    int yes = 0;
    for (const LabelVector& v : annotations) yes += v[i];
    bits(i) = 2 * yes > raters ? 1 : 0;  // exact even-count ties stay 0
  }
  return LabelVector(bits);
}

LabeledDataset majority_vote(const AnnotationSet& set) {
  std::vector<LabeledItem> items;
  items.reserve(set.items().size());
  for (const AnnotatedItem& item : set.items()) {
    items.push_back({item.id, majority_vote(item.annotations)});
  }
  return LabeledDataset(set.space(), std::move(items));
}

Eigen::MatrixXd cohen_kappa_pairwise(const AnnotationSet& set) {
  check_nonempty(set);
  const int raters = set.annotator_count();
  const int size = set.space().size();
  Eigen::MatrixXd kappa = Eigen::MatrixXd::Identity(raters, raters);
  for (int a = 0; a < raters; ++a) {
    for (int b = a + 1; b < raters; ++b) {
      long both = 0, only_a = 0, only_b = 0, neither = 0;
      for (const AnnotatedItem& item : set.items()) {
        const LabelVector& va = item.annotations[static_cast<std::size_t>(a)];
        const LabelVector& vb = item.annotations[static_cast<std::size_t>(b)];
        for (int i = 0; i < size; ++i) {
          if (va[i] != 0) {
            vb[i] != 0 ? ++both : ++only_a;
          } else {
            vb[i] != 0 ? ++only_b : ++neither;
          }
        }
      }
      const double total = static_cast<double>(both + only_a + only_b + neither);
      const double p_observed = static_cast<double>(both + neither) / total;
      const double pa = static_cast<double>(both + only_a) / total;
      const double pb = static_cast<double>(both + only_b) / total;
      const double p_expected = pa * pb + (1.0 - pa) * (1.0 - pb);
      const double k =
          p_expected == 1.0 ? 1.0 : (p_observed - p_expected) / (1.0 - p_expected);
      kappa(a, b) = k;
      kappa(b, a) = k;
    }
  }
  return kappa;
}

double fleiss_kappa(const AnnotationSet& set) {
  check_nonempty(set);
  const int size = set.space().size();
  std::vector<int> yes_counts;
  yes_counts.reserve(static_cast<std::size_t>(set.size()) * static_cast<std::size_t>(size));
  for (const AnnotatedItem& item : set.items()) {
    for (int i = 0; i < size; ++i) {
      int yes = 0;
      for (const LabelVector& v : item.annotations) yes += v[i];
      yes_counts.push_back(yes);
    }
  }
  return fleiss_from_counts(yes_counts, set.annotator_count());
}

AgreementReport agreement_report(const AnnotationSet& set) {
  check_nonempty(set);
  AgreementReport report;
  report.n_items = set.size();
  report.annotators = set.annotator_count();
  report.fleiss = fleiss_kappa(set);
  report.cohen = cohen_kappa_pairwise(set);
  report.per_label_fleiss.reserve(static_cast<std::size_t>(set.space().size()));
  for (int i = 0; i < set.space().size(); ++i) {
    std::vector<int> yes_counts;
    yes_counts.reserve(set.items().size());
    for (const AnnotatedItem& item : set.items()) {
      int yes = 0;
      for (const LabelVector& v : item.annotations) yes += v[i];
      yes_counts.push_back(yes);
    }
    report.per_label_fleiss.push_back(fleiss_from_counts(yes_counts, set.annotator_count()));
  }
  return report;
}

}  // namespace entmap
