#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "entmap/labels.hpp"

namespace entmap {

struct AnnotatedItem {
  std::string id;
  std::vector<LabelVector> annotations;  // one vector per rater, stable order
};

/// Multi-rater annotations over one label space. Every item must carry the
/// same number of complete rater vectors (>= 2); rater position k refers to
/// the same rater across items.
class AnnotationSet {
 public:
  AnnotationSet(LabelSpace space, std::vector<AnnotatedItem> items);

  const LabelSpace& space() const { return space_; }
  const std::vector<AnnotatedItem>& items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  int annotator_count() const { return annotator_count_; }

 private:
  LabelSpace space_;
  std::vector<AnnotatedItem> items_;
  int annotator_count_ = 0;
};

/// Per-label majority over raters: 1 iff strictly more than half marked 1.
/// Exact ties (possible only for even rater counts) resolve to 0.
LabelVector majority_vote(const std::vector<LabelVector>& annotations);

/// Majority-voted gold labels for a whole annotation set.
LabeledDataset majority_vote(const AnnotationSet& set);

/// Cohen's kappa for every rater pair, pooling all (item, label) binary
/// decisions into one 2x2 agreement table per pair. Pairs whose expected
/// agreement is exactly 1 return 1 by convention. Diagonal entries are 1.
Eigen::MatrixXd cohen_kappa_pairwise(const AnnotationSet& set);

/// Fleiss' kappa treating each (item, label) decision as one subject with two
/// categories. Returns 1 by convention when expected agreement is exactly 1
/// (which can only happen under unanimity).
double fleiss_kappa(const AnnotationSet& set);

struct AgreementReport {
  long n_items = 0;
  int annotators = 0;
  double fleiss = 0.0;
  Eigen::MatrixXd cohen;                 // pairwise, pooled
  std::vector<double> per_label_fleiss;  // Fleiss restricted to each label
};

AgreementReport agreement_report(const AnnotationSet& set);

}  // namespace entmap
