#include "entmap/metrics.hpp"

#include "entmap/errors.hpp"

namespace entmap {

namespace {

// Shared shape validation: equal sequence lengths, at least one instance,
// and one common vector size throughout.
int check_aligned(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold) {
  if (pred.size() != gold.size()) {
    throw LengthMismatch("got " + std::to_string(pred.size()) + " predictions for " +
                         std::to_string(gold.size()) + " gold vectors");
  }
  if (pred.empty()) {
    throw LengthMismatch("need at least one instance");
  }
  const int size = pred.front().size();
  for (std::size_t k = 0; k < pred.size(); ++k) {
    if (pred[k].size() != size || gold[k].size() != size) {
      throw LengthMismatch("vector size differs at instance " + std::to_string(k));
    }
  }
  return size;
}

void check_policy(double zero_division) {
  if (zero_division != 0.0 && zero_division != 1.0) {
    throw ValidationError("zero-division policy must be 0 or 1, got " +
                          std::to_string(zero_division));
  }
}

struct Confusion {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;
};

std::vector<Confusion> confusion_counts(const std::vector<LabelVector>& pred,
                                        const std::vector<LabelVector>& gold, int size) {
  std::vector<Confusion> counts(static_cast<std::size_t>(size));
  for (std::size_t k = 0; k < pred.size(); ++k) {
    for (int i = 0; i < size; ++i) {
      Confusion& c = counts[static_cast<std::size_t>(i)];
      if (pred[k][i] != 0) {
        gold[k][i] != 0 ? ++c.tp : ++c.fp;
      } else {
        gold[k][i] != 0 ? ++c.fn : ++c.tn;
      }
    }
  }
  return counts;
}

double f1_of(const Confusion& c, double zero_division) {
  const long denom = 2 * c.tp + c.fp + c.fn;
  return denom == 0 ? zero_division : 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
}

}  // namespace

double hamming_loss(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold) {
  const int size = check_aligned(pred, gold);
  long mismatches = 0;
  for (std::size_t k = 0; k < pred.size(); ++k) {
    mismatches += (pred[k].bits() != gold[k].bits()).count();
  }
  const long total = static_cast<long>(pred.size()) * size;
  return static_cast<double>(mismatches) / static_cast<double>(total);
}

double lexical_accuracy(const std::vector<LabelVector>& pred,
                        const std::vector<LabelVector>& gold) {
  const int size = check_aligned(pred, gold);
  long matches = 0;
  long mismatches = 0;
  for (std::size_t k = 0; k < pred.size(); ++k) {
    const long equal = (pred[k].bits() == gold[k].bits()).count();
    matches += equal;
    mismatches += size - equal;
  }
  const long total = static_cast<long>(pred.size()) * size;
  if (matches + mismatches != total) {
    throw ValidationError("internal cell-count mismatch in lexical accuracy");
  }
  // Returned as the exact complement of the mismatch fraction so
  // lexical_accuracy + hamming_loss == 1 holds bit-for-bit.
  return 1.0 - static_cast<double>(mismatches) / static_cast<double>(total);
}

double vector_accuracy(const std::vector<LabelVector>& pred,
                       const std::vector<LabelVector>& gold) {
  check_aligned(pred, gold);
  long wrong = 0;
  for (std::size_t k = 0; k < pred.size(); ++k) {
    if (pred[k] != gold[k]) ++wrong;
  }
  // Complement form, mirroring lexical_accuracy: the wrong-vector fraction is
  // >= the wrong-cell fraction as exact rationals, and both 1 - x steps round
  // monotonically, so vector_accuracy <= lexical_accuracy survives rounding
  // (they can tie, e.g. for single-label spaces).
  return 1.0 - static_cast<double>(wrong) / static_cast<double>(pred.size());
}

std::vector<LabelMetrics> per_label_metrics(const LabelSpace& space,
                                            const std::vector<LabelVector>& pred,
                                            const std::vector<LabelVector>& gold,
                                            double zero_division) {
  check_policy(zero_division);
  const int size = check_aligned(pred, gold);
  if (size != space.size()) {
    throw LengthMismatch("vectors have " + std::to_string(size) + " labels but the space has " +
                         std::to_string(space.size()));
  }
  const std::vector<Confusion> counts = confusion_counts(pred, gold, size);
  const double n = static_cast<double>(pred.size());

  std::vector<LabelMetrics> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const Confusion& c = counts[static_cast<std::size_t>(i)];
    LabelMetrics& m = out[static_cast<std::size_t>(i)];
    m.label = space.name(i);
    m.tp = c.tp;
    m.fp = c.fp;
    m.fn = c.fn;
    m.tn = c.tn;
    m.accuracy = static_cast<double>(c.tp + c.tn) / n;
    m.precision = c.tp + c.fp == 0 ? zero_division
                                   : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    m.recall = c.tp + c.fn == 0 ? zero_division
                                : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    m.f1 = f1_of(c, zero_division);
  }
  return out;
}

double macro_f1(const std::vector<LabelVector>& pred, const std::vector<LabelVector>& gold,
                double zero_division) {
  check_policy(zero_division);
  const int size = check_aligned(pred, gold);
  const std::vector<Confusion> counts = confusion_counts(pred, gold, size);
  double sum = 0.0;
  for (const Confusion& c : counts) sum += f1_of(c, zero_division);
  return sum / static_cast<double>(size);
}

CooccurrenceCounts predicted_cooccurrence(const LabelSpace& space,
                                          const std::vector<LabelVector>& pred) {
  return cooccurrence_counts(space, pred);
}

EvalReport evaluate(const LabelSpace& space, const std::vector<LabelVector>& pred,
                    const std::vector<LabelVector>& gold, double zero_division) {
  EvalReport report;
  report.n_instances = static_cast<long>(pred.size());
  report.hamming_loss = hamming_loss(pred, gold);
  report.lexical_accuracy = lexical_accuracy(pred, gold);
  report.vector_accuracy = vector_accuracy(pred, gold);
  report.per_label = per_label_metrics(space, pred, gold, zero_division);
  double sum = 0.0;
  for (const LabelMetrics& m : report.per_label) sum += m.f1;
  report.macro_f1 = sum / static_cast<double>(space.size());
  report.zero_division = zero_division;
  return report;
}

}  // namespace entmap
