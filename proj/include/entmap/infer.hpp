#pragma once

#include <array>
#include <string>
#include <vector>

#include "entmap/likelihood.hpp"
#include "entmap/metrics.hpp"
#include "entmap/prior.hpp"

namespace entmap {

/// Alpha grid used when a sweep is requested without an explicit list.
inline constexpr std::array<double, 8> kDefaultAlphaGrid = {0.0,  0.1, 0.25, 0.5,
                                                            0.75, 1.0, 2.0,  5.0};

struct MapResult {
  std::string id;
  LabelVector map_vector;   // exact argmax of the log objective
  double objective = 0.0;   // posterior_log_objective at the argmax
  LabelVector baseline;     // alpha = 0 decode (threshold_decode) for deltas
};

/// Joint log objective combining likelihood and weighted prior:
///
///   likelihood_log_score(E, rec) + alpha * prior_log_score(E, prior)
///
/// This differs from the reduced form sum_i E_i log(p_yes/p_no) + alpha*prior
/// only by the configuration-independent constant sum_i log p_no(i), so both
/// share one argmax; the full form is kept so reported objectives are true
/// log posteriors up to the normalizer.
double posterior_log_objective(const LabelVector& labels, const LikelihoodRecord& rec,
                               const IsingPrior& prior, double alpha);

/// Exact MAP decode by enumerating all 2^L configurations. Exact objective
/// ties resolve via tie_break_less (fewer active labels, then lexicographic),
/// so the result is fully deterministic.
MapResult map_infer(const LikelihoodRecord& rec, const IsingPrior& prior, double alpha);

/// map_infer over a batch; output order matches input order and each record
/// is independent. Errors are rethrown with the offending record id.
std::vector<MapResult> infer_batch(const std::vector<LikelihoodRecord>& records,
                                   const IsingPrior& prior, double alpha);

struct SweepReport {
  std::vector<double> alphas;
  std::vector<EvalReport> reports;  // aligned with alphas
  // Best alpha per metric; value ties resolve toward the smaller alpha.
  double best_lexical_alpha = 0.0;
  double best_vector_alpha = 0.0;
  double best_hamming_alpha = 0.0;
  double best_macro_f1_alpha = 0.0;
};

/// Runs the full decode + evaluation pipeline for every alpha. Records are
/// matched to gold items by id; an id without gold throws MissingGold. An
/// empty alpha list selects kDefaultAlphaGrid.
SweepReport alpha_sweep(const std::vector<LikelihoodRecord>& records, const LabeledDataset& gold,
                        const IsingPrior& prior, std::vector<double> alphas = {},
                        double zero_division = 0.0);

}  // namespace entmap
