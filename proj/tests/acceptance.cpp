// End-to-end checks over the assembled library. Each check prints one
// PASS/FAIL/SKIP line with its wall time; the binary exits nonzero if any
// check fails. Wall-time budgets are part of the contract: a check that
// passes but blows its budget fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "entmap/entmap.hpp"
#include "support.hpp"

using namespace entmap;
using testsupport::Rng;
using testsupport::make_space;

namespace {

struct Failure {
  std::string detail;
};

struct Skipped {
  std::string reason;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void require_close(double actual, double expected, double tol, const std::string& what) {
  if (!(std::abs(actual - expected) <= tol)) {
    throw Failure{what + ": got " + num(actual) + ", want " + num(expected) + " +- " + num(tol)};
  }
}

// --------------------------------------------------------------------------

void complement_identity() {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<LabelVector> pred = testsupport::random_vectors(rng, 200, 8);
    const std::vector<LabelVector> gold = testsupport::random_vectors(rng, 200, 8);
    const double lexical = lexical_accuracy(pred, gold);
    const double hamming = hamming_loss(pred, gold);
    require(lexical + hamming == 1.0,
            "lexical + hamming != 1 at trial " + std::to_string(trial));
    require(lexical == 1.0 - hamming,
            "lexical != 1 - hamming at trial " + std::to_string(trial));
    require(vector_accuracy(pred, gold) <= lexical,
            "vector accuracy exceeded lexical accuracy at trial " + std::to_string(trial));
  }
}

void alpha_zero_reduction() {
  Rng rng(2025);
  for (int trial = 0; trial < 1000; ++trial) {
    const int size = 1 + rng.below(10);
    const LabelSpace space = make_space(size);
    const IsingPrior prior = testsupport::random_prior(rng, space, 2.0, 2.0);
    const LikelihoodRecord rec = testsupport::random_record(rng, size, "r");
    require(map_infer(rec, prior, 0.0).map_vector == threshold_decode(rec),
            "alpha 0 decode differed from thresholding at trial " + std::to_string(trial));
  }
}

void exhaustive_argmax() {
  Rng rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const int size = 1 + rng.below(10);
    const LabelSpace space = make_space(size);
    const IsingPrior prior = testsupport::random_prior(rng, space, 2.0, 2.0);
    const LikelihoodRecord rec = testsupport::random_record(rng, size, "r");
    const double alpha = rng.range(0.0, 5.0);
    const MapResult result = map_infer(rec, prior, alpha);

    // The objective written straight from its definition, independent of the
    // library's accumulation order.
    const auto objective = [&](const LabelVector& e) {
      double score = 0.0;
      for (int i = 0; i < size; ++i) {
        score += e[i] ? std::log(rec.p_yes()(i)) : std::log(rec.p_no()(i));
        if (e[i]) {
          score += alpha * prior.bias()(i);
          for (int j = i + 1; j < size; ++j) {
            if (e[j]) score += alpha * prior.coupling()(i, j);
          }
        }
      }
      return score;
    };

    const double best = objective(result.map_vector);
    for (std::uint32_t k = 0; k < configuration_count(space); ++k) {
      require(best >= objective(configuration_at(space, k)),
              "a configuration beat the returned map vector at trial " + std::to_string(trial));
    }
  }
}

void estimator_round_trip() {
  const LabelSpace space = make_space(4);
  Eigen::VectorXd bias(4);
  bias << 1.2, -0.8, 0.4, -1.4;
  // Zero couplings make the closed-form estimator's fixed point the truth
  // itself: marginal log-odds recover the biases and independent labels give
  // q_ij -> q_i q_j, so the fitted couplings shrink to zero.
  const IsingPrior truth(space, bias, Eigen::MatrixXd::Zero(4, 4), 0.0);

  const LabeledDataset sample = sample_prior(truth, 100000, 7);
  const IsingPrior fitted = estimate_prior(sample, 0.5);
  for (int i = 0; i < 4; ++i) {
    require_close(fitted.bias()(i), bias(i), 0.05, "bias for " + space.name(i));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      require_close(fitted.coupling()(i, j), 0.0, 0.05,
                    "coupling (" + space.name(i) + ", " + space.name(j) + ")");
    }
  }
}

void entanglement_correction() {
  const LabelSpace space({"sadness", "anger", "anticipation"});
  Eigen::VectorXd p_yes(3), p_no(3);
  p_yes << 0.9, 0.55, 0.9;  // anger is nearly a coin flip
  p_no << 0.1, 0.45, 0.1;
  const LikelihoodRecord rec("scene", p_yes, p_no);

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(3, 3);
  coupling(0, 1) = -2.0;  // sadness and anger repel
  coupling(0, 2) = 2.0;   // sadness and anticipation attract
  coupling(1, 2) = -0.5;
  const IsingPrior prior(space, Eigen::VectorXd::Zero(3), coupling, 0.0);

  require(map_infer(rec, prior, 0.0).map_vector == LabelVector{1, 1, 1},
          "the baseline should keep all three labels");
  require(map_infer(rec, prior, 1.0).map_vector == LabelVector{1, 0, 1},
          "the weighted prior should drop the ambiguous anger label");
}

void agreement_suite() {
  // Unanimous raters over mixed decisions: kappa is exactly 1 everywhere.
  {
    std::vector<AnnotatedItem> items;
    const std::vector<LabelVector> decisions = {LabelVector{1, 0}, LabelVector{0, 1},
                                                LabelVector{1, 1}, LabelVector{0, 0}};
    for (std::size_t k = 0; k < decisions.size(); ++k) {
      items.push_back({"u" + std::to_string(k), {decisions[k], decisions[k], decisions[k]}});
    }
    const AnnotationSet unanimous(make_space(2), std::move(items));
    require(fleiss_kappa(unanimous) == 1.0, "unanimous fleiss kappa is not 1");
    const Eigen::MatrixXd cohen = cohen_kappa_pairwise(unanimous);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        require(cohen(a, b) == 1.0, "unanimous cohen kappa is not 1");
      }
    }
  }

  // Independent coin-flip raters over 2500 items x 4 labels = 10,000 pooled
  // decisions: every kappa sits near zero.
  {
    Rng rng(2028);
    std::vector<AnnotatedItem> items;
    for (int k = 0; k < 2500; ++k) {
      std::vector<LabelVector> raters;
      for (int r = 0; r < 3; ++r) raters.push_back(testsupport::random_vector(rng, 4));
      items.push_back({"m" + std::to_string(k), std::move(raters)});
    }
    const AnnotationSet independent(make_space(4), std::move(items));
    const double fleiss = fleiss_kappa(independent);
    require(std::abs(fleiss) < 0.05, "independent-rater fleiss kappa drifted: " + num(fleiss));
    const Eigen::MatrixXd cohen = cohen_kappa_pairwise(independent);
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        require(std::abs(cohen(a, b)) < 0.05,
                "independent-rater cohen kappa drifted: " + num(cohen(a, b)));
      }
    }
  }

  // Hand-built five-decision fixture, evaluated independently: yes-counts
  // (3, 2, 1, 0, 2) over three raters give kappa = 11/56.
  {
    std::vector<AnnotatedItem> items;
    const int yes_counts[] = {3, 2, 1, 0, 2};
    for (int k = 0; k < 5; ++k) {
      std::vector<LabelVector> raters;
      for (int r = 0; r < 3; ++r) raters.push_back(LabelVector{r < yes_counts[k] ? 1 : 0});
      items.push_back({"f" + std::to_string(k), std::move(raters)});
    }
    const AnnotationSet fixture(make_space(1), std::move(items));
    require_close(fleiss_kappa(fixture), 11.0 / 56.0, 1e-9, "five-decision fleiss fixture");
  }
}

void corpus_statistics() {
  const char* gold_path = std::getenv("ENTMAP_EMOSCENE_GOLD");
  const char* ann_path = std::getenv("ENTMAP_EMOSCENE_ANNOTATIONS");
  if (!gold_path && !ann_path) {
    throw Skipped{"set ENTMAP_EMOSCENE_GOLD and/or ENTMAP_EMOSCENE_ANNOTATIONS to run"};
  }
  const LabelSpace space = LabelSpace::plutchik();
  if (gold_path) {
    const StatsReport stats = dataset_statistics(read_label_file(gold_path, space));
    require(stats.n == 4731, "expected 4731 items, read " + std::to_string(stats.n));
    require_close(stats.multi_label_fraction, 0.4490, 0.0001, "multi-label fraction");
    require_close(stats.mean_label_cardinality, 1.54, 0.005, "mean label cardinality");
    require(stats.single_label_count == 1165,
            "expected 1165 single-label items, got " + std::to_string(stats.single_label_count));
  }
  if (ann_path) {
    const double fleiss = fleiss_kappa(read_annotation_file(ann_path, space));
    require_close(fleiss, 0.43, 0.02, "corpus fleiss kappa");
  }
}

void pipeline_consistency() {
  Rng rng(2029);
  const int n = 60;
  const LabelSpace space = make_space(5);

  // Free-form response texture: tag case, trailing confidence, retractions
  // and malformed confidence all appear, but every text carries one usable
  // final answer.
  const char* yes_forms[] = {
      "Let me think this through.\n<answer>yes</answer>\n<confidence>4</confidence>",
      "<ANSWER> Yes </ANSWER>",
      "Initially <answer>no</answer>, but on reflection <answer>yes</answer>",
      "<answer>yes</answer><confidence>9</confidence>",
  };
  const char* no_forms[] = {
      "<answer>no</answer>",
      "Hard to see it. <answer>NO</answer> <confidence>2</confidence>",
      "<answer>yes</answer> wait, that is wrong: <answer>no</answer>",
      "<Answer>no</Answer>",
  };

  std::vector<RawResponse> responses;
  std::vector<LabelVector> embedded;
  std::vector<LabelVector> gold;
  for (int k = 0; k < n; ++k) {
    Eigen::ArrayXi bits(5);
    for (int i = 0; i < 5; ++i) {
      bits(i) = rng.bernoulli(0.4);
      const char* text = bits(i) ? yes_forms[rng.below(4)] : no_forms[rng.below(4)];
      responses.push_back({"item-" + std::to_string(k), space.name(i), text});
    }
    embedded.emplace_back(bits);
    gold.push_back(testsupport::random_vector(rng, 5));
  }

  const PredictionSet set = responses_to_records(responses, space);
  const IsingPrior flat(space, Eigen::VectorXd::Zero(5), Eigen::MatrixXd::Zero(5, 5), 0.0);
  const std::vector<MapResult> results = infer_batch(set.records, flat, 0.0);
  std::vector<LabelVector> decoded;
  for (int k = 0; k < n; ++k) {
    require(results[static_cast<std::size_t>(k)].id == "item-" + std::to_string(k),
            "batch order drifted from item order");
    decoded.push_back(results[static_cast<std::size_t>(k)].map_vector);
  }

  const EvalReport via_pipeline = evaluate(space, decoded, gold);
  const EvalReport direct = evaluate(space, embedded, gold);
  require(via_pipeline.n_instances == direct.n_instances, "instance counts differ");
  require(via_pipeline.lexical_accuracy == direct.lexical_accuracy, "lexical accuracy differs");
  require(via_pipeline.vector_accuracy == direct.vector_accuracy, "vector accuracy differs");
  require(via_pipeline.hamming_loss == direct.hamming_loss, "hamming loss differs");
  require(via_pipeline.macro_f1 == direct.macro_f1, "macro f1 differs");
  for (std::size_t i = 0; i < direct.per_label.size(); ++i) {
    const LabelMetrics& a = via_pipeline.per_label[i];
    const LabelMetrics& b = direct.per_label[i];
    require(a.tp == b.tp && a.fp == b.fp && a.fn == b.fn && a.tn == b.tn,
            "confusion counts differ for " + b.label);
    require(a.accuracy == b.accuracy && a.precision == b.precision && a.recall == b.recall &&
                a.f1 == b.f1,
            "per-label metrics differ for " + b.label);
  }
}

void sweep_improvement() {
  // A strongly entangled 8-label prior generates the gold corpus; noisy
  // logits (signal 1.0, noise sd 2.2) leave plenty of per-label mistakes for
  // the re-estimated prior to repair.
  const LabelSpace space = make_space(8);
  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(8, 8);
  coupling(0, 1) = 1.8;
  coupling(0, 7) = 1.5;
  coupling(1, 7) = 1.2;
  coupling(0, 4) = -2.0;
  coupling(4, 6) = 1.6;
  coupling(2, 4) = 0.8;
  coupling(0, 6) = -1.5;
  coupling(3, 5) = 0.9;
  const IsingPrior truth(space, Eigen::VectorXd::Constant(8, -1.0), coupling, 0.0);
  const LabeledDataset gold = sample_prior(truth, 400, 11);

  Rng rng(2030);
  std::vector<LikelihoodRecord> records;
  for (const LabeledItem& item : gold.items()) {
    Eigen::VectorXd p_yes(8), p_no(8);
    for (int i = 0; i < 8; ++i) {
      const double yes_logit = (item.labels[i] ? 1.0 : -1.0) + 2.2 * rng.normal();
      const auto [p1, p0] = logits_to_probs(yes_logit, 0.0);
      p_yes(i) = p1;
      p_no(i) = p0;
    }
    records.emplace_back(item.id, std::move(p_yes), std::move(p_no));
  }

  const IsingPrior fitted = estimate_prior(gold, 0.5);
  const SweepReport sweep = alpha_sweep(records, gold, fitted);
  require(sweep.alphas.front() == 0.0, "the default grid should start at 0");
  const double baseline = sweep.reports.front().hamming_loss;
  double best_positive = 1.0;
  for (std::size_t k = 1; k < sweep.alphas.size(); ++k) {
    best_positive = std::min(best_positive, sweep.reports[k].hamming_loss);
  }
  require(best_positive <= baseline,
          "no positive alpha matched the baseline hamming loss (" + num(best_positive) + " vs " +
              num(baseline) + ")");
}

// --------------------------------------------------------------------------

struct Check {
  const char* name;
  double budget_s;
  void (*body)();
};

}  // namespace

int main() {
  const Check checks[] = {
      {"complement-identity", 1.0, complement_identity},
      {"alpha-zero-reduction", 1.0, alpha_zero_reduction},
      {"exhaustive-argmax", 5.0, exhaustive_argmax},
      {"estimator-round-trip", 10.0, estimator_round_trip},
      {"entanglement-correction", 1.0, entanglement_correction},
      {"agreement-suite", 2.0, agreement_suite},
      {"corpus-statistics", 30.0, corpus_statistics},
      {"pipeline-consistency", 1.0, pipeline_consistency},
      {"sweep-improvement", 10.0, sweep_improvement},
  };

  int failures = 0;
  for (const Check& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS";
    std::string detail;
    try {
      check.body();
    } catch (const Skipped& s) {
      status = "SKIP";
      detail = s.reason;
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.detail;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "PASS" && secs > check.budget_s) {
      status = "FAIL";
      detail = "exceeded the " + num(check.budget_s) + " s budget";
    }
    std::printf("%s %-24s (%.2f s)%s%s\n", status.c_str(), check.name, secs,
                detail.empty() ? "" : ": ", detail.c_str());
    if (status == "FAIL") ++failures;
  }
  if (failures > 0) {
    std::printf("%d check(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
