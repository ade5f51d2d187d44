// Command-line front end: estimate a label co-occurrence prior, decode MAP
// label vectors, and evaluate predictions. File arguments accept "-" for
// stdin/stdout so subcommands compose into pipelines.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entmap/entmap.hpp"

namespace {

using namespace entmap;

bool verbose() {
  const char* env = std::getenv("ENTMAP_VERBOSE");
  return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void note(const std::string& message) {
  if (verbose()) std::cerr << "entmap: " << message << '\n';
}

LabelSpace load_space(const std::string& labels_path) {
  if (labels_path.empty()) return LabelSpace::plutchik();
  LabelSpace space = read_label_space_file(labels_path);
  note("label space with " + std::to_string(space.size()) + " labels from " + labels_path);
  return space;
}

// Priors carry their own label list; an explicit --labels must agree with it.
LabelSpace check_prior_space(const IsingPrior& prior, const std::string& labels_path) {
  if (!labels_path.empty() && read_label_space_file(labels_path) != prior.space()) {
    throw ValidationError("--labels disagrees with the label list stored in the prior");
  }
  return prior.space();
}

// Aligns prediction ids to gold vectors, in prediction order.
std::vector<LabelVector> gold_for(const LabeledDataset& gold,
                                  const std::vector<std::string>& ids) {
  std::vector<LabelVector> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    const LabeledItem* found = nullptr;
    for (const LabeledItem& item : gold.items()) {
      if (item.id == id) {
        found = &item;
        break;
      }
    }
    if (found == nullptr) {
      throw MissingGold("no gold item with id '" + id + "'");
    }
    out.push_back(found->labels);
  }
  return out;
}

struct CommonArgs {
  std::string labels_path;
  std::string out_path;
};

int run(CLI::App& app, int argc, char** argv) {
  CommonArgs common;
  app.add_option("--labels", common.labels_path,
                 "newline-separated label names (default: the 8 Plutchik emotions)");
  app.require_subcommand(1);

  // stats <gold.jsonl>
  auto* stats_cmd = app.add_subcommand("stats", "corpus statistics of a gold label file");
  std::string stats_gold;
  stats_cmd->add_option("gold", stats_gold, "gold JSONL file")->required();
  stats_cmd->add_option("-o,--output", common.out_path, "write the report as JSON");

  // agree <annotations.jsonl>
  auto* agree_cmd = app.add_subcommand("agree", "inter-annotator agreement (Cohen, Fleiss)");
  std::string agree_file;
  agree_cmd->add_option("annotations", agree_file, "annotation JSONL file")->required();
  agree_cmd->add_option("-o,--output", common.out_path, "write the report as JSON");

  // estimate-prior <gold.jsonl>
  auto* prior_cmd =
      app.add_subcommand("estimate-prior", "closed-form co-occurrence prior from gold labels");
  std::string prior_gold;
  double epsilon = 0.5;
  prior_cmd->add_option("gold", prior_gold, "gold JSONL file")->required();
  prior_cmd->add_option("--epsilon", epsilon, "smoothing pseudo-count (default 0.5)");
  prior_cmd->add_option("-o,--output", common.out_path, "prior JSON file (default stdout)");

  // parse-responses <raw.jsonl>
  auto* parse_cmd =
      app.add_subcommand("parse-responses", "tagged yes/no answers to prediction records");
  std::string raw_file;
  std::string fill = "error";
  parse_cmd->add_option("responses", raw_file, "raw response JSONL file")->required();
  parse_cmd->add_option("--fill", fill, "missing-answer policy: error or neutral")
      ->check(CLI::IsMember({"error", "neutral"}));
  parse_cmd->add_option("-o,--output", common.out_path, "prediction JSONL file (default stdout)");

  // infer <preds.jsonl>
  auto* infer_cmd = app.add_subcommand("infer", "exact MAP decode under the weighted prior");
  std::string infer_preds, infer_prior;
  double alpha = 0.0;
  bool no_normalize = false;
  infer_cmd->add_option("predictions", infer_preds, "prediction JSONL file")->required();
  infer_cmd->add_option("--prior", infer_prior, "prior JSON file")->required();
  infer_cmd->add_option("--alpha", alpha, "prior weight")->required();
  infer_cmd->add_flag("--no-normalize", no_normalize, "keep unnormalized (p1, p0) pairs");
  infer_cmd->add_option("-o,--output", common.out_path, "MAP JSONL file (default stdout)");

  // evaluate <pred.jsonl> <gold.jsonl>
  auto* eval_cmd = app.add_subcommand("evaluate", "score predictions against gold labels");
  std::string eval_pred, eval_gold;
  int zero_division = 0;
  eval_cmd->add_option("predictions", eval_pred, "prediction or MAP JSONL file")->required();
  eval_cmd->add_option("gold", eval_gold, "gold JSONL file")->required();
  eval_cmd->add_option("--zero-division", zero_division, "value for 0/0 metrics: 0 or 1")
      ->check(CLI::IsMember({0, 1}));
  eval_cmd->add_option("-o,--output", common.out_path, "write the report as JSON");

  // sweep <preds.jsonl> <gold.jsonl>
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate MAP decoding over an alpha grid");
  std::string sweep_preds, sweep_gold, sweep_prior;
  std::vector<double> alphas;
  bool sweep_no_normalize = false;
  int sweep_zero_division = 0;
  sweep_cmd->add_option("predictions", sweep_preds, "prediction JSONL file")->required();
  sweep_cmd->add_option("gold", sweep_gold, "gold JSONL file")->required();
  sweep_cmd->add_option("--prior", sweep_prior, "prior JSON file")->required();
  sweep_cmd->add_option("--alphas", alphas, "alpha grid (default 0 0.1 0.25 0.5 0.75 1 2 5)");
  sweep_cmd->add_flag("--no-normalize", sweep_no_normalize, "keep unnormalized (p1, p0) pairs");
  sweep_cmd->add_option("--zero-division", sweep_zero_division, "value for 0/0 metrics: 0 or 1")
      ->check(CLI::IsMember({0, 1}));
  sweep_cmd->add_option("-o,--output", common.out_path, "write the report as JSON");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "sample label vectors from a prior");
  std::string synth_prior;
  int synth_n = 0;
  std::uint64_t seed = 0;
  synth_cmd->add_option("--prior", synth_prior, "prior JSON file")->required();
  synth_cmd->add_option("-n,--count", synth_n, "number of samples")->required();
  synth_cmd->add_option("--seed", seed, "random seed (default 0)");
  synth_cmd->add_option("-o,--output", common.out_path, "gold-format JSONL file (default stdout)");

  app.parse(argc, argv);

  // Human-readable reports go to stdout unless JSON is routed there.
  const bool render_to_stdout = common.out_path != "-";

  if (stats_cmd->parsed()) {
    const LabelSpace space = load_space(common.labels_path);
    const LabeledDataset gold = read_label_file(stats_gold, space);
    note("read " + std::to_string(gold.size()) + " gold items");
    const StatsReport stats = dataset_statistics(gold);
    if (render_to_stdout) std::cout << render_stats(space, stats);
    if (!common.out_path.empty()) {
      write_json_file(common.out_path, stats_to_json(space, stats, cooccurrence_counts(gold)));
    }
  } else if (agree_cmd->parsed()) {
    const LabelSpace space = load_space(common.labels_path);
    const AnnotationSet set = read_annotation_file(agree_file, space);
    note("read " + std::to_string(set.size()) + " annotated items, " +
         std::to_string(set.annotator_count()) + " annotators");
    const AgreementReport report = agreement_report(set);
    if (render_to_stdout) std::cout << render_agreement(space, report);
    if (!common.out_path.empty()) {
      write_json_file(common.out_path, agreement_to_json(space, report));
    }
  } else if (prior_cmd->parsed()) {
    const LabelSpace space = load_space(common.labels_path);
    const LabeledDataset gold = read_label_file(prior_gold, space);
    const IsingPrior estimated = estimate_prior(gold, epsilon);
    const IsingPrior prior(estimated.space(), estimated.bias(), estimated.coupling(),
                           estimated.epsilon(), prior_gold == "-" ? "stdin" : prior_gold);
    note("estimated prior from " + std::to_string(gold.size()) + " items, epsilon " +
         std::to_string(epsilon));
    write_json_file(common.out_path.empty() ? "-" : common.out_path, prior_to_json(prior));
  } else if (parse_cmd->parsed()) {
    const LabelSpace space = load_space(common.labels_path);
    const std::vector<RawResponse> responses = read_response_file(raw_file);
    const FillPolicy policy = fill == "neutral" ? FillPolicy::neutral : FillPolicy::error;
    const PredictionSet preds = responses_to_records(responses, space, policy);
    note("assembled " + std::to_string(preds.records.size()) + " records from " +
         std::to_string(responses.size()) + " responses");
    write_prediction_file(common.out_path.empty() ? "-" : common.out_path, space, preds);
  } else if (infer_cmd->parsed()) {
    const IsingPrior prior = read_prior_file(infer_prior);
    const LabelSpace space = check_prior_space(prior, common.labels_path);
    const PredictionSet preds = read_prediction_file(infer_preds, space, !no_normalize);
    const std::vector<MapResult> results = infer_batch(preds.records, prior, alpha);
    note("decoded " + std::to_string(results.size()) + " records at alpha " +
         std::to_string(alpha));
    write_map_file(common.out_path.empty() ? "-" : common.out_path, space, results);
  } else if (eval_cmd->parsed()) {
    const LabelSpace space = load_space(common.labels_path);
    const auto pred_pairs = read_eval_vectors(eval_pred, space);
    const LabeledDataset gold = read_label_file(eval_gold, space);
    std::vector<std::string> ids;
    std::vector<LabelVector> pred;
    ids.reserve(pred_pairs.size());
    pred.reserve(pred_pairs.size());
    for (const auto& [id, vec] : pred_pairs) {
      ids.push_back(id);
      pred.push_back(vec);
    }
    const EvalReport report =
        evaluate(space, pred, gold_for(gold, ids), static_cast<double>(zero_division));
    if (render_to_stdout) std::cout << render_report(report);
    if (!common.out_path.empty()) {
      write_json_file(common.out_path, report_to_json(report));
    }
  } else if (sweep_cmd->parsed()) {
    const IsingPrior prior = read_prior_file(sweep_prior);
    const LabelSpace space = check_prior_space(prior, common.labels_path);
    const PredictionSet preds = read_prediction_file(sweep_preds, space, !sweep_no_normalize);
    const LabeledDataset gold = read_label_file(sweep_gold, space);
    const SweepReport report = alpha_sweep(preds.records, gold, prior, alphas,
                                           static_cast<double>(sweep_zero_division));
    if (render_to_stdout) std::cout << render_sweep(report);
    if (!common.out_path.empty()) {
      write_json_file(common.out_path, sweep_to_json(report));
    }
  } else if (synth_cmd->parsed()) {
    const IsingPrior prior = read_prior_file(synth_prior);
    check_prior_space(prior, common.labels_path);
    const LabeledDataset samples = sample_prior(prior, synth_n, seed);
    note("sampled " + std::to_string(samples.size()) + " vectors with seed " +
         std::to_string(seed));
    write_label_file(common.out_path.empty() ? "-" : common.out_path, samples);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement-aware MAP post-processing for multi-label classifiers"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // usage problems count as validation errors
  } catch (const IoError& e) {
    std::cerr << "entmap: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "entmap: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "entmap: " << e.what() << '\n';
    return 1;
  }
}
