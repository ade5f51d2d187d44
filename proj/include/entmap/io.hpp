#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entmap/annotation.hpp"
#include "entmap/infer.hpp"
#include "entmap/labels.hpp"
#include "entmap/likelihood.hpp"
#include "entmap/metrics.hpp"
#include "entmap/prior.hpp"

namespace entmap {

// ---------------------------------------------------------------------------
// Model response parsing
// ---------------------------------------------------------------------------

enum class ParseStatus { ok, missing_answer, malformed_confidence };

struct ParsedAnswer {
  ParseStatus status = ParseStatus::missing_answer;
  std::optional<bool> yes;        // present iff a valid yes/no answer was found
  std::optional<int> confidence;  // 1..5 when present
};

/// One raw model answer for a single (instance, label) question.
struct RawResponse {
  std::string id;
  std::string label;
  std::string text;
};

/// Extracts the final decision from a free-form model answer: the LAST
/// <answer>...</answer> occurrence (trimmed, case-insensitive yes/no) and the
/// LAST <confidence>N</confidence> with N in 1..5. Tag content that fails
/// these checks yields missing_answer / malformed_confidence instead of a
/// throw; text without an answer tag yields missing_answer.
ParsedAnswer parse_response(std::string_view text);

enum class FillPolicy { error, neutral };

struct PredictionSet {
  std::vector<LikelihoodRecord> records;
  // Parsed confidence per record and label, pass-through metadata only.
  std::vector<std::vector<std::optional<int>>> confidence;
};

/// Assembles per-label yes/no answers into likelihood records: yes maps to
/// (1 - kProbFloor, kProbFloor), no to the reverse, so hard decisions become
/// near-deterministic likelihoods a strong prior can still overturn. Missing
/// or unparseable (id, label) answers throw MissingResponse under
/// FillPolicy::error or become (0.5, 0.5) under FillPolicy::neutral.
PredictionSet responses_to_records(const std::vector<RawResponse>& responses,
                                   const LabelSpace& space,
                                   FillPolicy policy = FillPolicy::error);

// ---------------------------------------------------------------------------
// Files. JSONL readers report malformed lines as ParseError with "path:line";
// unreadable/unwritable files raise IoError.
// ---------------------------------------------------------------------------

/// Newline-separated label names; blank lines ignored.
LabelSpace read_label_space_file(const std::string& path);

/// Lines {"id": ..., "labels": {<name>: 0|1, ...}}; the label set must match
/// the space exactly (unknown or missing names are errors).
LabeledDataset read_label_file(const std::string& path, const LabelSpace& space);
void write_label_file(const std::string& path, const LabeledDataset& data);

/// Lines {"id": ..., "labels": {<name>: <scores>}} where <scores> is one of
/// {"yes_logit": y, "no_logit": n}, {"p1": v, "p0": w} or {"p1": v}; the
/// encoding must be uniform across the file. With normalize (the default)
/// (p1, p0) pairs are rescaled to sum to one; either way values are clamped
/// by kProbFloor. An optional "confidence" object per line is carried along.
PredictionSet read_prediction_file(const std::string& path, const LabelSpace& space,
                                   bool normalize = true);
void write_prediction_file(const std::string& path, const LabelSpace& space,
                           const PredictionSet& preds);

/// Lines {"id": ..., "label": ..., "text": ...}.
std::vector<RawResponse> read_response_file(const std::string& path);

/// Lines {"id": ..., "annotations": [{<name>: 0|1, ...}, ...]} with one inner
/// object per rater in a stable order.
AnnotationSet read_annotation_file(const std::string& path, const LabelSpace& space);

nlohmann::json prior_to_json(const IsingPrior& prior);
IsingPrior prior_from_json(const nlohmann::json& j);
void write_prior_file(const std::string& path, const IsingPrior& prior);
IsingPrior read_prior_file(const std::string& path);

/// Lines {"id": ..., "map": {...}, "baseline": {...}, "objective": v}.
void write_map_file(const std::string& path, const LabelSpace& space,
                    const std::vector<MapResult>& results);

/// Prediction vectors for evaluation: accepts gold-style lines ("labels")
/// and MAP output lines ("map"), returned in file order.
std::vector<std::pair<std::string, LabelVector>> read_eval_vectors(const std::string& path,
                                                                   const LabelSpace& space);

// ---------------------------------------------------------------------------
// Report serialization and table rendering
// ---------------------------------------------------------------------------

nlohmann::json report_to_json(const EvalReport& report);
std::string render_report(const EvalReport& report);

nlohmann::json stats_to_json(const LabelSpace& space, const StatsReport& stats,
                             const CooccurrenceCounts& cooc);
std::string render_stats(const LabelSpace& space, const StatsReport& stats);

nlohmann::json sweep_to_json(const SweepReport& sweep);
std::string render_sweep(const SweepReport& sweep);

nlohmann::json agreement_to_json(const LabelSpace& space, const AgreementReport& report);
std::string render_agreement(const LabelSpace& space, const AgreementReport& report);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace entmap
