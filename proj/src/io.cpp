#include "entmap/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <unordered_map>

#include "entmap/errors.hpp"

namespace entmap {

namespace {

using nlohmann::json;

std::string fmt(const char* pattern, ...) {
  va_list args;
  va_start(args, pattern);
  char buf[256];
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_blank(const std::string& line) {
  return trim(line).empty();
}

// Content spans of every complete <tag>...</tag> occurrence, case-insensitive.
std::vector<std::string_view> tag_contents(std::string_view text, const std::string& hay,
                                           const std::string& tag) {
  const std::string open = "<" + tag + ">";
  const std::string close = "</" + tag + ">";
  std::vector<std::string_view> spans;
  std::size_t pos = 0;
  while (true) {
    const std::size_t o = hay.find(open, pos);
    if (o == std::string::npos) break;
    const std::size_t c = hay.find(close, o + open.size());
    if (c == std::string::npos) break;
    spans.push_back(text.substr(o + open.size(), c - o - open.size()));
    pos = c + close.size();
  }
  return spans;
}

// Path "-" means stdin / stdout throughout, so subcommands compose into
// shell pipelines.
class InputFile {
 public:
  explicit InputFile(const std::string& path)
      : use_stdin_(path == "-"), display_(use_stdin_ ? "stdin" : path) {
    if (!use_stdin_) {
      file_.open(path);
      if (!file_) {
        throw IoError("cannot open '" + path + "' for reading");
      }
    }
  }
  std::istream& stream() { return use_stdin_ ? std::cin : file_; }
  const std::string& display() const { return display_; }

 private:
  bool use_stdin_;
  std::string display_;
  std::ifstream file_;
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path)
      : use_stdout_(path == "-"), display_(use_stdout_ ? "stdout" : path) {
    if (!use_stdout_) {
      file_.open(path);
      if (!file_) {
        throw IoError("cannot open '" + path + "' for writing");
      }
    }
  }
  std::ostream& stream() { return use_stdout_ ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream()) {
      throw IoError("failed writing '" + display_ + "'");
    }
  }

 private:
  bool use_stdout_;
  std::string display_;
  std::ofstream file_;
};

// Reads a JSONL file, calling fn(parsed object, "path:line") per non-blank
// line. JSON syntax and type errors become ParseError with that location.
template <typename Fn>
void for_each_jsonl(const std::string& path, Fn&& fn) {
  InputFile in(path);
  std::string line;
  long lineno = 0;
  while (std::getline(in.stream(), line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string where = in.display() + ":" + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    try {
      fn(j, where);
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
}

std::string require_id(const json& j, const std::string& where) {
  if (!j.contains("id") || !j.at("id").is_string()) {
    throw ParseError(where + ": missing string field \"id\"");
  }
  std::string id = j.at("id").get<std::string>();
  if (id.empty()) {
    throw ParseError(where + ": \"id\" must be non-empty");
  }
  return id;
}

// {<name>: 0|1, ...} covering the label space exactly.
LabelVector parse_bits(const json& obj, const LabelSpace& space, const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError(where + ": expected an object of {label: 0|1}");
  }
  Eigen::ArrayXi bits = Eigen::ArrayXi::Constant(space.size(), -1);
  for (const auto& [name, value] : obj.items()) {
    if (!space.contains(name)) {
      throw ParseError(where + ": unknown label '" + name + "'");
    }
    if (!value.is_number_integer() || (value != 0 && value != 1)) {
      throw ParseError(where + ": label '" + name + "' must be 0 or 1");
    }
    bits(space.index(name)) = value.get<int>();
  }
  for (int i = 0; i < space.size(); ++i) {
    if (bits(i) < 0) {
      throw ParseError(where + ": missing label '" + space.name(i) + "'");
    }
  }
  return LabelVector(bits);
}

json bits_to_json(const LabelSpace& space, const LabelVector& labels) {
  json obj = json::object();
  for (int i = 0; i < space.size(); ++i) obj[space.name(i)] = labels[i];
  return obj;
}

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ParseError(where + ": missing numeric field \"" + key + "\"");
  }
  return obj.at(key).get<double>();
}

enum class PredEncoding { unset, logits, pair, p1_only };

PredEncoding entry_encoding(const json& scores, const std::string& where,
                            const std::string& name) {
  if (!scores.is_object()) {
    throw ParseError(where + ": scores for '" + name + "' must be an object");
  }
  const bool yl = scores.contains("yes_logit");
  const bool nl = scores.contains("no_logit");
  const bool p1 = scores.contains("p1");
  const bool p0 = scores.contains("p0");
  if (yl && nl && scores.size() == 2) return PredEncoding::logits;
  if (p1 && p0 && scores.size() == 2) return PredEncoding::pair;
  if (p1 && scores.size() == 1) return PredEncoding::p1_only;
  throw ParseError(where + ": scores for '" + name +
                   "' must be {yes_logit, no_logit}, {p1, p0}, or {p1}");
}

}  // namespace

// ---------------------------------------------------------------------------
// Response parsing
// ---------------------------------------------------------------------------

ParsedAnswer parse_response(std::string_view text) {
  const std::string hay = lower(text);
  ParsedAnswer parsed;

  const auto answers = tag_contents(text, hay, "answer");
  if (answers.empty()) {
    return parsed;  // missing_answer
  }
  const std::string answer = lower(trim(answers.back()));
  if (answer != "yes" && answer != "no") {
    return parsed;  // tag present but content unusable
  }
  parsed.yes = answer == "yes";
  parsed.status = ParseStatus::ok;

  const auto confidences = tag_contents(text, hay, "confidence");
  if (!confidences.empty()) {
    const std::string_view raw = trim(confidences.back());
    if (raw.size() == 1 && raw.front() >= '1' && raw.front() <= '5') {
      parsed.confidence = raw.front() - '0';
    } else {
      parsed.status = ParseStatus::malformed_confidence;
    }
  }
  return parsed;
}

PredictionSet responses_to_records(const std::vector<RawResponse>& responses,
                                   const LabelSpace& space, FillPolicy policy) {
  const int size = space.size();
  std::vector<std::string> ids;
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<std::vector<std::optional<bool>>> answers;
  std::vector<std::vector<std::optional<int>>> confidences;
  std::vector<std::vector<bool>> seen;

  for (const RawResponse& r : responses) {
    if (r.id.empty() || r.label.empty()) {
      throw ValidationError("responses must carry a non-empty id and label");
    }
    if (!space.contains(r.label)) {
      throw ValidationError("unknown label '" + r.label + "' in response for id '" + r.id + "'");
    }
    const int li = space.index(r.label);
    auto [it, inserted] = slot.emplace(r.id, ids.size());
    if (inserted) {
      ids.push_back(r.id);
      answers.emplace_back(size);
      confidences.emplace_back(size);
      seen.emplace_back(size, false);
    }
    const std::size_t k = it->second;
    if (seen[k][static_cast<std::size_t>(li)]) {
      throw DuplicateResponse("duplicate response for id '" + r.id + "', label '" + r.label + "'");
    }
    seen[k][static_cast<std::size_t>(li)] = true;
    const ParsedAnswer parsed = parse_response(r.text);
    answers[k][static_cast<std::size_t>(li)] = parsed.yes;
    confidences[k][static_cast<std::size_t>(li)] = parsed.confidence;
  }

  PredictionSet set;
  set.records.reserve(ids.size());
  set.confidence.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    Eigen::VectorXd p_yes(size), p_no(size);
    for (int i = 0; i < size; ++i) {
      const std::optional<bool>& yes = answers[k][static_cast<std::size_t>(i)];
      if (yes.has_value()) {
        p_yes(i) = *yes ? 1.0 - kProbFloor : kProbFloor;
        p_no(i) = *yes ? kProbFloor : 1.0 - kProbFloor;
      } else if (policy == FillPolicy::neutral) {
        p_yes(i) = 0.5;
        p_no(i) = 0.5;
      } else {
        throw MissingResponse("missing or unparseable answer for id '" + ids[k] +
                              "', label '" + space.name(i) + "'");
      }
    }
    set.records.emplace_back(ids[k], std::move(p_yes), std::move(p_no));
    set.confidence.push_back(std::move(confidences[k]));
  }
  return set;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

LabelSpace read_label_space_file(const std::string& path) {
  InputFile in(path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in.stream(), line)) {
    const std::string_view name = trim(line);
    if (!name.empty()) names.emplace_back(name);
  }
  if (names.empty()) {
    throw ParseError(in.display() + ": no label names found");
  }
  return LabelSpace(names);
}

LabeledDataset read_label_file(const std::string& path, const LabelSpace& space) {
  std::vector<LabeledItem> items;
  for_each_jsonl(path, [&](const json& j, const std::string& where) {
    std::string id = require_id(j, where);
    if (!j.contains("labels")) {
      throw ParseError(where + ": missing field \"labels\"");
    }
    items.push_back({std::move(id), parse_bits(j.at("labels"), space, where)});
  });
  return LabeledDataset(space, std::move(items));
}

void write_label_file(const std::string& path, const LabeledDataset& data) {
  OutputFile out(path);
  for (const LabeledItem& item : data.items()) {
    json j;
    j["id"] = item.id;
    j["labels"] = bits_to_json(data.space(), item.labels);
    out.stream() << j.dump() << '\n';
  }
  out.finish();
}

PredictionSet read_prediction_file(const std::string& path, const LabelSpace& space,
                                   bool normalize) {
  const int size = space.size();
  PredictionSet set;
  PredEncoding file_encoding = PredEncoding::unset;

  for_each_jsonl(path, [&](const json& j, const std::string& where) {
    const std::string id = require_id(j, where);
    if (!j.contains("labels") || !j.at("labels").is_object()) {
      throw ParseError(where + ": missing object field \"labels\"");
    }
    const json& labels = j.at("labels");

    Eigen::VectorXd p_yes = Eigen::VectorXd::Constant(size, -1.0);
    Eigen::VectorXd p_no = Eigen::VectorXd::Constant(size, -1.0);
    for (const auto& [name, scores] : labels.items()) {
      if (!space.contains(name)) {
        throw ParseError(where + ": unknown label '" + name + "'");
      }
      const PredEncoding enc = entry_encoding(scores, where, name);
      if (file_encoding == PredEncoding::unset) {
        file_encoding = enc;
      } else if (enc != file_encoding) {
        throw ParseError(where + ": mixed prediction encodings in one file");
      }
      const int i = space.index(name);
      if (enc == PredEncoding::logits) {
        const auto [p1, p0] = logits_to_probs(require_number(scores, "yes_logit", where),
                                              require_number(scores, "no_logit", where));
        p_yes(i) = p1;
        p_no(i) = p0;
      } else if (enc == PredEncoding::pair) {
        double p1 = require_number(scores, "p1", where);
        double p0 = require_number(scores, "p0", where);
        if (p1 < 0.0 || p0 < 0.0) {
          throw ParseError(where + ": probabilities for '" + name + "' must be nonnegative");
        }
        if (normalize) {
          const double sum = p1 + p0;
          if (sum <= 0.0) {
            throw ParseError(where + ": p1 and p0 for '" + name + "' are both zero");
          }
          if (sum != 1.0) {
            p1 /= sum;
            p0 /= sum;
          }
        } else if (p1 > 1.0 || p0 > 1.0) {
          throw ParseError(where + ": unnormalized probabilities for '" + name +
                           "' exceed 1; rerun with normalization");
        }
        p_yes(i) = p1;
        p_no(i) = p0;
      } else {
        const double p1 = require_number(scores, "p1", where);
        if (p1 < 0.0 || p1 > 1.0) {
          throw ParseError(where + ": p1 for '" + name + "' must lie in [0, 1]");
        }
        p_yes(i) = p1;
        p_no(i) = 1.0 - p1;
      }
    }
    for (int i = 0; i < size; ++i) {
      if (p_yes(i) < 0.0) {
        throw ParseError(where + ": missing label '" + space.name(i) + "'");
      }
    }

    std::vector<std::optional<int>> confidence(static_cast<std::size_t>(size));
    if (j.contains("confidence")) {
      if (!j.at("confidence").is_object()) {
        throw ParseError(where + ": \"confidence\" must be an object");
      }
      for (const auto& [name, value] : j.at("confidence").items()) {
        if (!space.contains(name)) {
          throw ParseError(where + ": unknown label '" + name + "' in confidence");
        }
        if (!value.is_number_integer() || value < 1 || value > 5) {
          throw ParseError(where + ": confidence for '" + name + "' must be an integer in 1..5");
        }
        confidence[static_cast<std::size_t>(space.index(name))] = value.get<int>();
      }
    }
    set.records.emplace_back(id, std::move(p_yes), std::move(p_no));
    set.confidence.push_back(std::move(confidence));
  });
  return set;
}

void write_prediction_file(const std::string& path, const LabelSpace& space,
                           const PredictionSet& preds) {
  if (preds.confidence.size() != preds.records.size()) {
    throw DimensionMismatch("prediction set confidence rows do not match records");
  }
  OutputFile out(path);
  for (std::size_t k = 0; k < preds.records.size(); ++k) {
    const LikelihoodRecord& rec = preds.records[k];
    if (rec.size() != space.size()) {
      throw DimensionMismatch("record '" + rec.id() + "' does not match the label space");
    }
    json labels = json::object();
    for (int i = 0; i < space.size(); ++i) {
      labels[space.name(i)] = {{"p1", rec.p_yes()(i)}, {"p0", rec.p_no()(i)}};
    }
    json j;
    j["id"] = rec.id();
    j["labels"] = std::move(labels);
    json confidence = json::object();
    for (int i = 0; i < space.size(); ++i) {
      const auto& c = preds.confidence[k][static_cast<std::size_t>(i)];
      if (c.has_value()) confidence[space.name(i)] = *c;
    }
    if (!confidence.empty()) j["confidence"] = std::move(confidence);
    out.stream() << j.dump() << '\n';
  }
  out.finish();
}

std::vector<RawResponse> read_response_file(const std::string& path) {
  std::vector<RawResponse> responses;
  for_each_jsonl(path, [&](const json& j, const std::string& where) {
    RawResponse r;
    r.id = require_id(j, where);
    if (!j.contains("label") || !j.at("label").is_string() ||
        j.at("label").get<std::string>().empty()) {
      throw ParseError(where + ": missing string field \"label\"");
    }
    if (!j.contains("text") || !j.at("text").is_string()) {
      throw ParseError(where + ": missing string field \"text\"");
    }
    r.label = j.at("label").get<std::string>();
    r.text = j.at("text").get<std::string>();
    responses.push_back(std::move(r));
  });
  return responses;
}

AnnotationSet read_annotation_file(const std::string& path, const LabelSpace& space) {
  std::vector<AnnotatedItem> items;
  for_each_jsonl(path, [&](const json& j, const std::string& where) {
    AnnotatedItem item;
    item.id = require_id(j, where);
    if (!j.contains("annotations") || !j.at("annotations").is_array()) {
      throw ParseError(where + ": missing array field \"annotations\"");
    }
    for (const json& rater : j.at("annotations")) {
      item.annotations.push_back(parse_bits(rater, space, where));
    }
    items.push_back(std::move(item));
  });
  return AnnotationSet(space, std::move(items));
}

// ---------------------------------------------------------------------------
// Prior serialization
// ---------------------------------------------------------------------------

json prior_to_json(const IsingPrior& prior) {
  const LabelSpace& space = prior.space();
  json j;
  j["labels"] = space.names();
  j["epsilon"] = prior.epsilon();
  j["theta_i"] = std::vector<double>(prior.bias().begin(), prior.bias().end());
  json pairs = json::array();
  for (int i = 0; i < space.size(); ++i) {
    for (int k = i + 1; k < space.size(); ++k) {
      pairs.push_back(
          {{"i", space.name(i)}, {"j", space.name(k)}, {"value", prior.coupling()(i, k)}});
    }
  }
  j["theta_ij"] = std::move(pairs);
  if (!prior.source().empty()) j["source"] = prior.source();
  return j;
}

IsingPrior prior_from_json(const json& j) {
  if (!j.contains("labels") || !j.at("labels").is_array()) {
    throw ParseError("prior: missing array field \"labels\"");
  }
  LabelSpace space(j.at("labels").get<std::vector<std::string>>());

  if (!j.contains("epsilon") || !j.at("epsilon").is_number()) {
    throw ParseError("prior: missing numeric field \"epsilon\"");
  }
  if (!j.contains("theta_i") || !j.at("theta_i").is_array() ||
      static_cast<int>(j.at("theta_i").size()) != space.size()) {
    throw ParseError("prior: \"theta_i\" must list one value per label");
  }
  Eigen::VectorXd bias(space.size());
  for (int i = 0; i < space.size(); ++i) {
    const json& v = j.at("theta_i").at(static_cast<std::size_t>(i));
    if (!v.is_number()) throw ParseError("prior: \"theta_i\" entries must be numbers");
    bias(i) = v.get<double>();
  }

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(space.size(), space.size());
  Eigen::MatrixXi filled = Eigen::MatrixXi::Zero(space.size(), space.size());
  if (j.contains("theta_ij")) {
    if (!j.at("theta_ij").is_array()) {
      throw ParseError("prior: \"theta_ij\" must be an array of {i, j, value}");
    }
    for (const json& pair : j.at("theta_ij")) {
      if (!pair.is_object() || !pair.contains("i") || !pair.contains("j") ||
          !pair.contains("value") || !pair.at("value").is_number()) {
        throw ParseError("prior: \"theta_ij\" entries must be {i, j, value}");
      }
      const std::string ni = pair.at("i").get<std::string>();
      const std::string nj = pair.at("j").get<std::string>();
      if (!space.contains(ni) || !space.contains(nj)) {
        throw ParseError("prior: unknown label in coupling (" + ni + ", " + nj + ")");
      }
      int a = space.index(ni);
      int b = space.index(nj);
      if (a == b) {
        throw ParseError("prior: coupling (" + ni + ", " + nj + ") pairs a label with itself");
      }
      if (a > b) std::swap(a, b);
      if (filled(a, b)) {
        throw ParseError("prior: duplicate coupling (" + ni + ", " + nj + ")");
      }
      filled(a, b) = 1;
      coupling(a, b) = pair.at("value").get<double>();
    }
  }

  std::string source;
  if (j.contains("source")) {
    if (!j.at("source").is_string()) throw ParseError("prior: \"source\" must be a string");
    source = j.at("source").get<std::string>();
  }
  return IsingPrior(std::move(space), std::move(bias), std::move(coupling),
                    j.at("epsilon").get<double>(), std::move(source));
}

void write_prior_file(const std::string& path, const IsingPrior& prior) {
  write_json_file(path, prior_to_json(prior));
}

IsingPrior read_prior_file(const std::string& path) {
  InputFile in(path);
  json j;
  try {
    in.stream() >> j;
  } catch (const json::exception& e) {
    throw ParseError(in.display() + ": " + e.what());
  }
  try {
    return prior_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(in.display() + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(in.display() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// MAP output and evaluation input
// ---------------------------------------------------------------------------

void write_map_file(const std::string& path, const LabelSpace& space,
                    const std::vector<MapResult>& results) {
  OutputFile out(path);
  for (const MapResult& r : results) {
    json j;
    j["id"] = r.id;
    j["map"] = bits_to_json(space, r.map_vector);
    j["baseline"] = bits_to_json(space, r.baseline);
    j["objective"] = r.objective;
    out.stream() << j.dump() << '\n';
  }
  out.finish();
}

std::vector<std::pair<std::string, LabelVector>> read_eval_vectors(const std::string& path,
                                                                   const LabelSpace& space) {
  std::vector<std::pair<std::string, LabelVector>> vectors;
  for_each_jsonl(path, [&](const json& j, const std::string& where) {
    std::string id = require_id(j, where);
    const char* key = j.contains("map") ? "map" : "labels";
    if (!j.contains(key)) {
      throw ParseError(where + ": need a \"labels\" or \"map\" object");
    }
    vectors.emplace_back(std::move(id), parse_bits(j.at(key), space, where));
  });
  return vectors;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

json report_to_json(const EvalReport& report) {
  json per_label = json::array();
  for (const LabelMetrics& m : report.per_label) {
    per_label.push_back({{"label", m.label},
                         {"accuracy", m.accuracy},
                         {"precision", m.precision},
                         {"recall", m.recall},
                         {"f1", m.f1},
                         {"tp", m.tp},
                         {"fp", m.fp},
                         {"fn", m.fn},
                         {"tn", m.tn}});
  }
  return json{{"n", report.n_instances},
              {"lexical_accuracy", report.lexical_accuracy},
              {"vector_accuracy", report.vector_accuracy},
              {"hamming_loss", report.hamming_loss},
              {"macro_f1", report.macro_f1},
              {"zero_division_policy", report.zero_division},
              {"per_label", std::move(per_label)}};
}

std::string render_report(const EvalReport& report) {
  std::string out;
  out += fmt("instances        %8ld\n", report.n_instances);
  out += fmt("lexical accuracy %8.2f%%\n", 100.0 * report.lexical_accuracy);
  out += fmt("vector accuracy  %8.2f%%\n", 100.0 * report.vector_accuracy);
  out += fmt("hamming loss     %8.2f%%\n", 100.0 * report.hamming_loss);
  out += fmt("macro f1         %8.3f\n", report.macro_f1);
  out += "\nlabel            acc%   prec    rec     f1     tp     fp     fn     tn\n";
  for (const LabelMetrics& m : report.per_label) {
    out += fmt("%-14s %6.2f  %5.3f  %5.3f  %5.3f  %5ld  %5ld  %5ld  %5ld\n", m.label.c_str(),
               100.0 * m.accuracy, m.precision, m.recall, m.f1, m.tp, m.fp, m.fn, m.tn);
  }
  return out;
}

json stats_to_json(const LabelSpace& space, const StatsReport& stats,
                   const CooccurrenceCounts& cooc) {
  json counts = json::object();
  for (int i = 0; i < space.size(); ++i) counts[space.name(i)] = stats.label_counts(i);
  json matrix = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(cooc.joint(i, k));
    matrix.push_back(std::move(row));
  }
  return json{{"n", stats.n},
              {"labels", space.names()},
              {"label_counts", std::move(counts)},
              {"single_label_count", stats.single_label_count},
              {"multi_label_fraction", stats.multi_label_fraction},
              {"mean_label_cardinality", stats.mean_label_cardinality},
              {"cooccurrence", std::move(matrix)}};
}

std::string render_stats(const LabelSpace& space, const StatsReport& stats) {
  std::string out;
  out += fmt("items            %8ld\n", stats.n);
  out += fmt("multi-label      %8.2f%%\n", 100.0 * stats.multi_label_fraction);
  out += fmt("mean cardinality %8.2f\n", stats.mean_label_cardinality);
  out += fmt("single-label     %8ld\n", stats.single_label_count);
  out += "\nlabel             count\n";
  for (int i = 0; i < space.size(); ++i) {
    out += fmt("%-14s %8d\n", space.name(i).c_str(), stats.label_counts(i));
  }
  return out;
}

json sweep_to_json(const SweepReport& sweep) {
  json reports = json::array();
  for (const EvalReport& r : sweep.reports) reports.push_back(report_to_json(r));
  return json{{"alphas", sweep.alphas},
              {"reports", std::move(reports)},
              {"best",
               {{"lexical_accuracy", sweep.best_lexical_alpha},
                {"vector_accuracy", sweep.best_vector_alpha},
                {"hamming_loss", sweep.best_hamming_alpha},
                {"macro_f1", sweep.best_macro_f1_alpha}}}};
}

std::string render_sweep(const SweepReport& sweep) {
  std::string out = "alpha   lexical%  vector%  hamming%  macro-f1\n";
  for (std::size_t k = 0; k < sweep.alphas.size(); ++k) {
    const EvalReport& r = sweep.reports[k];
    out += fmt("%5.2f   %8.2f  %7.2f  %8.2f  %8.3f\n", sweep.alphas[k],
               100.0 * r.lexical_accuracy, 100.0 * r.vector_accuracy, 100.0 * r.hamming_loss,
               r.macro_f1);
  }
  out += fmt("\nbest lexical accuracy at alpha %g\n", sweep.best_lexical_alpha);
  out += fmt("best vector accuracy  at alpha %g\n", sweep.best_vector_alpha);
  out += fmt("best hamming loss     at alpha %g\n", sweep.best_hamming_alpha);
  out += fmt("best macro f1         at alpha %g\n", sweep.best_macro_f1_alpha);
  return out;
}

json agreement_to_json(const LabelSpace& space, const AgreementReport& report) {
  json cohen = json::array();
  for (int a = 0; a < report.cohen.rows(); ++a) {
    json row = json::array();
    for (int b = 0; b < report.cohen.cols(); ++b) row.push_back(report.cohen(a, b));
    cohen.push_back(std::move(row));
  }
  json per_label = json::object();
  for (int i = 0; i < space.size(); ++i) {
    per_label[space.name(i)] = report.per_label_fleiss[static_cast<std::size_t>(i)];
  }
  return json{{"n_items", report.n_items},
              {"annotators", report.annotators},
              {"fleiss_kappa", report.fleiss},
              {"cohen_kappa", std::move(cohen)},
              {"per_label_fleiss", std::move(per_label)}};
}

std::string render_agreement(const LabelSpace& space, const AgreementReport& report) {
  std::string out;
  out += fmt("items            %8ld\n", report.n_items);
  out += fmt("annotators       %8d\n", report.annotators);
  out += fmt("fleiss kappa     %8.3f\n", report.fleiss);
  out += "\npairwise cohen kappa\n";
  for (int a = 0; a < report.cohen.rows(); ++a) {
    out += fmt("rater %-2d", a + 1);
    for (int b = 0; b < report.cohen.cols(); ++b) out += fmt("  %6.3f", report.cohen(a, b));
    out += '\n';
  }
  out += "\nlabel            fleiss\n";
  for (int i = 0; i < space.size(); ++i) {
    out += fmt("%-14s %8.3f\n", space.name(i).c_str(),
               report.per_label_fleiss[static_cast<std::size_t>(i)]);
  }
  return out;
}

void write_json_file(const std::string& path, const json& j) {
  OutputFile out(path);
  out.stream() << j.dump(2) << '\n';
  out.finish();
}

}  // namespace entmap
