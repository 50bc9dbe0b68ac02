#include "lfm/core/error.hpp"
#include "lfm/text/pipeline_config.hpp"
#include "lfm/text/text_kit.hpp"

namespace lfm::text {

const char* name(PreprocessStep s) {
  switch (s) {
    case PreprocessStep::lowercase: return "lowercase";
    case PreprocessStep::strip_punctuation: return "strip-punctuation";
    case PreprocessStep::collapse_whitespace: return "collapse-whitespace";
    case PreprocessStep::stem: return "stem";
  }
  return "?";
}

const char* name(TokenizerKind k) {
  switch (k) {
    case TokenizerKind::whitespace: return "whitespace";
    case TokenizerKind::qgram: return "qgram";
    case TokenizerKind::word_qgram: return "word+qgram";
  }
  return "?";
}

const char* name(Weighting w) { return w == Weighting::uniform ? "uniform" : "tf-idf"; }

const char* name(DistanceKind d) {
  switch (d) {
    case DistanceKind::jaccard: return "jaccard";
    case DistanceKind::weighted_jaccard: return "weighted-jaccard";
    case DistanceKind::cosine: return "cosine";
    case DistanceKind::edit_distance_normalized: return "edit-distance-normalized";
    case DistanceKind::overlap_coefficient: return "overlap-coefficient";
  }
  return "?";
}

std::string describe(const Tokenizer& t) {
  if (t.kind == TokenizerKind::whitespace) return "whitespace";
  return std::string(name(t.kind)) + "(" + std::to_string(t.q) + ")";
}

std::string describe(const PipelineConfig& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.preprocess.size(); ++i) {
    if (i) out += ",";
    out += name(c.preprocess[i]);
  }
  out += "]";
  if (uses_tokens(c.distance)) {
    out += " " + describe(c.tokenizer) + " " + name(c.weighting);
  }
  out += " " + std::string(name(c.distance));
  return out;
}

PreprocessStep parse_preprocess_step(const std::string& s) {
  for (auto step : {PreprocessStep::lowercase, PreprocessStep::strip_punctuation,
                    PreprocessStep::collapse_whitespace, PreprocessStep::stem}) {
    if (s == name(step)) return step;
  }
  throw Error(Errc::invalid_argument, "unknown preprocess step '" + s + "'");
}

Tokenizer parse_tokenizer(const std::string& s) {
  if (s == "whitespace") return {TokenizerKind::whitespace, 3};
  for (auto kind : {TokenizerKind::qgram, TokenizerKind::word_qgram}) {
    std::string prefix = std::string(name(kind)) + "(";
    if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() + 1 && s.back() == ')') {
      std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
      if (digits.empty() || digits.size() > 3 ||
          digits.find_first_not_of("0123456789") != std::string::npos) {
        break;
      }
      return {kind, std::stoi(digits)};
    }
  }
  throw Error(Errc::invalid_argument, "unknown tokenizer '" + s + "'");
}

Weighting parse_weighting(const std::string& s) {
  if (s == "uniform") return Weighting::uniform;
  if (s == "tf-idf") return Weighting::tf_idf;
  throw Error(Errc::invalid_argument, "unknown weighting '" + s + "'");
}

DistanceKind parse_distance(const std::string& s) {
  for (auto d : {DistanceKind::jaccard, DistanceKind::weighted_jaccard, DistanceKind::cosine,
                 DistanceKind::edit_distance_normalized, DistanceKind::overlap_coefficient}) {
    if (s == name(d)) return d;
  }
  throw Error(Errc::invalid_argument, "unknown distance '" + s + "'");
}

PipelineTrace trace_similarity(const PipelineConfig& config, std::string_view left,
                               std::string_view right, const CorpusStats* stats) {
  PipelineTrace t;
  t.left_preprocessed = preprocess(left, config.preprocess);
  t.right_preprocessed = preprocess(right, config.preprocess);
  if (!uses_tokens(config.distance)) {
    t.distance = distance(std::string_view(t.left_preprocessed),
                          std::string_view(t.right_preprocessed), config.distance);
  } else {
    t.left_tokens = tokenize(t.left_preprocessed, config.tokenizer);
    t.right_tokens = tokenize(t.right_preprocessed, config.tokenizer);
    t.left_weights = weigh(t.left_tokens, config.weighting, stats);
    t.right_weights = weigh(t.right_tokens, config.weighting, stats);
    t.distance = distance(t.left_weights, t.right_weights, config.distance);
  }
  t.similarity = 1.0 - t.distance;
  return t;
}

double similarity(const PipelineConfig& config, std::string_view left, std::string_view right,
                  const CorpusStats* stats) {
  return trace_similarity(config, left, right, stats).similarity;
}

}  // namespace lfm::text
