#pragma once

#include <string>
#include <vector>

namespace lfm::text {

enum class PreprocessStep { lowercase, strip_punctuation, collapse_whitespace, stem };

enum class TokenizerKind { whitespace, qgram, word_qgram };

struct Tokenizer {
  TokenizerKind kind = TokenizerKind::whitespace;
  int q = 3;  // used by qgram and word_qgram only

  bool operator==(const Tokenizer& o) const {
    return kind == o.kind && (kind == TokenizerKind::whitespace || q == o.q);
  }
};

enum class Weighting { uniform, tf_idf };

enum class DistanceKind {
  jaccard,
  weighted_jaccard,
  cosine,
  edit_distance_normalized,
  overlap_coefficient,
};

// edit_distance_normalized reads only `preprocess`; the other distances
// run the full preprocess -> tokenize -> weigh chain.
struct PipelineConfig {
  std::vector<PreprocessStep> preprocess;
  Tokenizer tokenizer;
  Weighting weighting = Weighting::uniform;
  DistanceKind distance = DistanceKind::jaccard;

  bool operator==(const PipelineConfig&) const = default;
};

const char* name(PreprocessStep s);
const char* name(TokenizerKind k);
const char* name(Weighting w);
const char* name(DistanceKind d);
std::string describe(const Tokenizer& t);  // "whitespace", "qgram(3)", "word+qgram(3)"
std::string describe(const PipelineConfig& c);

// Inverse of name()/describe(); throw Error{invalid_argument} on unknown text.
PreprocessStep parse_preprocess_step(const std::string& s);
Tokenizer parse_tokenizer(const std::string& s);
Weighting parse_weighting(const std::string& s);
DistanceKind parse_distance(const std::string& s);

inline bool uses_tokens(DistanceKind d) { return d != DistanceKind::edit_distance_normalized; }

}  // namespace lfm::text
