#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lfm/text/pipeline_config.hpp"

namespace lfm::text {

std::string preprocess(std::string_view input, const std::vector<PreprocessStep>& steps);

// Token multiset in order of appearance. qgram pads the whole string with
// q-1 '#' on both sides; word_qgram pads and slides over each whitespace
// token separately.
std::vector<std::string> tokenize(std::string_view input, const Tokenizer& tokenizer);

inline constexpr char kQgramPad = '#';

// Document frequencies over a corpus of token multisets.
struct CorpusStats {
  std::size_t n_documents = 0;
  std::unordered_map<std::string, std::size_t> df;

  static CorpusStats build(const std::vector<std::vector<std::string>>& documents);
  double idf(const std::string& token) const;  // ln((N + 1) / (df + 1)), df = 0 if unseen
};

// Distinct tokens sorted ascending, each with a nonnegative weight.
class WeightedTokenSet {
 public:
  using Entry = std::pair<std::string, double>;

  WeightedTokenSet() = default;
  explicit WeightedTokenSet(std::vector<Entry> entries);  // sorts; merges duplicates by summing

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double weight(const std::string& token) const;  // 0 when absent

  bool operator==(const WeightedTokenSet&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Throws Error{invalid_argument} for tf-idf without corpus stats.
WeightedTokenSet weigh(const std::vector<std::string>& tokens, Weighting weighting,
                       const CorpusStats* stats);

using DistanceOperand = std::variant<WeightedTokenSet, std::string>;

// Distance in [0, 1], 0 for identical operands. Both empty -> 0, exactly one
// empty -> 1. Throws Error{invalid_argument} when an operand's kind does not
// fit the distance (text for edit distance, token sets otherwise).
double distance(const DistanceOperand& a, const DistanceOperand& b, DistanceKind kind);
double distance(const WeightedTokenSet& a, const WeightedTokenSet& b, DistanceKind kind);
double distance(std::string_view a, std::string_view b, DistanceKind kind);
inline double distance(const char* a, const char* b, DistanceKind kind) {
  return distance(std::string_view(a), std::string_view(b), kind);
}

std::size_t levenshtein(std::string_view a, std::string_view b);

// Intermediate values of one similarity computation, for dry runs.
struct PipelineTrace {
  std::string left_preprocessed;
  std::string right_preprocessed;
  std::vector<std::string> left_tokens;
  std::vector<std::string> right_tokens;
  WeightedTokenSet left_weights;
  WeightedTokenSet right_weights;
  double distance = 0.0;
  double similarity = 1.0;
};

// similarity = 1 - distance
double similarity(const PipelineConfig& config, std::string_view left, std::string_view right,
                  const CorpusStats* stats);
PipelineTrace trace_similarity(const PipelineConfig& config, std::string_view left,
                               std::string_view right, const CorpusStats* stats);

}  // namespace lfm::text
