#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lfm/core/candidates.hpp"
#include "lfm/core/label_matrix.hpp"
#include "lfm/core/table.hpp"
#include "lfm/lf/spec.hpp"
#include "lfm/text/text_kit.hpp"

namespace lfm::lf {

struct Diagnostic {
  std::string field;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Every violated invariant of `spec`. Attribute names are checked only when
// a schema is supplied. Empty result means the spec is valid.
std::vector<Diagnostic> validate(const LabelFunctionSpec& spec,
                                 const std::vector<std::string>* schema = nullptr);

// Document-frequency tables over both sides of a TablePair, one per
// (attributes, preprocessing, tokenizer) combination, built on first use.
// Safe for concurrent use.
class CorpusIndex {
 public:
  explicit CorpusIndex(const TablePair& tables) : tables_(&tables) {}

  std::shared_ptr<const text::CorpusStats> stats(const std::vector<std::size_t>& attrs,
                                                 const text::PipelineConfig& config) const;
  const TablePair& tables() const { return *tables_; }

 private:
  const TablePair* tables_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const text::CorpusStats>> cache_;
};

struct EvaluationTrace {
  Vote vote = Vote::abstain;
  std::string left_text;
  std::string right_text;
  std::optional<text::PipelineTrace> pipeline;  // similarity LFs
  std::optional<std::string> left_capture;      // rule LFs
  std::optional<std::string> right_capture;
  std::string reason;
};

// Pure function of (spec, pair text, corpus statistics). `spec` must be valid.
Vote evaluate(const LabelFunctionSpec& spec, const CandidatePair& pair, const CorpusIndex& corpus);
EvaluationTrace evaluate_traced(const LabelFunctionSpec& spec, const CandidatePair& pair,
                                const CorpusIndex& corpus);

// Pipeline similarity for every candidate, caching per-tuple work. Produces
// exactly the similarities evaluate() thresholds.
std::vector<double> similarity_column(const std::vector<std::string>& attrs,
                                      const text::PipelineConfig& pipeline,
                                      const CandidateSet& candidates, const CorpusIndex& corpus);

// One LF column over the whole candidate set, caching per-tuple work.
std::vector<std::int8_t> evaluate_column(const LabelFunctionSpec& spec,
                                         const CandidateSet& candidates,
                                         const CorpusIndex& corpus);

struct ApplyResult {
  LabelMatrix matrix;
  std::size_t evaluations = 0;        // pair evaluations performed
  std::size_t columns_recomputed = 0;
  std::size_t columns_reused = 0;
};

// Columns whose stored version matches the spec's current version are copied
// from `existing`; everything else is evaluated. Column order follows `specs`.
ApplyResult apply_all(const std::vector<LabelFunctionSpec>& specs, const CandidateSet& candidates,
                      const CorpusIndex& corpus, const LabelMatrix* existing);

}  // namespace lfm::lf
