#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lfm/core/candidates.hpp"
#include "lfm/core/table.hpp"
#include "lfm/lf/engine.hpp"
#include "lfm/lf/spec.hpp"
#include "lfm/text/pipeline_config.hpp"

namespace lfm::autolf {

// Search space for generated LFs. The four pipeline dimensions form a
// Cartesian product; attribute sets and thresholds are searched on top.
struct Grid {
  std::vector<std::vector<text::PreprocessStep>> preprocess_sets;
  std::vector<text::Tokenizer> tokenizers;
  std::vector<text::Weighting> weightings;
  std::vector<text::DistanceKind> distances;
  // Empty means "each schema attribute on its own".
  std::vector<std::vector<std::string>> attribute_sets;
  std::vector<double> thresholds;  // ascending
  double novelty = 0.10;           // minimum share of new +1 pairs for a kept LF
};

// 2 preprocess sets x 3 tokenizers x 2 weightings x 4 set distances, plus
// edit distance once per preprocess set: 50 pipelines. Thresholds
// 0.50, 0.55, ..., 0.95.
Grid default_grid();
inline constexpr std::size_t kDefaultGridConfigs = 50;

// Throws Error{invalid_argument} if any pipeline dimension is empty.
std::vector<text::PipelineConfig> enumerate_configs(const Grid& grid);

struct PrecisionEstimate {
  double est_precision = 1.0;
  std::size_t est_match_count = 0;
};

// Multi-match penalty under the reference-table assumption. With M_t the
// candidates scoring >= t and d(x) the number of distinct reference-side
// tuples matched by non-reference tuple x:
//   est_precision = sum_x min(d(x), 1) / sum_x d(x)   (1 when M_t is empty)
PrecisionEstimate estimate_precision(const CandidateSet& candidates,
                                     std::span<const double> similarity, double threshold,
                                     Side reference = Side::left);

PrecisionEstimate estimate_precision(const text::PipelineConfig& config,
                                     const std::vector<std::string>& attrs, double threshold,
                                     const CandidateSet& candidates, const lf::CorpusIndex& corpus,
                                     Side reference = Side::left);

struct AutoLfCandidate {
  std::vector<std::string> attrs;
  text::PipelineConfig pipeline;
  double threshold = 0.0;
  double est_precision = 0.0;
  std::size_t est_match_count = 0;
  bool kept = false;
};

struct GenerationResult {
  std::vector<lf::LabelFunctionSpec> specs;  // auto_lf_0, auto_lf_1, ...
  std::vector<AutoLfCandidate> candidates;   // every config that met the bar, ranked
};

// For each (attributes, pipeline) pick the smallest grid threshold whose
// estimated precision reaches `target_precision` with a nonempty match set,
// rank by match count, then greedily keep up to `max_lfs` that add at least
// `grid.novelty` new +1 pairs over those already kept.
GenerationResult generate(const Grid& grid, double target_precision, std::size_t max_lfs,
                          const CandidateSet& candidates, const lf::CorpusIndex& corpus,
                          Side reference = Side::left);

}  // namespace lfm::autolf
