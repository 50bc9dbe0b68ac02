#include "lfm/autolf/auto_lf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>

#include "lfm/core/error.hpp"
#include "lfm/util/parallel.hpp"

namespace lfm::autolf {

using text::DistanceKind;
using text::PreprocessStep;
using text::TokenizerKind;

Grid default_grid() {
  Grid g;
  g.preprocess_sets = {
      {PreprocessStep::lowercase, PreprocessStep::strip_punctuation,
       PreprocessStep::collapse_whitespace},
      {PreprocessStep::lowercase, PreprocessStep::strip_punctuation,
       PreprocessStep::collapse_whitespace, PreprocessStep::stem},
  };
  g.tokenizers = {{TokenizerKind::whitespace, 3}, {TokenizerKind::qgram, 3},
                  {TokenizerKind::word_qgram, 3}};
  g.weightings = {text::Weighting::uniform, text::Weighting::tf_idf};
  g.distances = {DistanceKind::jaccard, DistanceKind::weighted_jaccard, DistanceKind::cosine,
                 DistanceKind::overlap_coefficient, DistanceKind::edit_distance_normalized};
  for (int i = 0; i < 10; ++i) g.thresholds.push_back(static_cast<double>(50 + 5 * i) / 100.0);
  return g;
}

std::vector<text::PipelineConfig> enumerate_configs(const Grid& grid) {
  if (grid.preprocess_sets.empty() || grid.tokenizers.empty() || grid.weightings.empty() ||
      grid.distances.empty()) {
    throw Error(Errc::invalid_argument, "auto-LF grid has an empty dimension");
  }
  std::vector<text::PipelineConfig> out;
  for (const auto& pre : grid.preprocess_sets) {
    for (auto dist : grid.distances) {
      if (!text::uses_tokens(dist)) {
        text::PipelineConfig c;
        c.preprocess = pre;
        c.distance = dist;
        out.push_back(std::move(c));
        continue;
      }
      for (const auto& tok : grid.tokenizers) {
        for (auto w : grid.weightings) {
          out.push_back(text::PipelineConfig{pre, tok, w, dist});
        }
      }
    }
  }
  return out;
}

PrecisionEstimate estimate_precision(const CandidateSet& candidates,
                                     std::span<const double> similarity, double threshold,
                                     Side reference) {
  if (similarity.size() != candidates.size()) {
    throw Error(Errc::invalid_argument, "similarity column does not match the candidate set");
  }
  // Candidates are unique pairs, so counting pairs per non-reference tuple
  // counts its distinct reference-side partners.
  std::map<std::string, std::size_t> degree;
  PrecisionEstimate est;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (similarity[i] < threshold) continue;
    const auto& p = candidates[i];
    ++degree[reference == Side::left ? p.right_id : p.left_id];
    ++est.est_match_count;
  }
  if (est.est_match_count == 0) return est;
  est.est_precision =
      static_cast<double>(degree.size()) / static_cast<double>(est.est_match_count);
  return est;
}

PrecisionEstimate estimate_precision(const text::PipelineConfig& config,
                                     const std::vector<std::string>& attrs, double threshold,
                                     const CandidateSet& candidates, const lf::CorpusIndex& corpus,
                                     Side reference) {
  const auto sims = lf::similarity_column(attrs, config, candidates, corpus);
  return estimate_precision(candidates, sims, threshold, reference);
}

GenerationResult generate(const Grid& grid, double target_precision, std::size_t max_lfs,
                          const CandidateSet& candidates, const lf::CorpusIndex& corpus,
                          Side reference) {
  if (!(target_precision > 0.0 && target_precision <= 1.0)) {
    throw Error(Errc::invalid_argument, "target precision must lie in (0, 1]");
  }
  if (max_lfs == 0) throw Error(Errc::invalid_argument, "max_lfs must be at least 1");

  const auto configs = enumerate_configs(grid);
  auto attribute_sets = grid.attribute_sets;
  if (attribute_sets.empty()) {
    for (const auto& a : corpus.tables().schema) attribute_sets.push_back({a});
  }
  std::vector<double> thresholds = grid.thresholds;
  std::sort(thresholds.begin(), thresholds.end());

  struct Job {
    const std::vector<std::string>* attrs;
    const text::PipelineConfig* config;
  };
  std::vector<Job> jobs;
  for (const auto& attrs : attribute_sets) {
    for (const auto& c : configs) jobs.push_back({&attrs, &c});
  }

  struct Outcome {
    std::optional<AutoLfCandidate> candidate;
    std::vector<std::size_t> matched;  // candidate indices voted +1
  };
  std::vector<Outcome> outcomes(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto sims = lf::similarity_column(*jobs[k].attrs, *jobs[k].config, candidates, corpus);
    for (double t : thresholds) {
      const auto est = estimate_precision(candidates, sims, t, reference);
      if (est.est_match_count == 0) break;  // counts only shrink as t grows
      if (est.est_precision < target_precision) continue;
      AutoLfCandidate c{*jobs[k].attrs, *jobs[k].config, t, est.est_precision,
                        est.est_match_count, false};
      outcomes[k].candidate = std::move(c);
      for (std::size_t i = 0; i < sims.size(); ++i) {
        if (sims[i] >= t) outcomes[k].matched.push_back(i);
      }
      break;
    }
  });

  std::vector<std::size_t> ranked;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].candidate) ranked.push_back(k);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return outcomes[a].candidate->est_match_count > outcomes[b].candidate->est_match_count;
  });

  GenerationResult result;
  std::unordered_set<std::size_t> covered;
  for (auto k : ranked) {
    auto& c = *outcomes[k].candidate;
    if (result.specs.size() < max_lfs) {
      const auto& matched = outcomes[k].matched;
      const auto fresh = static_cast<std::size_t>(std::count_if(
          matched.begin(), matched.end(), [&](std::size_t i) { return !covered.contains(i); }));
      if (static_cast<double>(fresh) >= grid.novelty * static_cast<double>(matched.size()) &&
          fresh > 0) {
        c.kept = true;
        covered.insert(matched.begin(), matched.end());
        lf::LabelFunctionSpec spec;
        spec.name = "auto_lf_" + std::to_string(result.specs.size());
        spec.origin = lf::Origin::auto_generated;
        spec.body = lf::SimilarityBody{c.attrs, c.pipeline, c.threshold, std::nullopt};
        result.specs.push_back(std::move(spec));
      }
    }
    result.candidates.push_back(c);
  }
  return result;
}

}  // namespace lfm::autolf
