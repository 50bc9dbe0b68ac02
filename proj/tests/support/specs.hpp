#pragma once

// The two running-example LFs: token overlap on names and a screen-size rule.

#include "lfm/lf/spec.hpp"

namespace specs {

inline lfm::lf::LabelFunctionSpec name_overlap(std::optional<double> t_hi, std::optional<double> t_lo,
                                               std::string name = "name_overlap") {
  lfm::lf::SimilarityBody body;
  body.attrs = {"name"};
  body.pipeline.preprocess = {lfm::text::PreprocessStep::lowercase};
  body.pipeline.tokenizer = {lfm::text::TokenizerKind::whitespace, 3};
  body.pipeline.weighting = lfm::text::Weighting::uniform;
  body.pipeline.distance = lfm::text::DistanceKind::jaccard;
  body.match_if_sim_ge = t_hi;
  body.unmatch_if_sim_le = t_lo;
  return {std::move(name), lfm::lf::Origin::user, body};
}

inline lfm::lf::LabelFunctionSpec size_unmatch(std::string name = "size_unmatch") {
  lfm::lf::RuleBody body;
  body.extract_left = {{"name", "description"}, R"((\d+)')"};
  body.extract_right = body.extract_left;
  body.comparator = lfm::lf::Comparator::not_equal;
  body.when_true = lfm::Vote::non_match;
  body.when_false = lfm::Vote::abstain;
  body.when_missing = lfm::Vote::abstain;
  return {std::move(name), lfm::lf::Origin::user, body};
}

}  // namespace specs
