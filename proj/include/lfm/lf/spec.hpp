#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lfm/core/label_matrix.hpp"
#include "lfm/text/pipeline_config.hpp"

namespace lfm::lf {

enum class Origin { user, auto_generated };

// Votes +1 when similarity >= match_if_sim_ge, -1 when similarity <=
// unmatch_if_sim_le, abstains otherwise. An absent threshold never fires.
struct SimilarityBody {
  std::vector<std::string> attrs;  // concatenated with single spaces
  text::PipelineConfig pipeline;
  std::optional<double> match_if_sim_ge;
  std::optional<double> unmatch_if_sim_le;

  bool operator==(const SimilarityBody&) const = default;
};

struct Extraction {
  std::vector<std::string> attrs;
  std::string pattern;  // ECMAScript regex with exactly one capture group

  bool operator==(const Extraction&) const = default;
};

enum class Comparator { equal, not_equal, absolute_diff_gt };

// Extracts the first match of each side's pattern and compares the captured
// text. absolute_diff_gt parses both captures as numbers; a capture that is
// not a number counts as missing.
struct RuleBody {
  Extraction extract_left;
  Extraction extract_right;
  Comparator comparator = Comparator::equal;
  double delta = 0.0;  // absolute_diff_gt only
  Vote when_true = Vote::abstain;
  Vote when_false = Vote::abstain;
  Vote when_missing = Vote::abstain;

  bool operator==(const RuleBody&) const = default;
};

struct LabelFunctionSpec {
  std::string name;
  Origin origin = Origin::user;
  std::variant<SimilarityBody, RuleBody> body;

  bool is_similarity() const { return std::holds_alternative<SimilarityBody>(body); }
  bool operator==(const LabelFunctionSpec&) const = default;
};

const char* name(Origin o);
const char* name(Comparator c);

// Content hash of the canonical serialization.
std::string lf_version(const LabelFunctionSpec& spec);

}  // namespace lfm::lf
