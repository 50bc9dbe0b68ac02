#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfm/core/candidates.hpp"

namespace lfm {

enum class LabelSource { user_click, fixture };

struct GroundTruthLabel {
  PairKey pair;
  bool match = false;
  LabelSource source = LabelSource::user_click;

  bool operator==(const GroundTruthLabel&) const = default;
};

// At most one effective label per pair; a user label shadows a fixture label.
class GroundTruthStore {
 public:
  void set(const GroundTruthLabel& label);
  bool clear(const PairKey& pair, LabelSource source);

  std::optional<GroundTruthLabel> effective(const PairKey& pair) const;
  std::optional<GroundTruthLabel> user_label(const PairKey& pair) const;

  const std::map<PairKey, bool>& user_labels() const { return user_; }
  const std::map<PairKey, bool>& fixture_labels() const { return fixture_; }
  bool has_fixture() const { return !fixture_.empty(); }

  bool operator==(const GroundTruthStore&) const = default;

 private:
  std::map<PairKey, bool> user_;
  std::map<PairKey, bool> fixture_;
};

// Label files: left_id,right_id,label with label in {match, non-match}.
void write_labels(std::ostream& out, const std::map<PairKey, bool>& labels);
std::map<PairKey, bool> read_labels(std::istream& in);

// Fixture ground truth listing only true matches: left_id,right_id.
std::map<PairKey, bool> read_match_list(std::istream& in);

}  // namespace lfm
