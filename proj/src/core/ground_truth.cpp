#include "lfm/core/ground_truth.hpp"

#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"

namespace lfm {

void GroundTruthStore::set(const GroundTruthLabel& label) {
  auto& target = label.source == LabelSource::user_click ? user_ : fixture_;
  target[label.pair] = label.match;
}

bool GroundTruthStore::clear(const PairKey& pair, LabelSource source) {
  auto& target = source == LabelSource::user_click ? user_ : fixture_;
  return target.erase(pair) > 0;
}

std::optional<GroundTruthLabel> GroundTruthStore::user_label(const PairKey& pair) const {
  if (auto it = user_.find(pair); it != user_.end()) {
    return GroundTruthLabel{pair, it->second, LabelSource::user_click};
  }
  return std::nullopt;
}

std::optional<GroundTruthLabel> GroundTruthStore::effective(const PairKey& pair) const {
  if (auto u = user_label(pair)) return u;
  if (auto it = fixture_.find(pair); it != fixture_.end()) {
    return GroundTruthLabel{pair, it->second, LabelSource::fixture};
  }
  return std::nullopt;
}

void write_labels(std::ostream& out, const std::map<PairKey, bool>& labels) {
  csv::write_row(out, {"left_id", "right_id", "label"});
  for (const auto& [k, match] : labels) {
    csv::write_row(out, {k.first, k.second, match ? "match" : "non-match"});
  }
}

std::map<PairKey, bool> read_labels(std::istream& in) {
  std::map<PairKey, bool> out;
  auto records = csv::read(in);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i].fields;
    if (f.size() != 3 || (f[2] != "match" && f[2] != "non-match")) {
      throw Error(Errc::parse_error, "labels: line " + std::to_string(records[i].line) +
                                         ": expected left_id,right_id,match|non-match");
    }
    out[{f[0], f[1]}] = f[2] == "match";
  }
  return out;
}

std::map<PairKey, bool> read_match_list(std::istream& in) {
  std::map<PairKey, bool> out;
  auto records = csv::read(in);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i].fields;
    if (f.size() < 2) {
      throw Error(Errc::parse_error,
                  "matches: line " + std::to_string(records[i].line) + ": expected left_id,right_id");
    }
    out[{f[0], f[1]}] = true;
  }
  return out;
}

}  // namespace lfm
