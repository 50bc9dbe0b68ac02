#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfm/core/table.hpp"

namespace lfm {

using PairKey = std::pair<std::string, std::string>;  // (left id, right id)

struct CandidatePair {
  std::string left_id;
  std::string right_id;
  std::string block_key;        // LSH bucket that first produced the pair
  double similarity_hint = 0.0;  // blocking-time score in [0, 1]

  PairKey key() const { return {left_id, right_id}; }
  bool operator==(const CandidatePair&) const = default;
};

// Left x right candidate pairs, unique and ordered by (left_id, right_id).
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<CandidatePair> pairs);  // sorts; throws on duplicates

  const std::vector<CandidatePair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const CandidatePair& operator[](std::size_t i) const { return pairs_[i]; }

  std::optional<std::size_t> find(const PairKey& key) const;
  bool contains(const PairKey& key) const { return find(key).has_value(); }

  // Throws Error{dangling_id} if any pair references an id missing from its side.
  void check_integrity(const TablePair& tables) const;

  bool operator==(const CandidateSet& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<CandidatePair> pairs_;
  std::map<PairKey, std::size_t> index_;
};

struct PairView {
  std::string left_id;
  std::string right_id;
  std::vector<std::string> schema;
  std::vector<std::string> left_values;
  std::vector<std::string> right_values;
};

PairView pair_view(const CandidatePair& pair, const TablePair& tables);

void write_candidates(std::ostream& out, const CandidateSet& set);
CandidateSet read_candidates(std::istream& in);

}  // namespace lfm
