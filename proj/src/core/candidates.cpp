#include "lfm/core/candidates.hpp"

#include <algorithm>
#include <cstdio>

#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"

namespace lfm {

CandidateSet::CandidateSet(std::vector<CandidatePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const CandidatePair& a, const CandidatePair& b) { return a.key() < b.key(); });
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!index_.emplace(pairs_[i].key(), i).second) {
      throw Error(Errc::invalid_argument, "duplicate candidate pair (" + pairs_[i].left_id +
                                              ", " + pairs_[i].right_id + ")");
    }
  }
}

std::optional<std::size_t> CandidateSet::find(const PairKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void CandidateSet::check_integrity(const TablePair& tables) const {
  for (const auto& p : pairs_) {
    if (!tables.left.find(p.left_id) || !tables.right.find(p.right_id)) {
      throw Error(Errc::dangling_id,
                  "candidate (" + p.left_id + ", " + p.right_id + ") references a missing tuple");
    }
  }
}

PairView pair_view(const CandidatePair& pair, const TablePair& tables) {
  const Tuple& l = tables.left.at(pair.left_id);
  const Tuple& r = tables.right.at(pair.right_id);
  return PairView{pair.left_id, pair.right_id, tables.schema, l.values, r.values};
}

namespace {
std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

void write_candidates(std::ostream& out, const CandidateSet& set) {
  csv::write_row(out, {"left_id", "right_id", "block_key", "similarity_hint"});
  for (const auto& p : set.pairs()) {
    csv::write_row(out, {p.left_id, p.right_id, p.block_key, format_double(p.similarity_hint)});
  }
}

CandidateSet read_candidates(std::istream& in) {
  auto records = csv::read(in);
  std::vector<CandidatePair> pairs;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i].fields;
    if (f.size() != 4) {
      throw Error(Errc::parse_error,
                  "candidates: line " + std::to_string(records[i].line) + ": expected 4 fields");
    }
    pairs.push_back({f[0], f[1], f[2], std::stod(f[3])});
  }
  return CandidateSet(std::move(pairs));
}

}  // namespace lfm
