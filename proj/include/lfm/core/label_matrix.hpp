#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace lfm {

enum class Vote : std::int8_t { non_match = -1, abstain = 0, match = 1 };

inline std::int8_t to_int(Vote v) { return static_cast<std::int8_t>(v); }
Vote vote_from_int(int v);  // throws Error{invalid_argument} outside {-1, 0, 1}
const char* vote_name(Vote v);

// Column-major so that a whole LF column can be reused or replaced at once.
using VoteMatrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

// Rows follow CandidateSet order; one column per LF.
struct LabelMatrix {
  std::vector<std::string> lf_ids;
  std::vector<std::string> lf_versions;  // content hash of the spec that produced each column
  VoteMatrix votes;

  std::size_t n_pairs() const { return static_cast<std::size_t>(votes.rows()); }
  std::size_t n_lfs() const { return lf_ids.size(); }
  std::optional<std::size_t> column_of(const std::string& lf_id) const;

  bool operator==(const LabelMatrix& other) const {
    return lf_ids == other.lf_ids && lf_versions == other.lf_versions &&
           votes.rows() == other.votes.rows() && votes.cols() == other.votes.cols() &&
           votes == other.votes;
  }
};

// Compact text form: one character per vote ('+', '-', '0').
std::string encode_column(const LabelMatrix& m, std::size_t col);
void decode_column(const std::string& text, LabelMatrix& m, std::size_t col);

struct LFRawStats {
  std::string lf_id;
  std::size_t n_match = 0;
  std::size_t n_unmatch = 0;
  std::size_t n_abstain = 0;
  double coverage = 0.0;
};

// Throws Error{invalid_argument} on a matrix without rows.
std::vector<LFRawStats> lf_raw_stats(const LabelMatrix& m);

}  // namespace lfm
