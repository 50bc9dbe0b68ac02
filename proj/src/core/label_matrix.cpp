#include "lfm/core/label_matrix.hpp"

#include <algorithm>

#include "lfm/core/error.hpp"

namespace lfm {

Vote vote_from_int(int v) {
  if (v < -1 || v > 1) throw Error(Errc::invalid_argument, "vote out of range: " + std::to_string(v));
  return static_cast<Vote>(v);
}

const char* vote_name(Vote v) {
  switch (v) {
    case Vote::non_match: return "non-match";
    case Vote::abstain: return "abstain";
    case Vote::match: return "match";
  }
  return "?";
}

std::optional<std::size_t> LabelMatrix::column_of(const std::string& lf_id) const {
  auto it = std::find(lf_ids.begin(), lf_ids.end(), lf_id);
  if (it == lf_ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - lf_ids.begin());
}

std::string encode_column(const LabelMatrix& m, std::size_t col) {
  std::string out(m.n_pairs(), '0');
  for (Eigen::Index i = 0; i < m.votes.rows(); ++i) {
    auto v = m.votes(i, static_cast<Eigen::Index>(col));
    out[static_cast<std::size_t>(i)] = v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return out;
}

void decode_column(const std::string& text, LabelMatrix& m, std::size_t col) {
  if (text.size() != m.n_pairs()) {
    throw Error(Errc::parse_error, "vote column length " + std::to_string(text.size()) +
                                       " does not match " + std::to_string(m.n_pairs()) + " pairs");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::int8_t v;
    switch (text[i]) {
      case '+': v = 1; break;
      case '-': v = -1; break;
      case '0': v = 0; break;
      default: throw Error(Errc::parse_error, std::string("bad vote character '") + text[i] + "'");
    }
    m.votes(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) = v;
  }
}

std::vector<LFRawStats> lf_raw_stats(const LabelMatrix& m) {
  if (m.n_pairs() == 0) throw Error(Errc::invalid_argument, "label matrix has no pairs");
  std::vector<LFRawStats> out;
  out.reserve(m.n_lfs());
  const auto n = static_cast<double>(m.n_pairs());
  for (std::size_t j = 0; j < m.n_lfs(); ++j) {
    LFRawStats s;
    s.lf_id = m.lf_ids[j];
    auto col = m.votes.col(static_cast<Eigen::Index>(j));
    s.n_match = static_cast<std::size_t>((col.array() > 0).count());
    s.n_unmatch = static_cast<std::size_t>((col.array() < 0).count());
    s.n_abstain = m.n_pairs() - s.n_match - s.n_unmatch;
    s.coverage = 1.0 - static_cast<double>(s.n_abstain) / n;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lfm
