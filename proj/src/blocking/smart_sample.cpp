#include <algorithm>

#include "lfm/blocking/blocking.hpp"
#include "lfm/core/error.hpp"

namespace lfm::blocking {

std::vector<SmartSampleEntry> smart_sample(const CandidateSet& candidates,
                                           std::span<const double> gamma, std::size_t n) {
  if (gamma.empty() && !candidates.empty()) {
    throw Error(Errc::model_not_fit, "no posterior yet: run the labeling model first");
  }
  if (gamma.size() != candidates.size()) {
    throw Error(Errc::invalid_argument, "posterior does not cover the candidate set");
  }
  if (n == 0) throw Error(Errc::invalid_argument, "sample size must be at least 1");
  std::vector<SmartSampleEntry> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (gamma[i] < kMatchThreshold) out.push_back({i, candidates[i].similarity_hint});
  }
  // Candidate order is (left_id, right_id), so index order breaks ties.
  std::sort(out.begin(), out.end(), [](const SmartSampleEntry& a, const SmartSampleEntry& b) {
    if (a.likelihood != b.likelihood) return a.likelihood > b.likelihood;
    return a.candidate < b.candidate;
  });
  if (out.size() > n) out.resize(n);
  return out;
}

std::optional<double> blocking_recall(const CandidateSet& candidates,
                                      const std::map<PairKey, bool>& truth) {
  std::size_t matches = 0, found = 0;
  for (const auto& [key, is_match] : truth) {
    if (!is_match) continue;
    ++matches;
    found += candidates.contains(key);
  }
  if (matches == 0) return std::nullopt;
  return static_cast<double>(found) / static_cast<double>(matches);
}

}  // namespace lfm::blocking
