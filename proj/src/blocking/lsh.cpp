#include <algorithm>
#include <unordered_set>

#include "lfm/blocking/blocking.hpp"
#include "lfm/core/error.hpp"
#include "lfm/util/hash.hpp"

namespace lfm::blocking {
namespace {

std::uint64_t band_hash(const std::vector<std::uint64_t>& values, std::size_t band,
                        std::size_t rows) {
  std::uint64_t h = mix64(band);
  for (std::size_t i = band * rows; i < (band + 1) * rows; ++i) h = mix64(h ^ values[i]);
  return h;
}

}  // namespace

LshIndex build_index(const SignatureSet& signatures, std::size_t bands, std::size_t rows) {
  if (bands == 0 || rows == 0 || bands * rows != signatures.k) {
    throw Error(Errc::invalid_argument, "banding needs k = b * r (k=" + std::to_string(signatures.k) +
                                            ", b=" + std::to_string(bands) +
                                            ", r=" + std::to_string(rows) + ")");
  }
  LshIndex index{bands, rows, std::vector<std::map<std::uint64_t, Bucket>>(bands)};
  for (std::size_t b = 0; b < bands; ++b) {
    auto& band = index.buckets[b];
    for (std::size_t i = 0; i < signatures.left.size(); ++i) {
      band[band_hash(signatures.left[i].values, b, rows)].left_rows.push_back(i);
    }
    for (std::size_t i = 0; i < signatures.right.size(); ++i) {
      band[band_hash(signatures.right[i].values, b, rows)].right_rows.push_back(i);
    }
  }
  return index;
}

CandidateSet block(const SignatureSet& signatures, std::size_t bands, std::size_t rows) {
  const LshIndex index = build_index(signatures, bands, rows);
  const std::size_t n_right = signatures.right.size();
  std::unordered_set<std::uint64_t> seen;
  std::vector<CandidatePair> pairs;
  for (std::size_t b = 0; b < bands; ++b) {
    for (const auto& [hash, bucket] : index.buckets[b]) {
      if (bucket.left_rows.empty() || bucket.right_rows.empty()) continue;
      const std::string key = "b" + std::to_string(b) + ":" + to_hex(hash);
      for (auto l : bucket.left_rows) {
        for (auto r : bucket.right_rows) {
          if (!seen.insert(static_cast<std::uint64_t>(l) * n_right + r).second) continue;
          pairs.push_back({signatures.left[l].tuple_id, signatures.right[r].tuple_id, key,
                           signature_similarity(signatures, l, r)});
        }
      }
    }
  }
  return CandidateSet(std::move(pairs));
}

}  // namespace lfm::blocking
