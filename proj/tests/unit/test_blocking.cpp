#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "jaccard_pairs.hpp"
#include "lfm/blocking/blocking.hpp"
#include "lfm/core/error.hpp"

using namespace lfm;
using namespace lfm::blocking;

namespace {

TablePair tables_from(const std::vector<std::string>& left, const std::vector<std::string>& right) {
  std::ostringstream l, r;
  l << "id,name\n";
  r << "id,name\n";
  for (std::size_t i = 0; i < left.size(); ++i) l << "l" << i << ",\"" << left[i] << "\"\n";
  for (std::size_t i = 0; i < right.size(); ++i) r << "r" << i << ",\"" << right[i] << "\"\n";
  std::istringstream li(l.str()), ri(r.str());
  return ingest_table_pair(li, ri, "id");
}

std::vector<std::string> random_names(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::string> words = {"sony", "tv", "lcd", "40", "46", "black", "hdmi",
                                                 "camera", "zoom", "canon", "mouse", "usb", "red"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), len(1, 5);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += words[pick(rng)] + " ";
    out.push_back(s);
  }
  return out;
}

double equal_fraction(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t eq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) eq += a[i] == b[i];
  return static_cast<double>(eq) / static_cast<double>(a.size());
}

}  // namespace

TEST(MinHash, DeterministicAndEmptyConvention) {
  EXPECT_EQ(minhash({"a", "b"}, 16, 3), minhash({"b", "a"}, 16, 3));
  EXPECT_NE(minhash({"a", "b"}, 16, 3), minhash({"a", "b"}, 16, 4));
  EXPECT_EQ(minhash({}, 8, 1), std::vector<std::uint64_t>(8, ~std::uint64_t{0}));
}

TEST(MinHash, DisjointSetsRarelyCollide) {
  std::mt19937_64 rng(1);
  const auto [a, b] = synthetic::jaccard_pair(rng, 0.0, 60);
  EXPECT_LE(equal_fraction(minhash(a, 512, 9), minhash(b, 512, 9)), 0.01);
}

TEST(MinHash, CollisionRateEstimatesJaccard) {
  std::mt19937_64 rng(2);
  for (double s : {0.2, 0.5, 0.8}) {
    const auto [a, b] = synthetic::jaccard_pair(rng, s, 50);
    EXPECT_NEAR(equal_fraction(minhash(a, 512, 11), minhash(b, 512, 11)), s, 0.05) << s;
  }
}

TEST(Lsh, IdenticalTablesYieldEveryDiagonalPair) {
  std::mt19937_64 rng(3);
  auto names = random_names(rng, 40);
  for (std::size_t i = 0; i < names.size(); ++i) names[i] += "uniq" + std::to_string(i);
  const auto t = tables_from(names, names);
  const auto c = block(build_minhash_signatures(t, 32, 5), 8, 4);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto at = c.find({"l" + std::to_string(i), "r" + std::to_string(i)});
    ASSERT_TRUE(at.has_value()) << i;
    EXPECT_DOUBLE_EQ(c[*at].similarity_hint, 1.0);
  }
  c.check_integrity(t);
}

TEST(Lsh, SingleRowBandsSupersetWiderBands) {
  std::mt19937_64 rng(4);
  const auto t = tables_from(random_names(rng, 60), random_names(rng, 60));
  const auto sig = build_minhash_signatures(t, 24, 6);
  const auto wide = block(sig, 24, 1);
  for (std::size_t r : {2, 3, 4, 6, 8, 12, 24}) {
    const auto narrow = block(sig, 24 / r, r);
    for (const auto& p : narrow.pairs()) EXPECT_TRUE(wide.contains(p.key())) << r;
    EXPECT_LE(narrow.size(), wide.size());
  }
}

TEST(Lsh, BadBandingAndDeterminism) {
  std::mt19937_64 rng(5);
  const auto t = tables_from(random_names(rng, 10), random_names(rng, 10));
  const auto sig = build_minhash_signatures(t, 16, 1);
  EXPECT_THROW(build_index(sig, 5, 3), Error);
  EXPECT_EQ(block(sig, 8, 2), block(build_minhash_signatures(t, 16, 1), 8, 2));
}

TEST(Lsh, BlockKeyNamesFirstCollidingBand) {
  const auto t = tables_from({"same words here"}, {"same words here"});
  const auto c = block(build_minhash_signatures(t, 8, 2), 4, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].block_key.rfind("b0:", 0), 0u);
}

TEST(Embeddings, HyperplaneSignaturesAndErrors) {
  const auto t = tables_from({"x", "y"}, {"x2", "z"});
  std::istringstream csv("id,v1,v2\nl0,1,0\nl1,0,1\nright:r0,0.9,0.1\nr1,-1,0\nr0,5,5\n");
  const auto table = read_embeddings(csv);
  const auto sig = build_embedding_signatures(t, table, 64, 3);
  EXPECT_EQ(sig.source, SignatureSource::imported_embedding);
  // right:r0 wins over the bare r0 row for the right side.
  EXPECT_NEAR(signature_similarity(sig, 0, 0), 0.9 / std::sqrt(0.82), 1e-12);
  EXPECT_EQ(signature_similarity(sig, 0, 1), 0.0);  // negative cosine clamps to 0
  const auto c = block(sig, 16, 4);
  EXPECT_TRUE(c.contains({"l0", "r0"}));

  std::istringstream missing("l0,1,0\nl1,0,1\nr0,1,1\n");
  try {
    build_embedding_signatures(t, read_embeddings(missing), 8, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_ids);
  }
  std::istringstream ragged("l0,1,0\nl1,0,1,2\nr0,1,1\nr1,1,1\n");
  try {
    build_embedding_signatures(t, read_embeddings(ragged), 8, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(SmartSample, FiltersMatchesAndSortsByHint) {
  CandidateSet c({{"a", "1", "", 0.9}, {"a", "2", "", 0.2}, {"b", "1", "", 0.95}});
  const std::vector<double> gamma = {0.1, 0.3, 0.8};
  const auto s = smart_sample(c, gamma, 10);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0].likelihood, 0.9);
  EXPECT_DOUBLE_EQ(s[1].likelihood, 0.2);
  const std::vector<double> all_match = {0.6, 0.7, 0.99};
  EXPECT_TRUE(smart_sample(c, all_match, 10).empty());
  EXPECT_THROW(smart_sample(c, {}, 3), Error);
}

TEST(SmartSample, MatchesFilterSortOracle) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<CandidatePair> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back({"l" + std::to_string(i), "r", "", std::round(u(rng) * 10) / 10});
  CandidateSet c(pairs);
  std::vector<double> gamma(c.size());
  for (auto& g : gamma) g = u(rng);
  const auto got = smart_sample(c, gamma, 25);
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (gamma[i] < 0.5) expected.push_back(i);
  std::stable_sort(expected.begin(), expected.end(), [&](std::size_t a, std::size_t b) {
    return c[a].similarity_hint > c[b].similarity_hint;
  });
  expected.resize(std::min<std::size_t>(25, expected.size()));
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k].candidate, expected[k]);
}

TEST(BlockingRecall, FractionOfTrueMatchesKept) {
  CandidateSet c({{"a", "1", "", 0}, {"b", "2", "", 0}});
  std::map<PairKey, bool> truth{{{"a", "1"}, true}, {{"c", "3"}, true}, {{"b", "2"}, false}};
  EXPECT_DOUBLE_EQ(*blocking_recall(c, truth), 0.5);
  EXPECT_FALSE(blocking_recall(c, {}).has_value());
}
