#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "lfm/core/error.hpp"
#include "lfm/text/porter_stemmer.hpp"
#include "lfm/text/text_kit.hpp"
#include "oracles.hpp"

using namespace lfm;
using namespace lfm::text;

namespace {

WeightedTokenSet uniform(std::vector<std::string> tokens) {
  return weigh(tokens, Weighting::uniform, nullptr);
}

std::string random_text(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string alphabet = "abcde fgh,.'-XYZ019  ";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

const std::vector<DistanceKind> kAllDistances = {
    DistanceKind::jaccard, DistanceKind::weighted_jaccard, DistanceKind::cosine,
    DistanceKind::edit_distance_normalized, DistanceKind::overlap_coefficient};

}  // namespace

// Every word/stem pair was produced by the NLTK Porter stemmer in its
// ORIGINAL_ALGORITHM mode.
TEST(PorterStemmer, MatchesReferenceVocabulary) {
  std::ifstream in(std::string(LFM_TEST_DATA_DIR) + "/porter_vocab.tsv");
  ASSERT_TRUE(in) << "missing porter_vocab.tsv";
  std::string line;
  std::size_t checked = 0, wrong = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const std::string word = line.substr(0, tab), stem = line.substr(tab + 1);
    if (porter_stem(word) != stem) {
      if (++wrong <= 10) ADD_FAILURE() << word << ": got " << porter_stem(word) << ", want " << stem;
    }
    ++checked;
  }
  EXPECT_GT(checked, 10000u);
  EXPECT_EQ(wrong, 0u);
}

TEST(Preprocess, Lowercase) { EXPECT_EQ(preprocess("Sony SBV40S", {PreprocessStep::lowercase}), "sony sbv40s"); }

TEST(Preprocess, EmptyStaysEmpty) {
  EXPECT_EQ(preprocess("", {PreprocessStep::lowercase, PreprocessStep::strip_punctuation,
                            PreprocessStep::collapse_whitespace, PreprocessStep::stem}),
            "");
}

TEST(Preprocess, FullChainAgainstStemmerOracle) {
  // "running" -> "run" and "fast" -> "fast" under the reference stemmer.
  EXPECT_EQ(preprocess("running,  FAST", {PreprocessStep::lowercase, PreprocessStep::strip_punctuation,
                                          PreprocessStep::collapse_whitespace, PreprocessStep::stem}),
            "run fast");
}

TEST(Preprocess, CollapseTrimsEnds) {
  EXPECT_EQ(preprocess("  a \t b\n", {PreprocessStep::collapse_whitespace}), "a b");
}

TEST(Tokenize, Whitespace) {
  EXPECT_EQ(tokenize("a b  c", {TokenizerKind::whitespace, 3}), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Tokenize, PaddedQgrams) {
  EXPECT_EQ(tokenize("abc", {TokenizerKind::qgram, 3}),
            (std::vector<std::string>{"##a", "#ab", "abc", "bc#", "c##"}));
}

TEST(Tokenize, QgramsMatchSlidingWindowOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string s = random_text(rng, 12);
    const int q = 2 + trial % 3;
    if (s.empty()) continue;
    const std::string padded = std::string(q - 1, '#') + s + std::string(q - 1, '#');
    std::vector<std::string> expected;
    for (std::size_t i = 0; i + q <= padded.size(); ++i) expected.push_back(padded.substr(i, q));
    EXPECT_EQ(tokenize(s, {TokenizerKind::qgram, q}), expected) << s;
  }
}

TEST(Tokenize, WordQgramsPadEachWord) {
  EXPECT_EQ(tokenize("ab c", {TokenizerKind::word_qgram, 2}),
            (std::vector<std::string>{"#a", "ab", "b#", "#c", "c#"}));
}

TEST(Tokenize, EmptyAndBadQ) {
  EXPECT_TRUE(tokenize("", {TokenizerKind::whitespace, 3}).empty());
  EXPECT_TRUE(tokenize("", {TokenizerKind::qgram, 3}).empty());
  EXPECT_THROW(tokenize("abc", {TokenizerKind::qgram, 1}), Error);
}

TEST(Weighting, UniformIsOne) {
  const auto w = uniform({"a", "b", "a"});
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.weight("a"), 1.0);
  EXPECT_EQ(w.weight("b"), 1.0);
}

TEST(Weighting, TfIdfByHand) {
  const auto stats = CorpusStats::build({{"x", "y"}, {"y"}, {"y", "z"}});
  // "x" is in 1 of 3 documents with tf 2: 2 * ln(4 / 2).
  const auto w = weigh({"x", "x", "y"}, Weighting::tf_idf, &stats);
  EXPECT_NEAR(w.weight("x"), 2 * std::log(2.0), 1e-15);
  // "y" is everywhere: ln(4 / 4) = 0.
  EXPECT_EQ(w.weight("y"), 0.0);
  EXPECT_GT(stats.idf("x"), stats.idf("z") - 1e-15);
  EXPECT_GT(stats.idf("z"), stats.idf("y"));
  EXPECT_THROW(weigh({"x"}, Weighting::tf_idf, nullptr), Error);
}

TEST(Distance, JaccardScreenSizes) {
  EXPECT_DOUBLE_EQ(distance(uniform({"sony", "bravia", "40\""}), uniform({"sony", "bravia", "46\""}),
                            DistanceKind::jaccard),
                   0.5);
}

TEST(Distance, KittenSitting) {
  EXPECT_EQ(oracle::edit_distance("kitten", "sitting"), 3u);
  EXPECT_DOUBLE_EQ(distance("kitten", "sitting", DistanceKind::edit_distance_normalized), 3.0 / 7.0);
}

TEST(Distance, EmptyConventions) {
  for (auto kind : {DistanceKind::jaccard, DistanceKind::cosine, DistanceKind::weighted_jaccard,
                    DistanceKind::overlap_coefficient}) {
    EXPECT_EQ(distance(uniform({}), uniform({}), kind), 0.0);
    EXPECT_EQ(distance(uniform({"a"}), uniform({}), kind), 1.0);
  }
  EXPECT_EQ(distance("", "", DistanceKind::edit_distance_normalized), 0.0);
  EXPECT_EQ(distance("abc", "", DistanceKind::edit_distance_normalized), 1.0);
}

TEST(Distance, OperandKindMismatchThrows) {
  EXPECT_THROW(distance(DistanceOperand{std::string("a")}, DistanceOperand{std::string("b")},
                        DistanceKind::jaccard),
               Error);
  EXPECT_THROW(distance(DistanceOperand{uniform({"a"})}, DistanceOperand{uniform({"a"})},
                        DistanceKind::edit_distance_normalized),
               Error);
}

TEST(Distance, LevenshteinMatchesOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_text(rng, 10), b = random_text(rng, 10);
    EXPECT_EQ(levenshtein(a, b), oracle::edit_distance(a, b));
  }
}

// Symmetry, identity-zero and range over 10,000 random pipelines/inputs.
TEST(Distance, SymmetryIdentityRangeProperties) {
  std::mt19937_64 rng(3);
  std::vector<std::vector<std::string>> corpus;
  for (int i = 0; i < 50; ++i) corpus.push_back(tokenize(random_text(rng, 20), {TokenizerKind::whitespace, 3}));
  const auto stats = CorpusStats::build(corpus);
  const std::vector<Tokenizer> tokenizers = {{TokenizerKind::whitespace, 3}, {TokenizerKind::qgram, 3},
                                             {TokenizerKind::word_qgram, 2}};
  for (int trial = 0; trial < 10000; ++trial) {
    PipelineConfig c;
    c.preprocess = trial % 2 ? std::vector<PreprocessStep>{PreprocessStep::lowercase}
                             : std::vector<PreprocessStep>{PreprocessStep::lowercase,
                                                           PreprocessStep::strip_punctuation,
                                                           PreprocessStep::stem};
    c.tokenizer = tokenizers[static_cast<std::size_t>(trial) % 3];
    c.weighting = trial % 4 < 2 ? Weighting::uniform : Weighting::tf_idf;
    c.distance = kAllDistances[static_cast<std::size_t>(trial) % kAllDistances.size()];
    const auto a = random_text(rng, 24), b = random_text(rng, 24);
    const double ab = 1.0 - similarity(c, a, b, &stats);
    const double ba = 1.0 - similarity(c, b, a, &stats);
    ASSERT_NEAR(ab, ba, 1e-12) << describe(c) << " '" << a << "' '" << b << "'";
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
    ASSERT_NEAR(1.0 - similarity(c, a, a, &stats), 0.0, 1e-12) << describe(c) << " '" << a << "'";
  }
}

TEST(Distance, JaccardAgreesWithWeightedUnderUniformWeights) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = tokenize(random_text(rng, 16), {TokenizerKind::qgram, 2});
    const auto b = tokenize(random_text(rng, 16), {TokenizerKind::qgram, 2});
    const double j = distance(uniform(a), uniform(b), DistanceKind::jaccard);
    ASSERT_NEAR(j, distance(uniform(a), uniform(b), DistanceKind::weighted_jaccard), 1e-12);
    ASSERT_NEAR(j, oracle::jaccard_distance({a.begin(), a.end()}, {b.begin(), b.end()}), 1e-12);
  }
}

TEST(Pipeline, TraceAgreesWithSimilarity) {
  PipelineConfig c;
  c.preprocess = {PreprocessStep::lowercase};
  c.tokenizer = {TokenizerKind::whitespace, 3};
  const auto t = trace_similarity(c, "Sony Bravia 40'", "sony bravia 46'", nullptr);
  EXPECT_EQ(t.left_preprocessed, "sony bravia 40'");
  EXPECT_EQ(t.left_tokens.size(), 3u);
  EXPECT_DOUBLE_EQ(t.similarity, 0.5);
  EXPECT_DOUBLE_EQ(t.similarity, similarity(c, "Sony Bravia 40'", "sony bravia 46'", nullptr));
}

TEST(PipelineConfig, NamesRoundTrip) {
  for (const auto& t : {Tokenizer{TokenizerKind::whitespace, 3}, Tokenizer{TokenizerKind::qgram, 4},
                        Tokenizer{TokenizerKind::word_qgram, 3}}) {
    EXPECT_EQ(parse_tokenizer(describe(t)), t);
  }
  for (auto d : kAllDistances) EXPECT_EQ(parse_distance(name(d)), d);
  EXPECT_THROW(parse_distance("manhattan"), Error);
}
