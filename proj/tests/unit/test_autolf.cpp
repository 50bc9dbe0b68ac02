#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "lfm/autolf/auto_lf.hpp"
#include "lfm/core/error.hpp"
#include "lfm/lf/engine.hpp"

using namespace lfm;
using namespace lfm::autolf;
using text::DistanceKind;
using text::PreprocessStep;
using text::TokenizerKind;

namespace {

TablePair tables(const std::string& left, const std::string& right) {
  std::istringstream l(left), r(right);
  return ingest_table_pair(l, r, "id");
}

CandidateSet cross(const TablePair& t) {
  std::vector<CandidatePair> pairs;
  for (const auto& a : t.left.rows())
    for (const auto& b : t.right.rows()) pairs.push_back({a.id, b.id, "", 0.0});
  return CandidateSet(std::move(pairs));
}

}  // namespace

TEST(Grid, ProductOfDimensions) {
  Grid g;
  g.preprocess_sets = {{PreprocessStep::lowercase}, {PreprocessStep::stem}};
  g.tokenizers = {{TokenizerKind::whitespace, 3}, {TokenizerKind::qgram, 3}};
  g.weightings = {text::Weighting::uniform, text::Weighting::tf_idf};
  g.distances = {DistanceKind::jaccard, DistanceKind::cosine};
  EXPECT_EQ(enumerate_configs(g).size(), 16u);
}

TEST(Grid, EditDistanceOnlyOncePerPreprocessSet) {
  Grid g;
  g.preprocess_sets = {{PreprocessStep::lowercase}, {PreprocessStep::stem}, {}};
  g.tokenizers = {{TokenizerKind::whitespace, 3}, {TokenizerKind::qgram, 3}};
  g.weightings = {text::Weighting::uniform, text::Weighting::tf_idf};
  g.distances = {DistanceKind::edit_distance_normalized};
  EXPECT_EQ(enumerate_configs(g).size(), 3u);
  g.tokenizers.clear();
  EXPECT_THROW(enumerate_configs(g), Error);
}

TEST(Grid, DefaultSizeMatchesDocumentedMenu) {
  const Grid g = default_grid();
  // Counted from the menu itself: token distances span the full product,
  // edit distance ignores tokenizer and weighting.
  std::size_t token_distances = 0, edit = 0;
  for (auto d : g.distances) (text::uses_tokens(d) ? token_distances : edit)++;
  const std::size_t expected = g.preprocess_sets.size() *
                               (g.tokenizers.size() * g.weightings.size() * token_distances + edit);
  const auto configs = enumerate_configs(g);
  EXPECT_EQ(configs.size(), expected);
  EXPECT_EQ(configs.size(), kDefaultGridConfigs);
  std::set<std::string> distinct;
  for (const auto& c : configs) distinct.insert(text::describe(c));
  EXPECT_EQ(distinct.size(), configs.size());
}

TEST(Estimator, OneToOneMatchesArePrecise) {
  // Similarities follow the set's sorted order: (a,1), (b,1), (b,2).
  CandidateSet c({{"a", "1", "", 0}, {"b", "2", "", 0}, {"b", "1", "", 0}});
  const std::vector<double> sim = {0.9, 0.1, 0.8};
  const auto e = estimate_precision(c, sim, 0.5);
  EXPECT_DOUBLE_EQ(e.est_precision, 1.0);
  EXPECT_EQ(e.est_match_count, 2u);
}

TEST(Estimator, RightTupleMatchingTwoReferenceTuples) {
  CandidateSet c({{"a", "1", "", 0}, {"b", "1", "", 0}, {"c", "2", "", 0}});
  const std::vector<double> sim = {0.9, 0.8, 0.1};
  EXPECT_DOUBLE_EQ(estimate_precision(c, sim, 0.5).est_precision, 0.5);
  // Empty match set counts as precise.
  EXPECT_DOUBLE_EQ(estimate_precision(c, sim, 0.95).est_precision, 1.0);
  EXPECT_EQ(estimate_precision(c, sim, 0.95).est_match_count, 0u);
}

TEST(Estimator, ReferenceSideCanBeRight) {
  CandidateSet c({{"a", "1", "", 0}, {"a", "2", "", 0}});
  const std::vector<double> sim = {0.9, 0.9};
  EXPECT_DOUBLE_EQ(estimate_precision(c, sim, 0.5, Side::left).est_precision, 1.0);
  EXPECT_DOUBLE_EQ(estimate_precision(c, sim, 0.5, Side::right).est_precision, 0.5);
}

TEST(Generate, UnreachablePrecisionGivesNothing) {
  // Every right tuple looks like both left tuples, so precision is 1/2.
  const auto t = tables("id,name\na,red apple\nb,red apple\n", "id,name\n1,red apple\n2,red apple\n");
  lf::CorpusIndex corpus(t);
  const auto r = generate(default_grid(), 0.9, 5, cross(t), corpus);
  EXPECT_TRUE(r.specs.empty());
}

TEST(Generate, DuplicateMatchSetsKeptOnce) {
  const auto t = tables("id,name\na,alpha\nb,bravo\n", "id,name\n1,alpha\n2,bravo\n");
  lf::CorpusIndex corpus(t);
  Grid g = default_grid();
  g.preprocess_sets = {{PreprocessStep::lowercase}};
  g.tokenizers = {{TokenizerKind::whitespace, 3}};
  g.weightings = {text::Weighting::uniform};
  g.distances = {DistanceKind::jaccard, DistanceKind::cosine};
  const auto r = generate(g, 0.9, 5, cross(t), corpus);
  ASSERT_EQ(r.specs.size(), 1u);
  EXPECT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.specs[0].name, "auto_lf_0");
  EXPECT_EQ(r.specs[0].origin, lf::Origin::auto_generated);
}

TEST(Generate, SpecsValidateAndVoteAsEstimated) {
  const auto t = tables(
      "id,name,price\na,sony bravia 40 lcd,100\nb,canon zoom camera,200\nc,logitech usb mouse,30\n",
      "id,name,price\n1,sony bravia 40 lcd black,100\n2,canon camera zoom,210\n3,bose speakers,90\n");
  lf::CorpusIndex corpus(t);
  const auto cands = cross(t);
  const auto r = generate(default_grid(), 0.9, 5, cands, corpus);
  ASSERT_FALSE(r.specs.empty());
  for (std::size_t k = 0; k < r.specs.size(); ++k) {
    const auto& spec = r.specs[k];
    EXPECT_EQ(spec.name, "auto_lf_" + std::to_string(k));
    EXPECT_TRUE(lf::validate(spec, &t.schema).empty()) << spec.name;
    const auto col = lf::evaluate_column(spec, cands, corpus);
    std::size_t pos = 0;
    for (auto v : col) pos += v > 0;
    const auto& body = std::get<lf::SimilarityBody>(spec.body);
    const auto est = estimate_precision(body.pipeline, body.attrs, *body.match_if_sim_ge, cands, corpus);
    EXPECT_EQ(pos, est.est_match_count) << spec.name;
    EXPECT_GE(est.est_precision, 0.9);
  }
}
