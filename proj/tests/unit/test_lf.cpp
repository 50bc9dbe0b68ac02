#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lfm/core/error.hpp"
#include "lfm/lf/engine.hpp"
#include "lfm/lf/spec_io.hpp"
#include "specs.hpp"

using namespace lfm;
using namespace lfm::lf;

namespace {

TablePair tv_tables() {
  std::istringstream l(
      "id,name,description,price\n"
      "a1,Sony Bravia 40' LCD HDTV,flat panel,999\n"
      "a2,Sony Switcher SBV40S,,49\n"
      "a3,Samsung Soundbar,no size here,199\n");
  std::istringstream r(
      "id,name,description,price\n"
      "b1,Sony Bravia 46' LCD HDTV,,1099\n"
      "b2,sony switcher sbv40s,,52\n"
      "b3,Logitech Mouse,,not a price\n");
  return ingest_table_pair(l, r, "id");
}

CandidateSet all_pairs(const TablePair& t) {
  std::vector<CandidatePair> pairs;
  for (const auto& a : t.left.rows())
    for (const auto& b : t.right.rows()) pairs.push_back({a.id, b.id, "", 0.0});
  return CandidateSet(std::move(pairs));
}

bool has_diagnostic(const std::vector<Diagnostic>& d, const std::string& needle) {
  for (const auto& x : d)
    if (x.message.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Validate, RunningExampleThresholdsAreValid) {
  const TablePair t = tv_tables();
  EXPECT_TRUE(validate(specs::name_overlap(0.6, 0.1), &t.schema).empty());
  EXPECT_TRUE(validate(specs::size_unmatch(), &t.schema).empty());
}

TEST(Validate, EqualThresholdsRejected) {
  EXPECT_TRUE(has_diagnostic(validate(specs::name_overlap(0.5, 0.5)), "t_lo < t_hi violated"));
}

TEST(Validate, PatternWithoutCaptureGroupRejected) {
  auto spec = specs::size_unmatch();
  std::get<RuleBody>(spec.body).extract_left.pattern = R"(\d+')";
  EXPECT_TRUE(has_diagnostic(validate(spec), "capture group"));
  std::get<RuleBody>(spec.body).extract_left.pattern = "(";
  EXPECT_FALSE(validate(spec).empty());
}

TEST(Validate, NamesAttributesAndRanges) {
  const TablePair t = tv_tables();
  auto spec = specs::name_overlap(0.6, std::nullopt, "bad name!");
  EXPECT_FALSE(validate(spec).empty());
  auto unknown = specs::name_overlap(0.6, std::nullopt);
  std::get<SimilarityBody>(unknown.body).attrs = {"brand"};
  EXPECT_TRUE(has_diagnostic(validate(unknown, &t.schema), "unknown attribute 'brand'"));
  EXPECT_TRUE(validate(unknown).empty());  // attributes unchecked without a schema
  EXPECT_FALSE(validate(specs::name_overlap(1.5, std::nullopt)).empty());
  EXPECT_FALSE(validate(specs::name_overlap(std::nullopt, std::nullopt)).empty());
}

TEST(SpecIo, JsonRoundTripAndVersioning) {
  for (const auto& spec : {specs::name_overlap(0.6, 0.1), specs::size_unmatch(),
                           specs::name_overlap(std::nullopt, 0.2)}) {
    EXPECT_EQ(parse_spec_text(to_json(spec).dump()), spec);
    EXPECT_EQ(lf_version(parse_spec_text(to_json(spec).dump(2))), lf_version(spec));
  }
  EXPECT_NE(lf_version(specs::name_overlap(0.4, 0.1)), lf_version(specs::name_overlap(0.6, 0.1)));
  EXPECT_THROW(parse_spec_text("{\"name\": \"x\"}"), Error);
  EXPECT_THROW(parse_spec_text("not json"), Error);
}

TEST(Evaluate, IdenticalNamesVoteMatch) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto trace = evaluate_traced(specs::name_overlap(0.6, 0.1), {"a2", "b2", "", 0}, corpus);
  EXPECT_EQ(trace.vote, Vote::match);
  EXPECT_DOUBLE_EQ(trace.pipeline->similarity, 1.0);
}

TEST(Evaluate, ScreenSizesDisagree) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto trace = evaluate_traced(specs::size_unmatch(), {"a1", "b1", "", 0}, corpus);
  EXPECT_EQ(trace.vote, Vote::non_match);
  EXPECT_EQ(trace.left_capture, std::optional<std::string>("40"));
  EXPECT_EQ(trace.right_capture, std::optional<std::string>("46"));
  // No size on either side: missing.
  EXPECT_EQ(evaluate(specs::size_unmatch(), {"a3", "b3", "", 0}, corpus), Vote::abstain);
}

TEST(Evaluate, AbstainBand) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  // "sony bravia 40' lcd hdtv" vs "sony bravia 46' lcd hdtv": 4 shared of 6, sim 2/3.
  const auto mid = evaluate_traced(specs::name_overlap(0.9, 0.1), {"a1", "b1", "", 0}, corpus);
  EXPECT_NEAR(mid.pipeline->similarity, 4.0 / 6.0, 1e-15);
  EXPECT_EQ(mid.vote, Vote::abstain);
  EXPECT_EQ(evaluate(specs::name_overlap(0.9, 0.1), {"a3", "b3", "", 0}, corpus), Vote::non_match);
}

TEST(Evaluate, NumericComparator) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  RuleBody body;
  body.extract_left = {{"price"}, R"(([0-9.]+))"};
  body.extract_right = body.extract_left;
  body.comparator = Comparator::absolute_diff_gt;
  body.delta = 10;
  body.when_true = Vote::non_match;
  body.when_false = Vote::match;
  body.when_missing = Vote::abstain;
  const LabelFunctionSpec spec{"price_gap", Origin::user, body};
  EXPECT_EQ(evaluate(spec, {"a2", "b2", "", 0}, corpus), Vote::match);       // |49 - 52| <= 10
  EXPECT_EQ(evaluate(spec, {"a1", "b2", "", 0}, corpus), Vote::non_match);   // |999 - 52| > 10
  EXPECT_EQ(evaluate(spec, {"a1", "b3", "", 0}, corpus), Vote::abstain);     // no number on the right
}

TEST(Evaluate, ColumnAgreesWithPerPairEvaluation) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto cands = all_pairs(t);
  auto tfidf = specs::name_overlap(0.3, 0.05, "tfidf");
  std::get<SimilarityBody>(tfidf.body).pipeline.weighting = text::Weighting::tf_idf;
  std::get<SimilarityBody>(tfidf.body).pipeline.distance = text::DistanceKind::cosine;
  for (const auto& spec : {specs::name_overlap(0.6, 0.1), specs::size_unmatch(), tfidf}) {
    const auto col = evaluate_column(spec, cands, corpus);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      EXPECT_EQ(col[i], to_int(evaluate(spec, cands[i], corpus))) << spec.name << " " << i;
    }
  }
}

TEST(Apply, UnchangedSpecsCostNothing) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto cands = all_pairs(t);
  const std::vector<LabelFunctionSpec> specs_v = {specs::name_overlap(0.4, 0.1), specs::size_unmatch()};
  const auto first = apply_all(specs_v, cands, corpus, nullptr);
  EXPECT_EQ(first.evaluations, 2 * cands.size());
  const auto second = apply_all(specs_v, cands, corpus, &first.matrix);
  EXPECT_EQ(second.evaluations, 0u);
  EXPECT_EQ(second.matrix, first.matrix);
}

TEST(Apply, ThresholdEditRecomputesOneColumn) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto cands = all_pairs(t);
  const auto before = apply_all({specs::name_overlap(0.4, 0.1), specs::size_unmatch()}, cands, corpus, nullptr);
  const auto after = apply_all({specs::name_overlap(0.6, 0.1), specs::size_unmatch()}, cands, corpus, &before.matrix);
  EXPECT_EQ(after.columns_recomputed, 1u);
  EXPECT_EQ(after.columns_reused, 1u);
  EXPECT_EQ(after.evaluations, cands.size());
}

TEST(Apply, DeletedLfColumnDisappears) {
  const TablePair t = tv_tables();
  CorpusIndex corpus(t);
  const auto cands = all_pairs(t);
  const auto before = apply_all({specs::name_overlap(0.4, 0.1), specs::size_unmatch()}, cands, corpus, nullptr);
  const auto after = apply_all({specs::size_unmatch()}, cands, corpus, &before.matrix);
  EXPECT_EQ(after.matrix.lf_ids, std::vector<std::string>{"size_unmatch"});
  EXPECT_EQ(after.evaluations, 0u);
}
