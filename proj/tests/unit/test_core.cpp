#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lfm/core/candidates.hpp"
#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"
#include "lfm/core/ground_truth.hpp"
#include "lfm/core/label_matrix.hpp"
#include "lfm/core/table.hpp"

using namespace lfm;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an lfm::Error";
  return Errc::io_error;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TablePair ingest(const std::string& left, const std::string& right, const std::string& id = "id") {
  std::istringstream l(left), r(right);
  return ingest_table_pair(l, r, id);
}

}  // namespace

TEST(Csv, QuotesCrlfAndMultilineFields) {
  std::istringstream in("a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\r\n\"two\nlines\",z\n");
  const auto recs = csv::read(in);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[1].fields, (std::vector<std::string>{"x, y", "say \"hi\""}));
  EXPECT_EQ(recs[2].fields[0], "two\nlines");
  EXPECT_EQ(recs[2].line, 3u);
}

TEST(Csv, ErrorsCarryLineNumbers) {
  std::istringstream bad("a,b\n1,\"open\n");
  const auto msg = message_of([&] { csv::read(bad); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  std::istringstream stray("a\n\"x\"y\n");
  EXPECT_EQ(code_of([&] { csv::read(stray); }), Errc::parse_error);
}

TEST(Csv, WriteReadRoundTrip) {
  std::mt19937_64 rng(1);
  const std::string alphabet = "ab,\"\n x";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> row(3);
    for (auto& f : row) {
      f.resize(len(rng));
      for (auto& c : f) c = alphabet[pick(rng)];
    }
    row[0] = "k" + row[0];  // keep the record from being an empty line
    std::ostringstream out;
    csv::write_row(out, row);
    std::istringstream in(out.str());
    const auto recs = csv::read(in);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].fields, row);
  }
}

TEST(Table, AbtBuySchema) {
  const auto t = ingest("id,name,description,price\na1,Sony Switcher SBV40S,switcher,49.00\n",
                        "id,name,description,price\nb1,Sony SBV40S,,\n");
  EXPECT_EQ(t.schema, (std::vector<std::string>{"name", "description", "price"}));
  EXPECT_EQ(t.left.size(), 1u);
  EXPECT_EQ(t.right.size(), 1u);
}

TEST(Table, SchemaUnionFillsMissingColumns) {
  const auto t = ingest("id,name,brand\n1,tv,sony\n", "price,id,name\n9,2,tv\n");
  EXPECT_EQ(t.schema, (std::vector<std::string>{"name", "brand", "price"}));
  EXPECT_EQ(t.left[0].values, (std::vector<std::string>{"tv", "sony", ""}));
  EXPECT_EQ(t.right[0].values, (std::vector<std::string>{"tv", "", "9"}));

  std::ostringstream out;
  write_table(out, t, Side::right);
  std::istringstream back(out.str()), left("id,name,brand\n1,tv,sony\n");
  const auto again = ingest_table_pair(left, back, "id");
  EXPECT_EQ(again.right, t.right);
}

TEST(Table, IngestionErrors) {
  EXPECT_EQ(code_of([] { ingest("id,a\n1,x\n1,y\n", "id,a\n2,z\n"); }), Errc::duplicate_id);
  EXPECT_EQ(code_of([] { ingest("key,a\n1,x\n", "id,a\n2,z\n"); }), Errc::missing_id_column);
  const auto msg = message_of([] { ingest("id,a\n1,x\n2\n", "id,a\n2,z\n"); });
  EXPECT_NE(msg.find("left: line 3"), std::string::npos) << msg;
  EXPECT_EQ(code_of([] { ingest_table_pair("/nonexistent.csv", "/nonexistent.csv", "id"); }),
            Errc::file_not_found);
}

TEST(Table, LookupAndDanglingId) {
  const auto t = ingest("id,a\nx,1\ny,2\n", "id,a\nz,3\n");
  EXPECT_EQ(t.left.find("y"), std::optional<std::size_t>(1));
  EXPECT_EQ(code_of([&] { t.left.at("z"); }), Errc::dangling_id);
  EXPECT_EQ(concat_attributes(t.left.at("x"), {0}), "1");
}

TEST(Candidates, SortedUniqueAndLookup) {
  CandidateSet c({{"b", "1", "k", 0.2}, {"a", "2", "k", 0.5}, {"a", "1", "k", 0.9}});
  EXPECT_EQ(c[0].key(), (PairKey{"a", "1"}));
  EXPECT_EQ(c[2].key(), (PairKey{"b", "1"}));
  EXPECT_EQ(c.find({"a", "2"}), std::optional<std::size_t>(1));
  EXPECT_FALSE(c.contains({"b", "2"}));
  EXPECT_EQ(code_of([] { CandidateSet({{"a", "1", "", 0}, {"a", "1", "", 0}}); }), Errc::invalid_argument);
}

TEST(Candidates, IntegrityAndPairView) {
  const auto t = ingest("id,name,price\nL1,sony,\n", "id,name,price\nR1,sony tv,\n");
  CandidateSet ok({{"L1", "R1", "", 1.0}});
  ok.check_integrity(t);
  const auto v = pair_view(ok[0], t);
  EXPECT_EQ(v.left_values, (std::vector<std::string>{"sony", ""}));
  EXPECT_EQ(v.right_values, (std::vector<std::string>{"sony tv", ""}));
  CandidateSet dangling({{"L1", "R9", "", 1.0}});
  EXPECT_EQ(code_of([&] { dangling.check_integrity(t); }), Errc::dangling_id);
}

TEST(Candidates, CsvRoundTripIsExact) {
  CandidateSet c({{"a,1", "b", "b3:ff", 0.1 + 0.2}, {"x", "y\"z", "b0:01", 1.0 / 3.0}});
  std::ostringstream out;
  write_candidates(out, c);
  std::istringstream in(out.str());
  EXPECT_EQ(read_candidates(in), c);
}

TEST(LabelMatrix, RawStatsByHand) {
  LabelMatrix m;
  m.lf_ids = {"lf"};
  m.lf_versions = {"v"};
  m.votes.resize(4, 1);
  m.votes << 1, 1, -1, 0;
  const auto s = lf_raw_stats(m);
  EXPECT_EQ(s[0].n_match, 2u);
  EXPECT_EQ(s[0].n_unmatch, 1u);
  EXPECT_EQ(s[0].n_abstain, 1u);
  EXPECT_DOUBLE_EQ(s[0].coverage, 0.75);
}

TEST(LabelMatrix, RawStatsMatchCountOracleAndEncodingRoundTrips) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> vote(-1, 1);
  LabelMatrix m;
  m.lf_ids = {"a", "b", "c"};
  m.lf_versions = {"1", "2", "3"};
  m.votes.resize(40, 3);
  for (Eigen::Index i = 0; i < 40; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) m.votes(i, j) = static_cast<std::int8_t>(vote(rng));
  const auto s = lf_raw_stats(m);
  LabelMatrix copy = m;
  for (std::size_t j = 0; j < 3; ++j) {
    std::size_t pos = 0, neg = 0, abs = 0;
    for (Eigen::Index i = 0; i < 40; ++i) {
      const int v = m.votes(i, static_cast<Eigen::Index>(j));
      (v > 0 ? pos : v < 0 ? neg : abs)++;
    }
    EXPECT_EQ(s[j].n_match, pos);
    EXPECT_EQ(s[j].n_unmatch, neg);
    EXPECT_EQ(s[j].n_abstain, abs);
    copy.votes.col(static_cast<Eigen::Index>(j)).setZero();
    decode_column(encode_column(m, j), copy, j);
  }
  EXPECT_EQ(copy, m);
}

TEST(LabelMatrix, AbstainingLfHasZeroCoverage) {
  LabelMatrix m;
  m.lf_ids = {"x"};
  m.lf_versions = {"v"};
  m.votes = VoteMatrix::Zero(5, 1);
  EXPECT_EQ(lf_raw_stats(m)[0].coverage, 0.0);
  LabelMatrix empty;
  EXPECT_EQ(code_of([&] { lf_raw_stats(empty); }), Errc::invalid_argument);
}

TEST(GroundTruth, UserShadowsFixtureAndClearRestoresIt) {
  GroundTruthStore g;
  g.set({{"a", "b"}, true, LabelSource::fixture});
  g.set({{"a", "b"}, false, LabelSource::user_click});
  EXPECT_FALSE(g.effective({"a", "b"})->match);
  EXPECT_EQ(g.effective({"a", "b"})->source, LabelSource::user_click);
  EXPECT_TRUE(g.clear({"a", "b"}, LabelSource::user_click));
  EXPECT_TRUE(g.effective({"a", "b"})->match);
  EXPECT_FALSE(g.user_label({"a", "b"}).has_value());
  EXPECT_FALSE(g.clear({"q", "r"}, LabelSource::user_click));
}

TEST(GroundTruth, LabelFilesRoundTrip) {
  std::map<PairKey, bool> labels{{{"a", "b"}, true}, {{"c", "d,e"}, false}};
  std::ostringstream out;
  write_labels(out, labels);
  std::istringstream in(out.str());
  EXPECT_EQ(read_labels(in), labels);
  std::istringstream bad("left_id,right_id,label\na,b,maybe\n");
  EXPECT_EQ(code_of([&] { read_labels(bad); }), Errc::parse_error);
  std::istringstream list("left_id,right_id\nx,y\n");
  EXPECT_EQ(read_match_list(list), (std::map<PairKey, bool>{{{"x", "y"}, true}}));
}
