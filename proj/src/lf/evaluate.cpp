#include <cmath>
#include <cstdlib>
#include <regex>

#include "lfm/core/error.hpp"
#include "lfm/lf/engine.hpp"

namespace lfm::lf {
namespace {

std::vector<std::size_t> resolve_attrs(const TablePair& tables,
                                       const std::vector<std::string>& attrs) {
  std::vector<std::size_t> out;
  out.reserve(attrs.size());
  for (const auto& a : attrs) {
    auto idx = tables.attribute_index(a);
    if (!idx) throw Error(Errc::validation_failed, "unknown attribute '" + a + "'");
    out.push_back(*idx);
  }
  return out;
}

std::string corpus_key(const std::vector<std::size_t>& attrs, const text::PipelineConfig& c) {
  std::string key;
  for (auto a : attrs) key += std::to_string(a) + ",";
  key += "|";
  for (auto s : c.preprocess) key += std::string(text::name(s)) + ",";
  key += "|" + text::describe(c.tokenizer);
  return key;
}

Vote threshold_vote(const SimilarityBody& s, double sim) {
  if (s.match_if_sim_ge && sim >= *s.match_if_sim_ge) return Vote::match;
  if (s.unmatch_if_sim_le && sim <= *s.unmatch_if_sim_le) return Vote::non_match;
  return Vote::abstain;
}

std::optional<std::string> extract(const std::regex& re, const std::string& text) {
  std::smatch m;
  if (!std::regex_search(text, m, re) || m.size() < 2 || !m[1].matched) return std::nullopt;
  return m[1].str();
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

Vote rule_vote(const RuleBody& r, const std::optional<std::string>& left,
               const std::optional<std::string>& right, std::string* reason) {
  if (!left || !right) {
    if (reason) *reason = "extraction missed on the " + std::string(!left ? "left" : "right") + " side";
    return r.when_missing;
  }
  bool outcome = false;
  switch (r.comparator) {
    case Comparator::equal: outcome = *left == *right; break;
    case Comparator::not_equal: outcome = *left != *right; break;
    case Comparator::absolute_diff_gt: {
      auto a = parse_number(*left), b = parse_number(*right);
      if (!a || !b) {
        if (reason) *reason = "captured text is not numeric";
        return r.when_missing;
      }
      outcome = std::fabs(*a - *b) > r.delta;
      break;
    }
  }
  if (reason) *reason = std::string("comparator ") + name(r.comparator) + " is " + (outcome ? "true" : "false");
  return outcome ? r.when_true : r.when_false;
}

const text::CorpusStats* stats_for(const SimilarityBody& s, const std::vector<std::size_t>& attrs,
                                   const CorpusIndex& corpus,
                                   std::shared_ptr<const text::CorpusStats>& holder) {
  if (s.pipeline.weighting != text::Weighting::tf_idf || !text::uses_tokens(s.pipeline.distance)) {
    return nullptr;
  }
  holder = corpus.stats(attrs, s.pipeline);
  return holder.get();
}

text::DistanceOperand make_operand(const text::PipelineConfig& c, const std::string& raw,
                                   const text::CorpusStats* stats) {
  std::string pre = text::preprocess(raw, c.preprocess);
  if (!text::uses_tokens(c.distance)) return pre;
  return text::weigh(text::tokenize(pre, c.tokenizer), c.weighting, stats);
}

}  // namespace

std::shared_ptr<const text::CorpusStats> CorpusIndex::stats(
    const std::vector<std::size_t>& attrs, const text::PipelineConfig& config) const {
  const std::string key = corpus_key(attrs, config);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::vector<std::vector<std::string>> docs;
  docs.reserve(tables_->left.size() + tables_->right.size());
  for (const Table* t : {&tables_->left, &tables_->right}) {
    for (const auto& tuple : t->rows()) {
      docs.push_back(text::tokenize(
          text::preprocess(concat_attributes(tuple, attrs), config.preprocess), config.tokenizer));
    }
  }
  auto built = std::make_shared<const text::CorpusStats>(text::CorpusStats::build(docs));
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(built)).first->second;
}

EvaluationTrace evaluate_traced(const LabelFunctionSpec& spec, const CandidatePair& pair,
                                const CorpusIndex& corpus) {
  const TablePair& tables = corpus.tables();
  const Tuple& l = tables.left.at(pair.left_id);
  const Tuple& r = tables.right.at(pair.right_id);
  EvaluationTrace t;
  if (const auto* s = std::get_if<SimilarityBody>(&spec.body)) {
    auto attrs = resolve_attrs(tables, s->attrs);
    t.left_text = concat_attributes(l, attrs);
    t.right_text = concat_attributes(r, attrs);
    std::shared_ptr<const text::CorpusStats> holder;
    const auto* stats = stats_for(*s, attrs, corpus, holder);
    t.pipeline = text::trace_similarity(s->pipeline, t.left_text, t.right_text, stats);
    t.vote = threshold_vote(*s, t.pipeline->similarity);
    t.reason = "similarity " + std::to_string(t.pipeline->similarity);
  } else {
    const auto& rule = std::get<RuleBody>(spec.body);
    t.left_text = concat_attributes(l, resolve_attrs(tables, rule.extract_left.attrs));
    t.right_text = concat_attributes(r, resolve_attrs(tables, rule.extract_right.attrs));
    t.left_capture = extract(std::regex(rule.extract_left.pattern), t.left_text);
    t.right_capture = extract(std::regex(rule.extract_right.pattern), t.right_text);
    t.vote = rule_vote(rule, t.left_capture, t.right_capture, &t.reason);
  }
  return t;
}

Vote evaluate(const LabelFunctionSpec& spec, const CandidatePair& pair, const CorpusIndex& corpus) {
  return evaluate_traced(spec, pair, corpus).vote;
}

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> resolve_rows(
    const TablePair& tables, const CandidateSet& candidates) {
  std::vector<std::size_t> lrow(candidates.size()), rrow(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto l = tables.left.find(candidates[i].left_id);
    auto r = tables.right.find(candidates[i].right_id);
    if (!l || !r) throw Error(Errc::dangling_id, "candidate references a missing tuple");
    lrow[i] = *l;
    rrow[i] = *r;
  }
  return {std::move(lrow), std::move(rrow)};
}

}  // namespace

std::vector<double> similarity_column(const std::vector<std::string>& attr_names,
                                      const text::PipelineConfig& pipeline,
                                      const CandidateSet& candidates, const CorpusIndex& corpus) {
  const TablePair& tables = corpus.tables();
  const auto [lrow, rrow] = resolve_rows(tables, candidates);
  const auto attrs = resolve_attrs(tables, attr_names);
  std::shared_ptr<const text::CorpusStats> holder;
  const text::CorpusStats* stats = nullptr;
  if (pipeline.weighting == text::Weighting::tf_idf && text::uses_tokens(pipeline.distance)) {
    holder = corpus.stats(attrs, pipeline);
    stats = holder.get();
  }
  std::vector<std::optional<text::DistanceOperand>> lcache(tables.left.size()),
      rcache(tables.right.size());
  auto operand = [&](std::vector<std::optional<text::DistanceOperand>>& cache, const Table& t,
                     std::size_t row) -> const text::DistanceOperand& {
    if (!cache[row]) cache[row] = make_operand(pipeline, concat_attributes(t[row], attrs), stats);
    return *cache[row];
  };
  std::vector<double> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out[i] = 1.0 - text::distance(operand(lcache, tables.left, lrow[i]),
                                  operand(rcache, tables.right, rrow[i]), pipeline.distance);
  }
  return out;
}

std::vector<std::int8_t> evaluate_column(const LabelFunctionSpec& spec,
                                         const CandidateSet& candidates,
                                         const CorpusIndex& corpus) {
  std::vector<std::int8_t> out(candidates.size(), 0);
  if (const auto* s = std::get_if<SimilarityBody>(&spec.body)) {
    const auto sims = similarity_column(s->attrs, s->pipeline, candidates, corpus);
    for (std::size_t i = 0; i < sims.size(); ++i) out[i] = to_int(threshold_vote(*s, sims[i]));
    return out;
  }
  const TablePair& tables = corpus.tables();
  const auto [lrow, rrow] = resolve_rows(tables, candidates);
  const auto& rule = std::get<RuleBody>(spec.body);
  const auto lattrs = resolve_attrs(tables, rule.extract_left.attrs);
  const auto rattrs = resolve_attrs(tables, rule.extract_right.attrs);
  const std::regex lre(rule.extract_left.pattern), rre(rule.extract_right.pattern);
  std::vector<std::optional<std::optional<std::string>>> lcache(tables.left.size()),
      rcache(tables.right.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& lc = lcache[lrow[i]];
    if (!lc) lc = extract(lre, concat_attributes(tables.left[lrow[i]], lattrs));
    auto& rc = rcache[rrow[i]];
    if (!rc) rc = extract(rre, concat_attributes(tables.right[rrow[i]], rattrs));
    out[i] = to_int(rule_vote(rule, *lc, *rc, nullptr));
  }
  return out;
}

}  // namespace lfm::lf
