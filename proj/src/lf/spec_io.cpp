#include "lfm/lf/spec_io.hpp"

#include "lfm/core/error.hpp"

namespace lfm::lf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::parse_error, "LF spec: " + msg); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> require_string_list(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) fail(std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number()) fail(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

Vote require_vote(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be -1, 0 or 1");
  const int x = v.get<int>();
  if (x < -1 || x > 1) fail(std::string("field '") + key + "' must be -1, 0 or 1");
  return static_cast<Vote>(x);
}

template <typename F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument) fail(e.what());
    throw;
  }
}

json extraction_json(const Extraction& e) { return {{"attrs", e.attrs}, {"pattern", e.pattern}}; }

Extraction extraction_from_json(const json& j) {
  return Extraction{require_string_list(j, "attrs"), require_string(j, "pattern")};
}

}  // namespace

json to_json(const text::PipelineConfig& c) {
  json pre = json::array();
  for (auto s : c.preprocess) pre.push_back(text::name(s));
  return {{"preprocess", pre},
          {"tokenizer", text::describe(c.tokenizer)},
          {"weighting", text::name(c.weighting)},
          {"distance", text::name(c.distance)}};
}

text::PipelineConfig pipeline_from_json(const json& j) {
  text::PipelineConfig c;
  for (const auto& s : require_string_list(j, "preprocess")) {
    c.preprocess.push_back(wrap([&] { return text::parse_preprocess_step(s); }));
  }
  c.tokenizer = wrap([&] { return text::parse_tokenizer(require_string(j, "tokenizer")); });
  c.weighting = wrap([&] { return text::parse_weighting(require_string(j, "weighting")); });
  c.distance = wrap([&] { return text::parse_distance(require_string(j, "distance")); });
  return c;
}

json to_json(const LabelFunctionSpec& spec) {
  json j = {{"name", spec.name}, {"origin", name(spec.origin)}};
  if (const auto* s = std::get_if<SimilarityBody>(&spec.body)) {
    j["kind"] = "similarity";
    j["attrs"] = s->attrs;
    j["pipeline"] = to_json(s->pipeline);
    j["match_if_sim_ge"] = s->match_if_sim_ge ? json(*s->match_if_sim_ge) : json(nullptr);
    j["unmatch_if_sim_le"] = s->unmatch_if_sim_le ? json(*s->unmatch_if_sim_le) : json(nullptr);
  } else {
    const auto& r = std::get<RuleBody>(spec.body);
    j["kind"] = "rule";
    j["extract_left"] = extraction_json(r.extract_left);
    j["extract_right"] = extraction_json(r.extract_right);
    j["comparator"] = name(r.comparator);
    if (r.comparator == Comparator::absolute_diff_gt) j["delta"] = r.delta;
    j["when_true"] = to_int(r.when_true);
    j["when_false"] = to_int(r.when_false);
    j["when_missing"] = to_int(r.when_missing);
  }
  return j;
}

LabelFunctionSpec spec_from_json(const json& j) {
  if (!j.is_object()) fail("expected an object");
  LabelFunctionSpec spec;
  spec.name = require_string(j, "name");
  const std::string origin = j.contains("origin") ? require_string(j, "origin") : "user";
  if (origin == "user") spec.origin = Origin::user;
  else if (origin == "auto") spec.origin = Origin::auto_generated;
  else fail("origin must be 'user' or 'auto'");

  const std::string kind = require_string(j, "kind");
  if (kind == "similarity") {
    SimilarityBody s;
    s.attrs = require_string_list(j, "attrs");
    s.pipeline = pipeline_from_json(require(j, "pipeline"));
    s.match_if_sim_ge = optional_number(j, "match_if_sim_ge");
    s.unmatch_if_sim_le = optional_number(j, "unmatch_if_sim_le");
    spec.body = std::move(s);
  } else if (kind == "rule") {
    RuleBody r;
    r.extract_left = extraction_from_json(require(j, "extract_left"));
    r.extract_right = extraction_from_json(require(j, "extract_right"));
    const std::string cmp = require_string(j, "comparator");
    if (cmp == "equal") r.comparator = Comparator::equal;
    else if (cmp == "not-equal") r.comparator = Comparator::not_equal;
    else if (cmp == "absolute-diff-gt") {
      r.comparator = Comparator::absolute_diff_gt;
      auto delta = optional_number(j, "delta");
      if (!delta) fail("absolute-diff-gt needs a numeric 'delta'");
      r.delta = *delta;
    } else {
      fail("unknown comparator '" + cmp + "'");
    }
    r.when_true = require_vote(j, "when_true");
    r.when_false = require_vote(j, "when_false");
    r.when_missing = require_vote(j, "when_missing");
    spec.body = std::move(r);
  } else {
    fail("kind must be 'similarity' or 'rule'");
  }
  return spec;
}

std::string canonical_text(const LabelFunctionSpec& spec) { return to_json(spec).dump(); }

LabelFunctionSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return spec_from_json(j);
}

}  // namespace lfm::lf
