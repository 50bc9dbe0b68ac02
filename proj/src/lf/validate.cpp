#include <algorithm>
#include <cmath>
#include <regex>

#include "lfm/lf/engine.hpp"

namespace lfm::lf {
namespace {

void check_attrs(const std::vector<std::string>& attrs, const std::string& field,
                 const std::vector<std::string>* schema, std::vector<Diagnostic>& out) {
  if (attrs.empty()) out.push_back({field, "at least one attribute is required"});
  if (!schema) return;
  for (const auto& a : attrs) {
    if (std::find(schema->begin(), schema->end(), a) == schema->end()) {
      out.push_back({field, "unknown attribute '" + a + "'"});
    }
  }
}

void check_pattern(const std::string& pattern, const std::string& field,
                   std::vector<Diagnostic>& out) {
  try {
    std::regex re(pattern, std::regex::ECMAScript);
    if (re.mark_count() != 1) {
      out.push_back({field, "pattern must have exactly one capture group, found " +
                                std::to_string(re.mark_count())});
    }
  } catch (const std::regex_error& e) {
    out.push_back({field, std::string("pattern does not compile: ") + e.what()});
  }
}

bool valid_name(const std::string& name) {
  return !name.empty() && name.size() <= 128 &&
         std::all_of(name.begin(), name.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
         });
}

}  // namespace

std::vector<Diagnostic> validate(const LabelFunctionSpec& spec,
                                 const std::vector<std::string>* schema) {
  std::vector<Diagnostic> out;
  if (!valid_name(spec.name)) {
    out.push_back({"name", "name must be 1-128 characters from [A-Za-z0-9_-]"});
  }
  if (const auto* s = std::get_if<SimilarityBody>(&spec.body)) {
    check_attrs(s->attrs, "attrs", schema, out);
    const auto& hi = s->match_if_sim_ge;
    const auto& lo = s->unmatch_if_sim_le;
    if (!hi && !lo) out.push_back({"thresholds", "at least one threshold is required"});
    for (auto [field, t] : {std::pair{"match_if_sim_ge", hi}, std::pair{"unmatch_if_sim_le", lo}}) {
      if (t && !(std::isfinite(*t) && *t >= 0.0 && *t <= 1.0)) {
        out.push_back({field, "threshold must lie in [0, 1]"});
      }
    }
    if (hi && lo && !(*lo < *hi)) out.push_back({"thresholds", "t_lo < t_hi violated"});
    const auto& tok = s->pipeline.tokenizer;
    if (tok.kind != text::TokenizerKind::whitespace && tok.q < 2) {
      out.push_back({"pipeline.tokenizer", "q must be at least 2"});
    }
  } else {
    const auto& r = std::get<RuleBody>(spec.body);
    check_attrs(r.extract_left.attrs, "extract_left.attrs", schema, out);
    check_attrs(r.extract_right.attrs, "extract_right.attrs", schema, out);
    check_pattern(r.extract_left.pattern, "extract_left.pattern", out);
    check_pattern(r.extract_right.pattern, "extract_right.pattern", out);
    if (r.comparator == Comparator::absolute_diff_gt && !(std::isfinite(r.delta) && r.delta >= 0)) {
      out.push_back({"delta", "delta must be a finite nonnegative number"});
    }
  }
  return out;
}

}  // namespace lfm::lf
