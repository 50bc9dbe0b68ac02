#include "lfm/lf/spec.hpp"

#include "lfm/lf/spec_io.hpp"
#include "lfm/util/hash.hpp"

namespace lfm::lf {

const char* name(Origin o) { return o == Origin::user ? "user" : "auto"; }

const char* name(Comparator c) {
  switch (c) {
    case Comparator::equal: return "equal";
    case Comparator::not_equal: return "not-equal";
    case Comparator::absolute_diff_gt: return "absolute-diff-gt";
  }
  return "?";
}

std::string lf_version(const LabelFunctionSpec& spec) {
  return to_hex(fnv1a64(canonical_text(spec)));
}

}  // namespace lfm::lf
