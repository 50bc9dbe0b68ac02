#pragma once

#include <string>
#include <string_view>

namespace lfm::text {

// Porter's 1980 suffix-stripping algorithm, original rule set (no later
// revisions such as "bli" -> "ble" or "logi" -> "log"). Expects a single
// lowercase word; anything outside a-z counts as a consonant.
std::string porter_stem(std::string_view word);

}  // namespace lfm::text
