#pragma once

#include <filesystem>
#include <string>

namespace lfm::service {

// Writes `content` to a sibling temp file, flushes it and renames it over
// `path`, so readers see either the old or the new file.
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

}  // namespace lfm::service
