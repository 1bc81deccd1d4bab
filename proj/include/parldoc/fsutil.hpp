#pragma once

#include <filesystem>
#include <string>

namespace parldoc::fsutil {

std::string read_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory followed by rename, so
/// concurrent writers of the same key are idempotent and readers never
/// observe partial content.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

void ensure_dir(const std::filesystem::path& dir);

}  // namespace parldoc::fsutil
