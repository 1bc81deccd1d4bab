#pragma once

#include <string>
#include <string_view>

namespace parldoc::digest {

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(std::string_view data);

std::string base64_encode(std::string_view data);

}  // namespace parldoc::digest
