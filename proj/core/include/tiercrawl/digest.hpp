#pragma once

#include <string>
#include <string_view>

namespace tiercrawl {

enum class DigestAlgorithm { Md5, Sha1, Sha256 };

DigestAlgorithm digest_algorithm_from_string(std::string_view name);
std::string to_string(DigestAlgorithm algorithm);

/// Lowercase hex digest of `data`.
std::string content_digest(std::string_view data, DigestAlgorithm algorithm = DigestAlgorithm::Md5);

}  // namespace tiercrawl
