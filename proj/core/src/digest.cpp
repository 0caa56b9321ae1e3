#include "tiercrawl/digest.hpp"

#include <openssl/evp.h>

#include <memory>

#include "tiercrawl/errors.hpp"
#include "tiercrawl/uri.hpp"

namespace tiercrawl {

DigestAlgorithm digest_algorithm_from_string(std::string_view name) {
  std::string n = ascii_lower(name);
  if (n == "md5") return DigestAlgorithm::Md5;
  if (n == "sha1") return DigestAlgorithm::Sha1;
  if (n == "sha256") return DigestAlgorithm::Sha256;
  throw ConfigError("unknown digest algorithm: " + std::string(name));
}

std::string to_string(DigestAlgorithm algorithm) {
  switch (algorithm) {
    case DigestAlgorithm::Md5: return "md5";
    case DigestAlgorithm::Sha1: return "sha1";
    case DigestAlgorithm::Sha256: return "sha256";
  }
  return "md5";
}

std::string content_digest(std::string_view data, DigestAlgorithm algorithm) {
  const EVP_MD* md = nullptr;
  switch (algorithm) {
    case DigestAlgorithm::Md5: md = EVP_md5(); break;
    case DigestAlgorithm::Sha1: md = EVP_sha1(); break;
    case DigestAlgorithm::Sha256: md = EVP_sha256(); break;
  }
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out, &len) != 1) {
    throw Error("digest computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string result;
  result.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    result.push_back(hex[out[i] >> 4]);
    result.push_back(hex[out[i] & 0xf]);
  }
  return result;
}

}  // namespace tiercrawl
