#include "cubiclab/resources.hpp"

#include <openssl/evp.h>

#include <memory>

#include "cubiclab/error.hpp"
#include "fixture_table.hpp"

namespace cubiclab {

namespace {

const detail::EmbeddedFixture& find(std::string_view name) {
  for (const auto& f : detail::embedded_fixtures()) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown fixture file '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& f : detail::embedded_fixtures()) out.emplace_back(f.name);
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string_view fixture_file(std::string_view name) {
  const auto& f = find(name);
  if (sha256_hex(f.content) != f.sha256) throw Error("fixture '" + std::string(name) + "' fails its checksum");
  return f.content;
}

std::string_view fixture_digest(std::string_view name) { return find(name).sha256; }

}  // namespace cubiclab
