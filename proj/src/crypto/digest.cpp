#define OPENSSL_SUPPRESS_DEPRECATED  // SHA1_Transform for the FIPS 186-2 step

#include "akasim/crypto/digest.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <memory>
#include <stdexcept>

namespace akasim::crypto {

namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

[[noreturn]] void fail(const char* what) {
  throw std::runtime_error(std::string("openssl: ") + what);
}

Bytes aes128_apply(const Key128& key, const EVP_CIPHER* cipher,
                   const uint8_t* iv, std::span<const uint8_t> data) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) fail("EVP_CIPHER_CTX_new");
  if (EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, key.data(), iv) != 1) {
    fail("EVP_EncryptInit_ex");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  Bytes out(data.size());
  int len = 0;
  if (!data.empty() &&
      EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(),
                        static_cast<int>(data.size())) != 1) {
    fail("EVP_EncryptUpdate");
  }
  return out;
}

}  // namespace

Octets<20> sha1(std::span<const uint8_t> data) {
  Octets<20> out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha1(),
                 nullptr) != 1 ||
      len != out.size()) {
    fail("EVP_Digest(sha1)");
  }
  return out;
}

Octets<32> sha256(std::span<const uint8_t> data) {
  Octets<32> out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    fail("EVP_Digest(sha256)");
  }
  return out;
}

Octets<32> hmac_sha256(std::span<const uint8_t> key,
                       std::span<const uint8_t> data) {
  Octets<32> out;
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(),
           data.size(), out.data(), &len) == nullptr ||
      len != out.size()) {
    fail("HMAC(sha256)");
  }
  return out;
}

Octets<20> sha1_block_step(const Octets<20>& value) {
  SHA_CTX ctx;
  SHA1_Init(&ctx);
  uint8_t block[SHA_CBLOCK] = {0};
  std::copy(value.begin(), value.end(), block);
  SHA1_Transform(&ctx, block);
  Octets<20> out;
  const uint32_t h[5] = {static_cast<uint32_t>(ctx.h0),
                         static_cast<uint32_t>(ctx.h1),
                         static_cast<uint32_t>(ctx.h2),
                         static_cast<uint32_t>(ctx.h3),
                         static_cast<uint32_t>(ctx.h4)};
  for (int i = 0; i < 5; ++i) {
    out[4 * i + 0] = static_cast<uint8_t>(h[i] >> 24);
    out[4 * i + 1] = static_cast<uint8_t>(h[i] >> 16);
    out[4 * i + 2] = static_cast<uint8_t>(h[i] >> 8);
    out[4 * i + 3] = static_cast<uint8_t>(h[i]);
  }
  return out;
}

Octets<16> aes128_encrypt_block(const Key128& key, const Octets<16>& block) {
  Bytes out = aes128_apply(key, EVP_aes_128_ecb(), nullptr, block);
  Octets<16> result;
  std::copy(out.begin(), out.end(), result.begin());
  return result;
}

Bytes aes128_ctr(const Key128& key, const Octets<16>& icb,
                 std::span<const uint8_t> data) {
  return aes128_apply(key, EVP_aes_128_ctr(), icb.data(), data);
}

std::string fingerprint(std::span<const uint8_t> data) {
  return to_hex(std::span(sha256(data)).first(4));
}

}  // namespace akasim::crypto
