#include "akasim/crypto/kdf.hpp"

#include "akasim/crypto/digest.hpp"
#include "akasim/errors.hpp"

namespace akasim::crypto {

Key256 kdf(std::span<const uint8_t> key, uint8_t fc_code,
           std::span<const Bytes> params) {
  Bytes s;
  s.push_back(fc_code);
  for (const Bytes& p : params) {
    if (p.size() > 0xffff) {
      throw MalformedInputError("kdf parameter longer than 65535 octets");
    }
    s.insert(s.end(), p.begin(), p.end());
    s.push_back(static_cast<uint8_t>(p.size() >> 8));
    s.push_back(static_cast<uint8_t>(p.size() & 0xff));
  }
  return hmac_sha256(key, s);
}

}  // namespace akasim::crypto
