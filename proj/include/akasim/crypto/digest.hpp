#pragma once

#include <span>

#include "akasim/bytes.hpp"

namespace akasim::crypto {

Octets<20> sha1(std::span<const uint8_t> data);
Octets<32> sha256(std::span<const uint8_t> data);
Octets<32> hmac_sha256(std::span<const uint8_t> key,
                       std::span<const uint8_t> data);

// One SHA-1 block step over a 160-bit value zero-padded to the block size;
// the G function of the FIPS 186-2 pseudo-random generator.
Octets<20> sha1_block_step(const Octets<20>& value);

Octets<16> aes128_encrypt_block(const Key128& key, const Octets<16>& block);

Bytes aes128_ctr(const Key128& key, const Octets<16>& icb,
                 std::span<const uint8_t> data);

// Short digest shown instead of raw key bytes in CLI output.
std::string fingerprint(std::span<const uint8_t> data);

}  // namespace akasim::crypto
