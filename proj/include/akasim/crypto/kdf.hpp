#pragma once

#include <span>

#include "akasim/bytes.hpp"

namespace akasim::crypto {

// FC code registry for the generic network KDF. One code per derivation;
// values follow the TS 33.220 annex B allocations where the defining annex
// publishes one (33.401 A.2, 33.402 A.2, 33.501 A.2/A.4/A.6/A.7) and are
// artifact allocations in the same style otherwise.
namespace fc {
inline constexpr uint8_t kasme = 0x10;        // TS 33.401 A.2
inline constexpr uint8_t ck_ik_prime = 0x20;  // TS 33.402 A.2
inline constexpr uint8_t kc128 = 0x32;        // TS 33.102 B.5
inline constexpr uint8_t ki128 = 0x38;        // TS 43.020 H.6 style
inline constexpr uint8_t kausf = 0x6a;        // TS 33.501 A.2
inline constexpr uint8_t res_star = 0x6b;     // TS 33.501 A.4
inline constexpr uint8_t kseaf = 0x6c;        // TS 33.501 A.6
inline constexpr uint8_t kamf = 0x6d;         // TS 33.501 A.7
}  // namespace fc

// Generic length-prefixed KDF: HMAC-SHA-256(key, FC || P0 || L0 || ...) with
// 16-bit big-endian parameter lengths. Throws MalformedInputError when a
// parameter exceeds 65535 octets.
Key256 kdf(std::span<const uint8_t> key, uint8_t fc_code,
           std::span<const Bytes> params);

}  // namespace akasim::crypto
