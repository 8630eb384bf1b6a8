#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace akasim {

using Bytes = std::vector<uint8_t>;

template <size_t N>
using Octets = std::array<uint8_t, N>;

// Fixed-width quantities used throughout the key schedules.
using Rand128 = Octets<16>;
using Autn = Octets<16>;
using Auts = Octets<14>;
using Sqn48 = Octets<6>;
using Amf16 = Octets<2>;
using Key128 = Octets<16>;
using Key256 = Octets<32>;
using Key512 = Octets<64>;

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws MalformedInputError

// Narrow a dynamic buffer to an exact width; the width checks at module
// boundaries (CLI, bindings, file parsers) funnel through here.
template <size_t N>
Octets<N> to_octets(std::span<const uint8_t> data);

template <size_t N>
Octets<N> octets_from_hex(std::string_view hex) {
  return to_octets<N>(from_hex(hex));
}

Bytes to_bytes(std::span<const uint8_t> data);
Bytes ascii_bytes(std::string_view text);
std::string ascii_string(std::span<const uint8_t> data);

template <size_t N>
Octets<N> xor_octets(const Octets<N>& a, const Octets<N>& b) {
  Octets<N> out;
  for (size_t i = 0; i < N; ++i) out[i] = a[i] ^ b[i];
  return out;
}

Bytes concat(std::initializer_list<std::span<const uint8_t>> parts);

// 48-bit counters travel as 6-octet big-endian strings.
Sqn48 sqn_to_octets(uint64_t sqn);
uint64_t sqn_from_octets(const Sqn48& sqn);

inline constexpr uint64_t kSqnLimit = uint64_t{1} << 48;

template <size_t N>
Octets<N> to_octets(std::span<const uint8_t> data);

extern template Octets<2> to_octets<2>(std::span<const uint8_t>);
extern template Octets<3> to_octets<3>(std::span<const uint8_t>);
extern template Octets<4> to_octets<4>(std::span<const uint8_t>);
extern template Octets<6> to_octets<6>(std::span<const uint8_t>);
extern template Octets<8> to_octets<8>(std::span<const uint8_t>);
extern template Octets<14> to_octets<14>(std::span<const uint8_t>);
extern template Octets<16> to_octets<16>(std::span<const uint8_t>);
extern template Octets<20> to_octets<20>(std::span<const uint8_t>);
extern template Octets<32> to_octets<32>(std::span<const uint8_t>);
extern template Octets<64> to_octets<64>(std::span<const uint8_t>);

}  // namespace akasim
