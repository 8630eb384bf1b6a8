#include "akasim/bytes.hpp"

#include <cstring>

#include "akasim/errors.hpp"

namespace akasim {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const uint8_t> data) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw MalformedInputError("hex string has odd length: " + std::string(hex));
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw MalformedInputError("invalid hex digit in: " + std::string(hex));
    }
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

template <size_t N>
Octets<N> to_octets(std::span<const uint8_t> data) {
  if (data.size() != N) {
    throw MalformedInputError("expected " + std::to_string(N) +
                              " octets, got " + std::to_string(data.size()));
  }
  Octets<N> out;
  std::memcpy(out.data(), data.data(), N);
  return out;
}

template Octets<2> to_octets<2>(std::span<const uint8_t>);
template Octets<3> to_octets<3>(std::span<const uint8_t>);
template Octets<4> to_octets<4>(std::span<const uint8_t>);
template Octets<6> to_octets<6>(std::span<const uint8_t>);
template Octets<8> to_octets<8>(std::span<const uint8_t>);
template Octets<14> to_octets<14>(std::span<const uint8_t>);
template Octets<16> to_octets<16>(std::span<const uint8_t>);
template Octets<20> to_octets<20>(std::span<const uint8_t>);
template Octets<32> to_octets<32>(std::span<const uint8_t>);
template Octets<64> to_octets<64>(std::span<const uint8_t>);

Bytes to_bytes(std::span<const uint8_t> data) {
  return Bytes(data.begin(), data.end());
}

Bytes ascii_bytes(std::string_view text) {
  return Bytes(text.begin(), text.end());
}

std::string ascii_string(std::span<const uint8_t> data) {
  return std::string(data.begin(), data.end());
}

Bytes concat(std::initializer_list<std::span<const uint8_t>> parts) {
  size_t total = 0;
  for (const auto& p : parts) total += p.size();
  Bytes out;
  out.reserve(total);
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Sqn48 sqn_to_octets(uint64_t sqn) {
  if (sqn >= kSqnLimit) {
    throw MalformedInputError("sqn exceeds 48 bits");
  }
  Sqn48 out;
  for (int i = 5; i >= 0; --i) {
    out[i] = static_cast<uint8_t>(sqn & 0xff);
    sqn >>= 8;
  }
  return out;
}

uint64_t sqn_from_octets(const Sqn48& sqn) {
  uint64_t value = 0;
  for (uint8_t b : sqn) value = (value << 8) | b;
  return value;
}

}  // namespace akasim
