#include "akasim/rng.hpp"

namespace akasim {

Rng Rng::from_entropy() {
  std::random_device rd;
  uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  return Rng(seed);
}

void Rng::fill(std::span<uint8_t> out) {
  size_t i = 0;
  while (i < out.size()) {
    uint64_t word = engine_();
    for (int j = 7; j >= 0 && i < out.size(); --j) {
      out[i++] = static_cast<uint8_t>((word >> (8 * j)) & 0xff);
    }
  }
}

Bytes Rng::bytes(size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

uint64_t Rng::below(uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and the stream deterministic.
  uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

}  // namespace akasim
