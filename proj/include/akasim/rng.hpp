#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "akasim/bytes.hpp"

namespace akasim {

// All randomness in the simulator flows from one of these. Seeded instances
// replay byte-for-byte on every platform (mt19937_64 is fully specified), so
// transcripts and reports are reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  static Rng from_entropy();

  uint64_t next_u64() { return engine_(); }

  void fill(std::span<uint8_t> out);

  template <size_t N>
  Octets<N> octets() {
    Octets<N> out;
    fill(out);
    return out;
  }

  Bytes bytes(size_t n);

  // Uniform in [0, bound).
  uint64_t below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace akasim
