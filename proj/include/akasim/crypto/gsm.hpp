#pragma once

#include <functional>

#include "akasim/crypto/milenage.hpp"

namespace akasim::crypto {

struct GsmKeys {
  Octets<4> sres;
  Octets<8> kc;

  bool operator==(const GsmKeys&) const = default;
};

// TS 33.102 annex C conversion of a 3G result into a 2G (SRES, Kc) pair.
GsmKeys gsm_convert(const MilenageOutput& m);

// Default A3/A8: run the configured 3G function set and fold (the conversion
// construction). Operators may plug any other pair via GsmAlgorithm.
GsmKeys gsm_derive(const RootKey& root, const Rand128& rand);

using GsmAlgorithm = std::function<GsmKeys(const RootKey&, const Rand128&)>;

inline GsmAlgorithm default_a3a8() {
  return [](const RootKey& r, const Rand128& rand) {
    return gsm_derive(r, rand);
  };
}

}  // namespace akasim::crypto
