#pragma once

#include <functional>

#include "akasim/bytes.hpp"

namespace akasim::crypto {

// Long-term subscription secret: the root key K and the per-subscriber
// operator constant OPc, both held only by the home network store and the
// USIM. There is deliberately no serializer for this type; messages and
// transcripts can never carry it.
struct RootKey {
  Key128 k;
  Key128 opc;

  bool operator==(const RootKey&) const = default;
};

// All seven MILENAGE outputs from one call. res/mac_a/mac_s are the f1/f2
// family (64-bit MACs and response), ck/ik/ak/ak_s the f3/f4/f5/f5* keys.
struct MilenageOutput {
  Octets<8> res;
  Key128 ck;
  Key128 ik;
  Octets<6> ak;
  Octets<8> mac_a;
  Octets<8> mac_s;
  Octets<6> ak_s;

  bool operator==(const MilenageOutput&) const = default;
};

// TS 35.206 algorithm set computed with AES-128 as the kernel. Pure:
// identical inputs give bitwise-identical outputs.
MilenageOutput milenage(const RootKey& root, const Rand128& rand,
                        const Sqn48& sqn, const Amf16& amf);

// Slot for swapping the f1..f5* algorithm set (e.g. for a TUAK drop-in).
// Everything downstream consumes the functions through this signature.
using AuthFunctionSet = std::function<MilenageOutput(
    const RootKey&, const Rand128&, const Sqn48&, const Amf16&)>;

inline AuthFunctionSet default_f_set() {
  return [](const RootKey& r, const Rand128& rand, const Sqn48& sqn,
            const Amf16& amf) { return milenage(r, rand, sqn, amf); };
}

}  // namespace akasim::crypto
