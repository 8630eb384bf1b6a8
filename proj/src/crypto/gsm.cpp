#include "akasim/crypto/gsm.hpp"

namespace akasim::crypto {

GsmKeys gsm_convert(const MilenageOutput& m) {
  GsmKeys out;
  // c2: fold the (zero-padded) response into 32 bits.
  for (size_t i = 0; i < 4; ++i) out.sres[i] = m.res[i] ^ m.res[i + 4];
  // c3: Kc = CK1 xor CK2 xor IK1 xor IK2.
  for (size_t i = 0; i < 8; ++i) {
    out.kc[i] = m.ck[i] ^ m.ck[i + 8] ^ m.ik[i] ^ m.ik[i + 8];
  }
  return out;
}

GsmKeys gsm_derive(const RootKey& root, const Rand128& rand) {
  return gsm_convert(milenage(root, rand, Sqn48{}, Amf16{}));
}

}  // namespace akasim::crypto
