#include "akasim/crypto/milenage.hpp"

#include "akasim/crypto/digest.hpp"

namespace akasim::crypto {

namespace {

// Rotation amounts r1..r5 in bytes and constants c1..c5 per TS 35.206.
Octets<16> rotl(const Octets<16>& in, size_t nbytes) {
  Octets<16> out;
  for (size_t i = 0; i < 16; ++i) out[i] = in[(i + nbytes) % 16];
  return out;
}

}  // namespace

MilenageOutput milenage(const RootKey& root, const Rand128& rand,
                        const Sqn48& sqn, const Amf16& amf) {
  const Key128& opc = root.opc;
  Octets<16> temp = aes128_encrypt_block(root.k, xor_octets(rand, opc));

  Octets<16> in1;
  std::copy(sqn.begin(), sqn.end(), in1.begin());
  std::copy(amf.begin(), amf.end(), in1.begin() + 6);
  std::copy(sqn.begin(), sqn.end(), in1.begin() + 8);
  std::copy(amf.begin(), amf.end(), in1.begin() + 14);

  MilenageOutput out;

  // f1/f1*: r1 = 64 bits, c1 = 0.
  Octets<16> x = xor_octets(temp, rotl(xor_octets(in1, opc), 8));
  Octets<16> out1 = xor_octets(aes128_encrypt_block(root.k, x), opc);
  std::copy(out1.begin(), out1.begin() + 8, out.mac_a.begin());
  std::copy(out1.begin() + 8, out1.end(), out.mac_s.begin());

  // f2/f5: r2 = 0, c2 = 1.
  x = xor_octets(temp, opc);
  x[15] ^= 0x01;
  Octets<16> out2 = xor_octets(aes128_encrypt_block(root.k, x), opc);
  std::copy(out2.begin() + 8, out2.end(), out.res.begin());
  std::copy(out2.begin(), out2.begin() + 6, out.ak.begin());

  // f3: r3 = 32 bits, c3 = 2.
  x = rotl(xor_octets(temp, opc), 4);
  x[15] ^= 0x02;
  out.ck = xor_octets(aes128_encrypt_block(root.k, x), opc);

  // f4: r4 = 64 bits, c4 = 4.
  x = rotl(xor_octets(temp, opc), 8);
  x[15] ^= 0x04;
  out.ik = xor_octets(aes128_encrypt_block(root.k, x), opc);

  // f5*: r5 = 96 bits, c5 = 8.
  x = rotl(xor_octets(temp, opc), 12);
  x[15] ^= 0x08;
  Octets<16> out5 = xor_octets(aes128_encrypt_block(root.k, x), opc);
  std::copy(out5.begin(), out5.begin() + 6, out.ak_s.begin());

  return out;
}

}  // namespace akasim::crypto
