#pragma once

#include <optional>
#include <span>
#include <utility>

#include "akasim/crypto/serving_network.hpp"

namespace akasim::crypto {

// 4G anchor key, bound to the 24-bit serving network identity.
Key256 derive_kasme(const Key128& ck, const Key128& ik,
                    const ServingNetworkId& snid, const Sqn48& sqn_xor_ak);

// EC-GSM-IoT 128-bit cipher/integrity key pair from a 3G quintet.
std::pair<Key128, Key128> kc128_ki128(const Key128& ck, const Key128& ik);

// EAP-AKA' transformed keys; net_name is the ANI (4G trusted non-3GPP) or
// the SNN (5G). CK' is the most significant half of the KDF output.
std::pair<Key128, Key128> derive_ck_ik_prime(const Key128& ck,
                                             const Key128& ik,
                                             const ServingNetworkId& net_name,
                                             const Sqn48& sqn_xor_ak);

// 5G response binding: RES* commits to the SNN, RAND and RES. The result is
// the low half of the 256-bit KDF output.
Key128 derive_res_star(const Key128& ck, const Key128& ik,
                       const ServingNetworkId& snn, const Rand128& rand,
                       std::span<const uint8_t> res);

// HRES*/HXRES*: the high 128 bits of SHA-256(RAND || RES*).
Key128 derive_hres_star(const Rand128& rand, const Key128& res_star);

enum class FiveGMode { fiveg_aka, fiveg_eap_aka_prime };

struct FiveGKeySet {
  Key256 kausf;
  Key256 kseaf;
  Key256 kamf;

  bool operator==(const FiveGKeySet&) const = default;
};

// The 5G anchor chain. In fiveg_aka mode KAUSF comes from CK||IK bound to
// the SNN and SQN^AK; in EAP-AKA' mode it is the high 256 bits of the EMSK
// (which must be supplied). KSEAF re-binds the SNN, KAMF binds SUPI and ABBA.
FiveGKeySet derive_kausf_kseaf_kamf(const Key128& ck, const Key128& ik,
                                    const ServingNetworkId& snn,
                                    const Sqn48& sqn_xor_ak,
                                    std::span<const uint8_t> supi,
                                    std::span<const uint8_t> abba,
                                    FiveGMode mode,
                                    const std::optional<Key512>& emsk);

Key256 derive_kseaf(const Key256& kausf, const ServingNetworkId& snn);
Key256 derive_kamf(const Key256& kseaf, std::span<const uint8_t> supi,
                   std::span<const uint8_t> abba);

}  // namespace akasim::crypto
