#include "akasim/crypto/serving_network.hpp"

#include <algorithm>

#include "akasim/errors.hpp"

namespace akasim::crypto {

namespace {

void require_digits(std::string_view s, std::string_view what) {
  if (!std::all_of(s.begin(), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw MalformedInputError(std::string(what) + " must be decimal digits");
  }
}

}  // namespace

ServingNetworkId ServingNetworkId::snid_from_plmn(std::string_view mcc,
                                                  std::string_view mnc) {
  if (mcc.size() != 3 || (mnc.size() != 2 && mnc.size() != 3)) {
    throw MalformedInputError("snid wants 3-digit mcc and 2/3-digit mnc");
  }
  require_digits(mcc, "mcc");
  require_digits(mnc, "mnc");
  // Standard PLMN BCD packing; filler nibble 0xf for 2-digit MNC.
  auto d = [](char c) { return static_cast<uint8_t>(c - '0'); };
  uint8_t mnc3 = mnc.size() == 3 ? d(mnc[2]) : 0x0f;
  Bytes packed = {
      static_cast<uint8_t>(d(mcc[1]) << 4 | d(mcc[0])),
      static_cast<uint8_t>(mnc3 << 4 | d(mcc[2])),
      static_cast<uint8_t>(d(mnc[1]) << 4 | d(mnc[0])),
  };
  return ServingNetworkId(Kind::snid_4g, std::move(packed));
}

ServingNetworkId ServingNetworkId::snid_from_octets(const Octets<3>& packed) {
  return ServingNetworkId(Kind::snid_4g, Bytes(packed.begin(), packed.end()));
}

ServingNetworkId ServingNetworkId::ani(std::string_view name) {
  if (name.empty()) throw MalformedInputError("empty access network identity");
  return ServingNetworkId(Kind::ani, ascii_bytes(name));
}

ServingNetworkId ServingNetworkId::snn(std::string_view name) {
  if (name.size() < 4 || name.substr(0, 2) != "5G" ||
      (name[2] != ':' && name[2] != ';')) {
    throw MalformedInputError(
        "serving network name must start with the 5G service code and a "
        "separator");
  }
  return ServingNetworkId(Kind::snn, ascii_bytes(name));
}

Octets<3> ServingNetworkId::snid_octets() const {
  if (kind_ != Kind::snid_4g) {
    throw DomainError("not a 4G serving network identity");
  }
  return to_octets<3>(value_);
}

std::string ServingNetworkId::text() const {
  if (kind_ == Kind::snid_4g) return to_hex(value_);
  return ascii_string(value_);
}

std::string_view kind_name(ServingNetworkId::Kind kind) {
  switch (kind) {
    case ServingNetworkId::Kind::snid_4g: return "snid";
    case ServingNetworkId::Kind::ani: return "ani";
    case ServingNetworkId::Kind::snn: return "snn";
  }
  return "?";
}

}  // namespace akasim::crypto
