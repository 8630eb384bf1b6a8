#pragma once

#include <string>
#include <string_view>

#include "akasim/bytes.hpp"

namespace akasim::crypto {

// The per-generation serving-network binding input: a packed 24-bit SNID for
// EPS, a variable-length Access Network Identity for trusted non-3GPP EAP,
// or a Serving Network Name (which must carry the "5G" service code) for 5G.
class ServingNetworkId {
 public:
  enum class Kind { snid_4g, ani, snn };

  static ServingNetworkId snid_from_plmn(std::string_view mcc,
                                         std::string_view mnc);
  static ServingNetworkId snid_from_octets(const Octets<3>& packed);
  static ServingNetworkId ani(std::string_view name);
  static ServingNetworkId snn(std::string_view name);  // requires "5G:" prefix

  Kind kind() const { return kind_; }
  const Bytes& value() const { return value_; }
  Octets<3> snid_octets() const;  // snid_4g only
  std::string text() const;       // display form

  bool operator==(const ServingNetworkId&) const = default;

 private:
  ServingNetworkId(Kind kind, Bytes value)
      : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Bytes value_;
};

std::string_view kind_name(ServingNetworkId::Kind kind);

}  // namespace akasim::crypto
