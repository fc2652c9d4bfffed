#ifndef WITTFORGE_APP_DESCRIPTORS_HPP
#define WITTFORGE_APP_DESCRIPTORS_HPP

#include <stdexcept>

#include "json.hpp"
#include "wittforge/display.hpp"

namespace wittforge::app {

using nlohmann::json;

// Malformed scenario or descriptor input.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json base_to_json(const BaseDVR& b);
BaseDVR base_from_json(const json& j);

json chain_ring_to_json(const ChainRing& R);
ChainRingPtr chain_ring_from_json(const json& j);

json coeff_ring_to_json(const CoeffRing& R);
CoeffRingPtr coeff_ring_from_json(const json& j);

// {"coeff", "rank", "F", "twistF", "V", "twistV", "level"} plus
// {"f", "components"} when the ring has several factors.
json module_to_json(const DieudonneModule& D);
DieudonneModule module_from_json(const json& j);

// {"base", "depth", "rankL", "rankT", "structural"}; "O" for ramified Witt rings.
json display_to_json(const Display& d, const BaseDVR* O = nullptr);
Display display_from_json(const json& j);

// FNV-1a over the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace wittforge::app

#endif
