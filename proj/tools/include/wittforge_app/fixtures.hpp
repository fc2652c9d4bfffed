#ifndef WITTFORGE_APP_FIXTURES_HPP
#define WITTFORGE_APP_FIXTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittforge/dieudonne.hpp"
#include "wittforge/ramified_witt.hpp"

namespace wittforge::app {

struct UnknownFixture : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "lubin-tate h=4 p=3 level=2": a fixture name followed by integer parameters.
struct FixtureRef {
    std::string name;
    std::map<std::string, std::int64_t> params;
    std::int64_t get(const std::string& key, std::int64_t fallback) const;
};

std::vector<std::string> fixture_names();
FixtureRef parse_fixture_ref(const std::string& text);

// Coefficients from p, level, f (number of O-factors) and equal=1 for k[[pi]].
// A ramified scenario base replaces W(k) by W_O(k).
CoeffRingPtr fixture_ring(const FixtureRef& ref, const std::optional<BaseDVR>& base = std::nullopt);
DieudonneModule build_fixture(const FixtureRef& ref, const std::optional<BaseDVR>& base = std::nullopt);

}  // namespace wittforge::app

#endif
