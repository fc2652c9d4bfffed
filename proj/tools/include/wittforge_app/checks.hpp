#ifndef WITTFORGE_APP_CHECKS_HPP
#define WITTFORGE_APP_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittforge/ramified_witt.hpp"

namespace wittforge::app {

using nlohmann::json;

struct Record {
    std::string check_id;
    std::string paper_ref;  // name of the verified statement, or "plumbing"
    json inputs;
    json expected;
    json computed;
    bool pass = false;
};
Record make_record(std::string id, std::string ref, json inputs, json expected, json computed);
json record_to_json(const Record& r);

struct CheckContext {
    std::uint64_t seed = 1;
    std::optional<BaseDVR> base;  // replaces the default ramified bases
};

// A batch of checks.  criterion is the acceptance criterion the batch
// belongs to, 0 for checks that only run inside suites.
struct CheckGroup {
    int criterion = 0;
    std::string suite;
    std::string name;
    std::function<std::vector<Record>(const CheckContext&)> run;
};
const std::vector<CheckGroup>& check_groups();

// Every suite accepted by the runner, "examples" included.
std::vector<std::string> suite_names();

}  // namespace wittforge::app

#endif
