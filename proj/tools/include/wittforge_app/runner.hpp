#ifndef WITTFORGE_APP_RUNNER_HPP
#define WITTFORGE_APP_RUNNER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wittforge_app/checks.hpp"
#include "wittforge_app/descriptors.hpp"

namespace wittforge::app {

struct ScenarioObject {
    std::string id;
    json descriptor;  // what the scenario said, for digests
    std::variant<DieudonneModule, Display> value;
};

struct ScenarioCheck {
    std::string id;
    std::string object;
    std::string kind;  // "exterior" or "validate"
    int r = 0;
    json expect;       // may be empty: formula values are used
};

struct Scenario {
    std::string name = "unnamed";
    std::optional<BaseDVR> base;
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    std::optional<long long> budget_ms;
    std::vector<ScenarioObject> objects;
    std::vector<ScenarioCheck> checks;
};

// Throws SchemaError or UnknownFixture.
Scenario parse_scenario(const json& j);
Scenario load_scenario(const std::string& path);

struct RunResult {
    std::string scenario;
    std::uint64_t seed = 0;
    std::vector<std::string> suites;
    std::vector<Record> records;  // sorted by check_id
    bool budget_exceeded = false;
    long long wall_ms = 0;

    int passed() const;
    int exit_code() const;  // 0 pass, 1 failures, 3 budget
};
RunResult run_scenario(const Scenario& s);

// Byte-deterministic for a fixed scenario and seed (no timings).
std::string report_json(const RunResult& r);
std::string report_table(const RunResult& r);

}  // namespace wittforge::app

#endif
