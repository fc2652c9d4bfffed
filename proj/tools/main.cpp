#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wittforge_app/fixtures.hpp"
#include "wittforge_app/runner.hpp"

using namespace wittforge;
using namespace wittforge::app;

namespace {

int cmd_run(const std::string& path, const std::vector<std::string>& suites, std::optional<std::uint64_t> seed,
            std::optional<long long> budget, const std::string& format, const std::string& out)
{
    Scenario s = path.empty() ? Scenario{} : load_scenario(path);
    if (path.empty()) s.name = "command-line";
    if (!suites.empty()) {
        s.suites = suites;
        json probe{{"suites", suites}};
        parse_scenario(probe);  // rejects unknown suite names
    }
    if (seed) s.seed = *seed;
    if (budget) {
        if (*budget < 0) throw SchemaError("--budget-ms must be non-negative");
        s.budget_ms = budget;
    }
    auto result = run_scenario(s);
    const auto text = report_json(result);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw SchemaError("cannot write " + out);
        f << text;
    }
    if (format == "table")
        std::cout << report_table(result);
    else if (out.empty())
        std::cout << text;
    return result.exit_code();
}

int cmd_fixtures_dump(const std::vector<std::string>& words)
{
    std::string ref;
    for (const auto& w : words) ref += (ref.empty() ? "" : " ") + w;
    auto D = build_fixture(parse_fixture_ref(ref));
    std::cout << module_to_json(D).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Witt vectors, Dieudonne modules, displays and their exterior powers"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run verification suites and write a report");
    std::string scenario, format = "json", out;
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    long long budget = 0;
    run->add_option("--scenario", scenario, "scenario JSON file");
    auto* suite_opt = run->add_option("--suite", suites, "suite to run (repeatable); replaces the scenario's list");
    auto* seed_opt = run->add_option("--seed", seed, "seed for randomized checks");
    auto* budget_opt = run->add_option("--budget-ms", budget, "wall-clock budget in milliseconds");
    run->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "table"}));
    run->add_option("--out", out, "write the JSON report here");
    (void)suite_opt;

    auto* fx = app.add_subcommand("fixtures", "list fixtures or dump a module descriptor");
    fx->require_subcommand(1);
    auto* fx_list = fx->add_subcommand("list", "list fixture names");
    auto* fx_dump = fx->add_subcommand("dump", "print the descriptor of a fixture, e.g. \"lubin-tate h=3 p=3 level=2\"");
    std::vector<std::string> words;
    fx_dump->add_option("fixture", words, "fixture name and key=value parameters")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            return cmd_run(scenario, suites, seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt,
                           budget_opt->count() ? std::optional<long long>(budget) : std::nullopt, format, out);
        }
        if (fx_list->parsed()) {
            std::cout << json(fixture_names()).dump(2) << "\n";
            return 0;
        }
        return cmd_fixtures_dump(words);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
