#include "wittforge_app/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "wittforge_app/fixtures.hpp"

namespace wittforge::app {

namespace {

using Clock = std::chrono::steady_clock;

const std::set<std::string> kScenarioKeys{"name", "base", "suites", "seed", "budget_ms", "objects", "checks"};

template <class T>
T get_as(const json& j, const char* key, const char* where)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(std::string(where) + ": field \"" + key + "\" is missing or has the wrong type");
    }
}

ScenarioObject parse_object(const json& j, const std::optional<BaseDVR>& base)
{
    if (!j.is_object()) throw SchemaError("objects: entries must be objects");
    ScenarioObject o;
    o.id = get_as<std::string>(j, "id", "object");
    const int kinds = static_cast<int>(j.contains("fixture")) + static_cast<int>(j.contains("module")) +
                      static_cast<int>(j.contains("display"));
    if (kinds != 1) throw SchemaError("object " + o.id + ": give exactly one of fixture, module, display");
    o.descriptor = j;
    if (j.contains("fixture")) {
        auto ref = parse_fixture_ref(get_as<std::string>(j, "fixture", "object"));
        auto D = build_fixture(ref, base);
        const auto as = j.value("as", std::string("module"));
        if (as == "module")
            o.value = D;
        else if (as == "display")
            o.value = from_dieudonne(D).display;
        else
            throw SchemaError("object " + o.id + ": \"as\" must be module or display");
    } else if (j.contains("module")) {
        o.value = module_from_json(j.at("module"));
    } else {
        o.value = display_from_json(j.at("display"));
    }
    return o;
}

int object_height(const ScenarioObject& o)
{
    if (auto* D = std::get_if<DieudonneModule>(&o.value)) return D->h;
    return std::get<Display>(o.value).h();
}

Record run_example(const ScenarioObject& o, const ScenarioCheck& c)
{
    json inputs{{"object", o.descriptor}, {"kind", c.kind}, {"r", c.r}};
    const std::string id = "examples." + c.id;
    if (auto* Dp = std::get_if<DieudonneModule>(&o.value)) {
        const auto& D = *Dp;
        if (c.kind == "validate")
            return make_record(id, "plumbing", inputs, json{{"valid", true}}, json{{"valid", validate(D).ok}});
        json want{{"height", binomial(D.h, c.r)}, {"order_exponent", D.level() * binomial(D.h, c.r)}};
        auto E = exterior_power(D, c.r);
        const int dimD = dimension(D).value;
        if (dimD == 1) want["dimension"] = binomial(D.h - 1, c.r - 1);
        for (auto it = c.expect.begin(); it != c.expect.end(); ++it) want[it.key()] = it.value();
        json got;
        if (want.contains("height")) got["height"] = E.module.h;
        if (want.contains("order_exponent")) got["order_exponent"] = order_exponent(D, c.r);
        if (want.contains("dimension")) got["dimension"] = dimension(E.module).value;
        if (want.contains("valid")) got["valid"] = validate(E.module).ok;
        return make_record(id, "height and dimension of exterior powers", inputs, want, got);
    }
    const auto& d = std::get<Display>(o.value);
    if (c.kind == "validate")
        return make_record(id, "plumbing", inputs, json{{"valid", true}}, json{{"valid", validate(d).ok}});
    json want{{"height", binomial(d.h(), c.r)}};
    if (d.rank_T == 1) want["rank_T"] = binomial(d.h() - 1, c.r - 1);
    for (auto it = c.expect.begin(); it != c.expect.end(); ++it) want[it.key()] = it.value();
    auto E = exterior_power(d, c.r);
    json got;
    if (want.contains("height")) got["height"] = E.h();
    if (want.contains("rank_T")) got["rank_T"] = E.rank_T;
    if (want.contains("valid")) got["valid"] = validate(E).ok;
    return make_record(id, "height and tangent rank of display exterior powers", inputs, want, got);
}

ScenarioCheck parse_check(const json& j, const std::vector<ScenarioObject>& objects, std::size_t index)
{
    if (!j.is_object()) throw SchemaError("checks: entries must be objects");
    ScenarioCheck c;
    c.object = get_as<std::string>(j, "object", "check");
    c.kind = get_as<std::string>(j, "kind", "check");
    auto it = std::find_if(objects.begin(), objects.end(), [&](const ScenarioObject& o) { return o.id == c.object; });
    if (it == objects.end()) throw SchemaError("check refers to unknown object \"" + c.object + "\"");
    if (c.kind == "exterior") {
        c.r = get_as<int>(j, "r", "check");
        if (c.r < 1 || c.r > object_height(*it)) throw SchemaError("check: r out of range for " + c.object);
    } else if (c.kind != "validate") {
        throw SchemaError("check: unknown kind \"" + c.kind + "\"");
    }
    static const std::set<std::string> allowed{"height", "dimension", "order_exponent", "rank_T", "valid"};
    if (j.contains("expect")) {
        c.expect = j.at("expect");
        if (!c.expect.is_object()) throw SchemaError("check: expect must be an object");
        for (auto e = c.expect.begin(); e != c.expect.end(); ++e) {
            if (!allowed.count(e.key())) throw SchemaError("check: unknown expectation \"" + e.key() + "\"");
            if (!e.value().is_number_integer() && !e.value().is_boolean())
                throw SchemaError("check: expectations are integers or booleans");
        }
    }
    if (c.kind == "exterior" && !c.expect.contains("dimension")) {
        if (auto* D = std::get_if<DieudonneModule>(&it->value); D && dimension(*D).value != 1)
            throw SchemaError("check: no dimension formula for " + c.object + "; give expect.dimension");
    }
    c.id = j.value("id", c.object + "." + c.kind + (c.kind == "exterior" ? ".r" + std::to_string(c.r) : "") + "." +
                             std::to_string(index));
    return c;
}

}  // namespace

Scenario parse_scenario(const json& j)
{
    if (!j.is_object()) throw SchemaError("scenario must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!kScenarioKeys.count(it.key())) throw SchemaError("unknown scenario field \"" + it.key() + "\"");
    Scenario s;
    if (j.contains("name")) s.name = get_as<std::string>(j, "name", "scenario");
    if (j.contains("base")) s.base = base_from_json(j.at("base"));
    if (j.contains("suites")) s.suites = get_as<std::vector<std::string>>(j, "suites", "scenario");
    if (j.contains("seed")) s.seed = get_as<std::uint64_t>(j, "seed", "scenario");
    if (j.contains("budget_ms")) {
        s.budget_ms = get_as<long long>(j, "budget_ms", "scenario");
        if (*s.budget_ms < 0) throw SchemaError("budget_ms must be non-negative");
    }
    const auto known = suite_names();
    for (const auto& name : s.suites)
        if (std::find(known.begin(), known.end(), name) == known.end()) throw SchemaError("unknown suite \"" + name + "\"");
    std::set<std::string> ids;
    if (j.contains("objects")) {
        if (!j.at("objects").is_array()) throw SchemaError("objects must be an array");
        for (const auto& o : j.at("objects")) {
            s.objects.push_back(parse_object(o, s.base));
            if (!ids.insert(s.objects.back().id).second) throw SchemaError("duplicate object id " + s.objects.back().id);
        }
    }
    if (j.contains("checks")) {
        if (!j.at("checks").is_array()) throw SchemaError("checks must be an array");
        std::set<std::string> check_ids;
        for (std::size_t i = 0; i < j.at("checks").size(); ++i) {
            s.checks.push_back(parse_check(j.at("checks")[i], s.objects, i));
            if (!check_ids.insert(s.checks.back().id).second) throw SchemaError("duplicate check id " + s.checks.back().id);
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read scenario " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("scenario is not valid JSON: ") + e.what());
    }
    return parse_scenario(j);
}

int RunResult::passed() const
{
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

int RunResult::exit_code() const
{
    if (budget_exceeded) return 3;
    return passed() == static_cast<int>(records.size()) ? 0 : 1;
}

RunResult run_scenario(const Scenario& s)
{
    RunResult out;
    out.scenario = s.name;
    out.seed = s.seed;
    out.suites = s.suites;
    const auto start = Clock::now();
    auto elapsed = [&] { return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count(); };
    auto over = [&] { return s.budget_ms && elapsed() >= *s.budget_ms; };
    const std::set<std::string> wanted(s.suites.begin(), s.suites.end());
    CheckContext ctx{s.seed, s.base};
    for (const auto& g : check_groups()) {
        if (!wanted.count(g.suite)) continue;
        if (over()) {
            out.budget_exceeded = true;
            break;
        }
        auto recs = g.run(ctx);
        out.records.insert(out.records.end(), recs.begin(), recs.end());
    }
    if (wanted.count("examples") && !out.budget_exceeded) {
        for (const auto& c : s.checks) {
            if (over()) {
                out.budget_exceeded = true;
                break;
            }
            const auto& o = *std::find_if(s.objects.begin(), s.objects.end(), [&](const ScenarioObject& x) { return x.id == c.object; });
            out.records.push_back(run_example(o, c));
        }
    }
    if (over()) out.budget_exceeded = true;
    std::sort(out.records.begin(), out.records.end(), [](const Record& a, const Record& b) { return a.check_id < b.check_id; });
    out.wall_ms = elapsed();
    return out;
}

std::string report_json(const RunResult& r)
{
    json recs = json::array();
    for (const auto& rec : r.records) recs.push_back(record_to_json(rec));
    const int total = static_cast<int>(r.records.size());
    json j{{"scenario", r.scenario},
           {"seed", r.seed},
           {"suites", r.suites},
           {"records", recs},
           {"summary", {{"total", total}, {"passed", r.passed()}, {"failed", total - r.passed()}, {"budget_exceeded", r.budget_exceeded}}}};
    return j.dump(2) + "\n";
}

std::string report_table(const RunResult& r)
{
    std::ostringstream out;
    out << "scenario " << r.scenario << "  seed " << r.seed << "\n";
    std::size_t width = 8;
    for (const auto& rec : r.records) width = std::max(width, rec.check_id.size());
    for (const auto& rec : r.records) {
        out << (rec.pass ? "PASS  " : "FAIL  ") << rec.check_id << std::string(width - rec.check_id.size() + 2, ' ')
            << rec.paper_ref << "\n";
        if (!rec.pass)
            out << "      expected " << rec.expected.dump() << "\n      computed " << rec.computed.dump() << "\n      inputs "
                << digest(rec.inputs) << "\n";
    }
    const int total = static_cast<int>(r.records.size());
    out << r.passed() << "/" << total << " checks passed, " << (total - r.passed()) << " failed";
    if (r.budget_exceeded) out << ", budget exceeded";
    out << ", wall clock " << r.wall_ms << " ms\n";
    return out.str();
}

}  // namespace wittforge::app
