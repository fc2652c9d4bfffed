#include "wittforge_app/fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wittforge::app {

namespace {
const std::vector<std::string> kNames{"etale-h", "lubin-tate", "multiplicative-h", "supersingular-e-curve"};
const std::set<std::string> kKeys{"p", "h", "level", "f", "equal"};
}  // namespace

std::int64_t FixtureRef::get(const std::string& key, std::int64_t fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<std::string> fixture_names() { return kNames; }

FixtureRef parse_fixture_ref(const std::string& text)
{
    std::istringstream in(text);
    FixtureRef ref;
    if (!(in >> ref.name)) throw UnknownFixture("empty fixture reference");
    if (std::find(kNames.begin(), kNames.end(), ref.name) == kNames.end())
        throw UnknownFixture("unknown fixture \"" + ref.name + "\"");
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw UnknownFixture("expected key=value, got \"" + tok + "\"");
        auto key = tok.substr(0, eq);
        if (!kKeys.count(key)) throw UnknownFixture("unknown fixture parameter \"" + key + "\"");
        try {
            std::size_t used = 0;
            auto v = std::stoll(tok.substr(eq + 1), &used);
            if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
            ref.params[key] = v;
        } catch (const std::exception&) {
            throw UnknownFixture("bad value in \"" + tok + "\"");
        }
    }
    return ref;
}

CoeffRingPtr fixture_ring(const FixtureRef& ref, const std::optional<BaseDVR>& base)
{
    const std::int64_t p = ref.get("p", base ? base->p : 3);
    const int level = static_cast<int>(ref.get("level", 1));
    const int f = static_cast<int>(ref.get("f", base ? base->f : 1));
    const bool equal = ref.get("equal", 0) != 0;
    if (!is_prime_i64(p)) throw UnknownFixture("p must be prime");
    if (level < 1 || level > 8) throw UnknownFixture("level must be in 1..8");
    if (f < 1 || f > kMaxFactors) throw UnknownFixture("f must be in 1..4");
    if (base && base->p != p) throw UnknownFixture("fixture prime differs from the scenario base");
    if (base && base->f != f) throw UnknownFixture("f must equal the residue degree of the scenario base");
    ChainRingPtr B;
    if (equal)
        B = ChainRing::equal_char(p, f, level);
    else if (base && base->e() > 1)
        B = ChainRing::ramified(p, f, base->eisenstein, level);
    else
        B = ChainRing::galois(p, f, level);
    return std::make_shared<const CoeffRing>(B, f, 1);
}

DieudonneModule build_fixture(const FixtureRef& ref, const std::optional<BaseDVR>& base)
{
    auto R = fixture_ring(ref, base);
    const int h = static_cast<int>(ref.get("h", ref.name == "lubin-tate" || ref.name == "supersingular-e-curve" ? 2 : 1));
    if (h < 1 || h > 8) throw UnknownFixture("h must be in 1..8");
    if (ref.name == "lubin-tate") return lubin_tate_module(R, h);
    if (ref.name == "supersingular-e-curve") {
        if (h != 2) throw UnknownFixture("supersingular-e-curve has height 2");
        return supersingular_module(R);
    }
    if (ref.name == "etale-h") return etale_module(R, h);
    return multiplicative_module(R, h);
}

}  // namespace wittforge::app
