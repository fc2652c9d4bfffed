#include "wittforge_app/descriptors.hpp"

#include <cstdio>

namespace wittforge::app {

namespace {

template <class T>
T field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(std::string("field \"") + key + "\" has the wrong type");
    }
}

template <class T>
T field_or(const json& j, const char* key, T fallback)
{
    if (!j.contains(key)) return fallback;
    return field<T>(j, key);
}

using Rows = std::vector<std::vector<std::string>>;

Rows square_rows(const json& j, const char* key, int h)
{
    auto rows = field<Rows>(j, key);
    if (static_cast<int>(rows.size()) != h) throw SchemaError(std::string(key) + ": expected " + std::to_string(h) + " rows");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != h) throw SchemaError(std::string(key) + ": ragged matrix");
    return rows;
}

PMat parse_matrix(const CoeffRing& R, const Rows& rows)
{
    try {
        return pmat_from_strings(R, rows);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("bad ring element: ") + e.what());
    }
}

}  // namespace

json base_to_json(const BaseDVR& b)
{
    return {{"p", b.p}, {"q", b.q()}, {"e", b.e()}, {"f", b.f}, {"eisenstein", b.eisenstein}};
}

BaseDVR base_from_json(const json& j)
{
    BaseDVR b;
    b.p = field<std::int64_t>(j, "p");
    b.f = field_or<int>(j, "f", 1);
    b.eisenstein = field_or<std::vector<std::int64_t>>(j, "eisenstein", {-b.p, 1});
    if (!is_prime_i64(b.p)) throw SchemaError("base: p is not prime");
    if (b.f < 1 || b.f > kMaxFactors) throw SchemaError("base: f out of range");
    if (b.eisenstein.size() < 2 || b.eisenstein.back() != 1) throw SchemaError("base: Eisenstein polynomial must be monic of degree >= 1");
    for (std::size_t i = 0; i + 1 < b.eisenstein.size(); ++i)
        if (b.eisenstein[i] % b.p != 0) throw SchemaError("base: not an Eisenstein polynomial");
    if ((b.eisenstein[0] / b.p) % b.p == 0) throw SchemaError("base: constant term must have valuation exactly 1");
    if (j.contains("e") && field<int>(j, "e") != b.e()) throw SchemaError("base: e disagrees with the Eisenstein degree");
    if (j.contains("q") && field<std::int64_t>(j, "q") != b.q()) throw SchemaError("base: q must equal p^f");
    return b;
}

json chain_ring_to_json(const ChainRing& R)
{
    json j{{"p", R.p()}, {"s", R.s()}, {"level", R.n()}};
    if (R.kind() == ChainRing::Kind::EqualChar) {
        j["kind"] = "equal";
    } else {
        j["kind"] = "mixed";
        if (R.e() > 1) j["eisenstein"] = R.eisenstein();
    }
    return j;
}

ChainRingPtr chain_ring_from_json(const json& j)
{
    auto p = field<std::int64_t>(j, "p");
    auto s = field_or<int>(j, "s", 1);
    auto n = field<int>(j, "level");
    auto kind = field_or<std::string>(j, "kind", "mixed");
    if (!is_prime_i64(p)) throw SchemaError("ring: p is not prime");
    if (s < 1 || n < 1) throw SchemaError("ring: s and level must be positive");
    try {
        if (kind == "equal") return ChainRing::equal_char(p, s, n);
        if (kind != "mixed") throw SchemaError("ring: kind must be \"mixed\" or \"equal\"");
        if (j.contains("eisenstein")) {
            auto eis = field<std::vector<std::int64_t>>(j, "eisenstein");
            if (eis.size() > 2) return ChainRing::ramified(p, s, eis, n);
        }
        return ChainRing::galois(p, s, n);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("ring: ") + e.what());
    }
}

json coeff_ring_to_json(const CoeffRing& R)
{
    auto j = chain_ring_to_json(R.base());
    j["factors"] = R.factors();
    j["step"] = R.step();
    return j;
}

CoeffRingPtr coeff_ring_from_json(const json& j)
{
    auto B = chain_ring_from_json(j);
    auto f = field_or<int>(j, "factors", 1);
    auto step = field_or<int>(j, "step", 1);
    if (f < 1 || f > kMaxFactors) throw SchemaError("ring: factors out of range");
    if (step < 1) throw SchemaError("ring: step must be positive");
    try {
        return std::make_shared<const CoeffRing>(B, f, step);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("ring: ") + e.what());
    }
}

json module_to_json(const DieudonneModule& D)
{
    const auto& R = *D.ring;
    json j{{"coeff", coeff_ring_to_json(R)},
           {"rank", D.h},
           {"F", pmat_to_strings(R, D.F.A)},
           {"twistF", D.F.twist},
           {"V", pmat_to_strings(R, D.V.A)},
           {"twistV", D.V.twist},
           {"level", D.level()},
           {"scalar", R.to_string(D.scalar)}};
    if (D.f() > 1) {
        j["f"] = D.f();
        json comps = json::array();
        for (int i = 0; i < D.f(); ++i) {
            auto strs = [&](const PMat& A) {
                auto C = component_matrix(R, A, i);
                Rows rows(C.rows, std::vector<std::string>(C.cols));
                for (int r = 0; r < C.rows; ++r)
                    for (int c = 0; c < C.cols; ++c) rows[r][c] = R.base().to_string(C(r, c));
                return rows;
            };
            comps.push_back({{"index", i}, {"F", strs(D.F.A)}, {"V", strs(D.V.A)}});
        }
        j["components"] = comps;
    }
    return j;
}

DieudonneModule module_from_json(const json& j)
{
    auto R = coeff_ring_from_json(field<json>(j, "coeff"));
    auto h = field<int>(j, "rank");
    if (h < 1) throw SchemaError("module: rank must be positive");
    if (field_or<int>(j, "twistF", 1) != 1 || field_or<int>(j, "twistV", -1) != -1)
        throw SchemaError("module: F must be sigma-linear and V sigma^{-1}-linear");
    if (j.contains("level") && field<int>(j, "level") != R->level()) throw SchemaError("module: level disagrees with the ring");
    if (j.contains("f") && field<int>(j, "f") != R->factors()) throw SchemaError("module: f disagrees with the ring");
    auto F = parse_matrix(*R, square_rows(j, "F", h));
    auto V = parse_matrix(*R, square_rows(j, "V", h));
    PElem s;
    if (j.contains("scalar")) {
        try {
            s = R->parse(field<std::string>(j, "scalar"));
        } catch (const std::exception& e) {
            throw SchemaError(std::string("module: bad scalar: ") + e.what());
        }
    } else {
        s = (R->base().kind() == ChainRing::Kind::EqualChar || R->step() > 1) ? R->uniformizer() : R->p_elem();
    }
    return make_module(R, F, V, s);
}

json display_to_json(const Display& d, const BaseDVR* O)
{
    const auto& k = d.base();
    json rows = json::array();
    for (int r = 0; r < d.h(); ++r) {
        json row = json::array();
        for (int c = 0; c < d.h(); ++c) {
            json coords = json::array();
            for (const auto& x : d.structural(r, c)) coords.push_back(k.to_string(x));
            row.push_back(coords);
        }
        rows.push_back(row);
    }
    json j{{"base", chain_ring_to_json(k)},
           {"depth", d.depth()},
           {"rankL", d.rank_L},
           {"rankT", d.rank_T},
           {"structural", rows}};
    if (O) j["O"] = base_to_json(*O);
    return j;
}

Display display_from_json(const json& j)
{
    auto k = chain_ring_from_json(field<json>(j, "base"));
    auto m = field<int>(j, "depth");
    auto a = field<int>(j, "rankL");
    auto b = field<int>(j, "rankT");
    if (m < 1 || a < 0 || b < 0 || a + b < 1) throw SchemaError("display: bad depth or ranks");
    WittRingPtr W;
    try {
        W = j.contains("O") ? display_witt_ring(k, base_from_json(j.at("O")), m) : display_witt_ring(k, m);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("display: ") + e.what());
    }
    auto rows = field<std::vector<std::vector<std::vector<std::string>>>>(j, "structural");
    const int h = a + b;
    if (static_cast<int>(rows.size()) != h) throw SchemaError("display: structural matrix has the wrong size");
    WMat S = mat_zero(*W, h, h);
    for (int r = 0; r < h; ++r) {
        if (static_cast<int>(rows[r].size()) != h) throw SchemaError("display: ragged structural matrix");
        for (int c = 0; c < h; ++c) {
            if (static_cast<int>(rows[r][c].size()) != m) throw SchemaError("display: Witt vector of the wrong length");
            for (int i = 0; i < m; ++i) {
                try {
                    S(r, c)[i] = k->parse(rows[r][c][i]);
                } catch (const std::exception& e) {
                    throw SchemaError(std::string("display: bad coordinate: ") + e.what());
                }
            }
        }
    }
    try {
        return make_display(W, a, b, S);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("display: ") + e.what());
    }
}

std::string digest(const json& j)
{
    std::uint64_t hsh = 1469598103934665603ULL;
    for (unsigned char ch : j.dump()) {
        hsh ^= ch;
        hsh *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hsh));
    return buf;
}

}  // namespace wittforge::app
