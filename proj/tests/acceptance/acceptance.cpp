// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <iostream>
#include <map>

#include "wittforge_app/checks.hpp"

using namespace wittforge::app;

int main()
{
    // Runtime ceilings in ms; criterion 5 is per built table, i.e. per record.
    const std::map<int, long long> limit{{1, 10000}, {2, 5000}, {3, 10000}, {9, 60000}};
    const long long per_table = 30000;
    const std::map<int, std::string> title{
        {1, "order exponent n*C(h,j)"},
        {2, "display exterior height and tangent rank"},
        {3, "dimension C(h-1,j-1)"},
        {4, "Phi Upsilon = p and F/V diagrams"},
        {5, "ghost identities of structure tables"},
        {6, "FV = p and F_pi V_pi = pi"},
        {7, "mu ghost compatibility and Teichmueller lifts"},
        {8, "delta involution and telescoping identity"},
        {9, "universal property of the exterior square"},
        {10, "H/D and chi/Xi roundtrips"},
        {11, "tower exactness"},
        {12, "display exterior powers under base change"},
    };
    CheckContext ctx;
    bool all = true;
    for (int c = 1; c <= 12; ++c) {
        int total = 0, passed = 0;
        std::string first_failure, error;
        bool slow = false;
        long long ms = 0;
        for (const auto& g : check_groups()) {
            if (g.criterion != c) continue;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                for (const auto& r : g.run(ctx)) {
                    ++total;
                    if (r.pass)
                        ++passed;
                    else if (first_failure.empty())
                        first_failure = r.check_id + " expected " + r.expected.dump() + " computed " + r.computed.dump();
                }
            } catch (const std::exception& e) {
                error = g.name + ": " + e.what();
            }
            const auto dt =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            ms += dt;
            if (c == 5 && total > 0 && dt > per_table * total) slow = true;
        }
        if (limit.count(c) && ms > limit.at(c)) slow = true;
        const bool ok = total > 0 && passed == total && error.empty() && !slow;
        all = all && ok;
        std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << "  " << title.at(c) << "  (" << passed << "/"
                  << total << " checks, " << ms << " ms)";
        if (!error.empty()) std::cout << "  error: " << error;
        if (!first_failure.empty()) std::cout << "  first failure: " << first_failure;
        if (slow) std::cout << "  over the time limit";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
