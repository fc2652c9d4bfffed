#include "wittforge/matrix.hpp"

namespace wittforge {

std::vector<std::vector<int>> wedge_basis(int h, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > h) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == h - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int wedge_index(int h, const std::vector<int>& t)
{
    // Lexicographic rank of a strictly increasing tuple.
    const int r = static_cast<int>(t.size());
    long long idx = 0;
    int prev = -1;
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < t[i]; ++v) idx += binomial(h - v - 1, r - i - 1);
        prev = t[i];
    }
    return static_cast<int>(idx);
}

}  // namespace wittforge
