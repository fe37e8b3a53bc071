#include "lextri/equivelar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lextri {

std::vector<std::pair<int, int>> admissible_pairs(int chi) {
    if (chi == 0)
        throw std::invalid_argument("chi 0 is the infinite family (n, 6), n >= 7");
    std::vector<std::pair<int, int>> out;
    const int target = 6 * std::abs(chi);
    for (int n = 1; n <= target; ++n) {
        if (target % n != 0) continue;
        const int q = 6 - 6 * chi / n;
        if (q < 3) continue;
        if (n < q + 1) continue;
        out.push_back({n, q});
    }
    return out;  // ascending n by construction
}

std::vector<std::pair<int, int>> torus_like_pairs(int n_min, int n_max) {
    std::vector<std::pair<int, int>> out;
    for (int n = std::max(n_min, 7); n <= n_max; ++n) out.push_back({n, 6});
    return out;
}

TypeTriple dual_type(const TypeTriple& t) {
    if ((t.n * t.q) % t.p != 0) throw std::invalid_argument("non-integral dual");
    return TypeTriple{t.q, t.p, t.n * t.q / t.p};
}

std::vector<TypeTriple> admissible_triples(int chi) {
    if (chi >= 0) throw std::invalid_argument("chi must be negative");
    std::set<TypeTriple> found;
    const int twoabs = -2 * chi;
    for (int k = 3; k <= twoabs; ++k) {
        if (twoabs % k != 0) continue;
        for (int l = 1; 2 * l < k; ++l) {
            if (std::gcd(k, l) != 1) continue;
            for (int a = 1;; ++a) {
                const long long n = static_cast<long long>(k) * a;
                const long long p = static_cast<long long>(l) * a;
                if (p * n > 6 * n + 2 * p * std::abs(chi) && p >= 3) break;
                if (p < 3) continue;
                const long long num = 2 * p * (n - chi);
                const long long den = (p - 2) * n;
                if (num % den != 0) continue;
                const long long q = num / den;
                if (q < 3 || n < q + 1) continue;
                if ((n * q) % p != 0) continue;  // face count must be integral
                found.insert(TypeTriple{static_cast<int>(p), static_cast<int>(q),
                                        static_cast<int>(n)});
            }
        }
    }
    // primal types (p <= q) by (p, n), dual right after when distinct
    std::vector<TypeTriple> primal(found.begin(), found.end());
    primal.erase(std::remove_if(primal.begin(), primal.end(),
                                [](const TypeTriple& t) { return t.p > t.q; }),
                 primal.end());
    std::sort(primal.begin(), primal.end(), [](const TypeTriple& a, const TypeTriple& b) {
        return a.p != b.p ? a.p < b.p : a.n < b.n;
    });
    std::vector<TypeTriple> out;
    for (const TypeTriple& t : primal) {
        out.push_back(t);
        TypeTriple d = dual_type(t);
        if (!(d == t)) out.push_back(d);
    }
    return out;
}

}  // namespace lextri
