#include "lextri/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace lextri {

namespace {

// Distinct k-faces (packed) of a facet list, sorted.
std::vector<facet_t> faces_of(int dim, const std::vector<facet_t>& facets, int k) {
    const int ar = dim + 1;
    std::vector<facet_t> out;
    int v[4];
    int pick[4];
    for (facet_t f : facets) {
        unpack(f, ar, v);
        // all (k+1)-subsets of the ar vertices, in order
        for (int mask = 0; mask < (1 << ar); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != k + 1) continue;
            int m = 0;
            for (int i = 0; i < ar; ++i)
                if (mask & (1 << i)) pick[m++] = v[i];
            out.push_back(pack(pick, k + 1));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FVector f_vector(int dim, const std::vector<facet_t>& facets) {
    FVector fv;
    fv.dim = dim;
    fv.f = {0, 0, 0, 0};
    for (int k = 0; k <= dim; ++k)
        fv.f[k] = static_cast<std::int64_t>(faces_of(dim, facets, k).size());
    return fv;
}

int euler_characteristic(int dim, const std::vector<facet_t>& facets) {
    FVector fv = f_vector(dim, facets);
    std::int64_t chi = 0;
    for (int k = 0; k <= dim; ++k) chi += (k % 2 ? -1 : 1) * fv.f[k];
    return static_cast<int>(chi);
}

bool is_orientable(int dim, const std::vector<facet_t>& facets) {
    const int ar = dim + 1;
    if (facets.empty()) throw std::invalid_argument("empty complex");
    // ridge -> the (at most two) incidences (facet index, dropped position)
    std::map<facet_t, std::vector<std::pair<int, int>>> at;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (int j = 0; j < ar; ++j)
            at[drop_vertex(facets[i], ar, j)].push_back({static_cast<int>(i), j});
    for (auto& [r, inc] : at)
        if (inc.size() != 2) throw std::invalid_argument("complex is not closed");
    // Propagate signs: facets sharing a ridge must induce opposite
    // orientations on it; dropping position j flips by (-1)^j.
    std::vector<int> sign(facets.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < facets.size(); ++root) {
        if (sign[root]) continue;
        sign[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (int j = 0; j < ar; ++j) {
                auto& inc = at[drop_vertex(facets[i], ar, j)];
                for (auto& [i2, j2] : inc) {
                    if (static_cast<std::size_t>(i2) == i) continue;
                    int want = -sign[i] * ((j + j2) % 2 ? -1 : 1);
                    if (sign[i2] == 0) {
                        sign[i2] = want;
                        stack.push_back(static_cast<std::size_t>(i2));
                    } else if (sign[i2] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SurfaceType classify_surface(const std::vector<facet_t>& facets) {
    if (facets.empty()) throw std::invalid_argument("empty complex");
    // connectivity over vertices
    std::map<int, int> comp;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    int v[3];
    for (facet_t f : facets) {
        unpack(f, 3, v);
        for (int i = 0; i < 3; ++i) comp.emplace(v[i], v[i]);
        comp[find(v[0])] = find(v[1]);
        comp[find(v[1])] = find(v[2]);
    }
    int roots = 0;
    for (auto& [x, p] : comp)
        if (find(x) == x) ++roots;
    if (roots != 1) throw std::invalid_argument("surface is not connected");
    bool ori = is_orientable(2, facets);
    int chi = euler_characteristic(2, facets);
    int genus = ori ? (2 - chi) / 2 : 2 - chi;
    if (ori && (2 - chi) % 2 != 0) throw std::invalid_argument("impossible chi");
    return SurfaceType{ori, genus};
}

}  // namespace lextri
