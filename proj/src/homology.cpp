#include "lextri/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "lextri/snf.hpp"
#include "lextri/topology.hpp"

namespace lextri {

namespace {

std::vector<facet_t> faces_of(int dim, const std::vector<facet_t>& facets, int k) {
    const int ar = dim + 1;
    std::vector<facet_t> out;
    int v[4], pick[4];
    for (facet_t f : facets) {
        unpack(f, ar, v);
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

int index_of(const std::vector<facet_t>& faces, facet_t f) {
    return static_cast<int>(std::lower_bound(faces.begin(), faces.end(), f) -
                            faces.begin());
}

// boundary matrix rows = (k-1)-faces, cols = k-faces
std::vector<std::vector<std::int64_t>> boundary(const std::vector<facet_t>& lower,
                                                const std::vector<facet_t>& upper,
                                                int k) {
    std::vector<std::vector<std::int64_t>> m(lower.size(),
                                             std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j)
        for (int i = 0; i <= k; ++i) {
            facet_t r = drop_vertex(upper[j], k + 1, i);
            m[index_of(lower, r)][j] = (i % 2) ? -1 : 1;
        }
    return m;
}

}  // namespace

std::vector<HomologyGroup> homology(int dim, const std::vector<facet_t>& facets) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
    if (facets.empty()) throw std::invalid_argument("empty complex");
    std::vector<std::vector<facet_t>> faces(dim + 1);
    for (int k = 0; k <= dim; ++k) faces[k] = faces_of(dim, facets, k);
    // invariant factors of each boundary map; d[0] and d[dim+1] are empty
    std::vector<std::vector<std::int64_t>> inv(dim + 2);
    for (int k = 1; k <= dim; ++k)
        inv[k] = smith_normal_form(boundary(faces[k - 1], faces[k], k));
    std::vector<HomologyGroup> h(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        auto rank = [&](int kk) {
            return static_cast<std::int64_t>(inv[kk].size());
        };
        h[k].betti = static_cast<std::int64_t>(faces[k].size()) - rank(k) -
                     (k + 1 <= dim ? rank(k + 1) : 0);
        if (k + 1 <= dim)
            for (std::int64_t d : inv[k + 1])
                if (d > 1) h[k].torsion.push_back(d);
    }
    return h;
}

const char* manifold3_name(Manifold3 t) {
    switch (t) {
        case Manifold3::S3: return "S3";
        case Manifold3::S2xS1: return "S2xS1";
        case Manifold3::S2twS1: return "S2~S1";
        case Manifold3::RP3: return "RP3";
    }
    return "?";
}

Manifold3 classify_3manifold(const std::vector<facet_t>& facets) {
    auto h = homology(3, facets);
    if (h[0].betti != 1 || !h[0].torsion.empty())
        throw std::invalid_argument("manifold is not connected");
    const bool ori = is_orientable(3, facets);
    const auto& h1 = h[1];
    if (ori && h1.betti == 0 && h1.torsion.empty()) return Manifold3::S3;
    if (ori && h1.betti == 1 && h1.torsion.empty()) return Manifold3::S2xS1;
    if (!ori && h1.betti == 1 && h1.torsion.empty()) return Manifold3::S2twS1;
    if (ori && h1.betti == 0 && h1.torsion.size() == 1 && h1.torsion[0] == 2)
        return Manifold3::RP3;
    throw std::domain_error("unrecognized 3-manifold homology profile");
}

}  // namespace lextri
