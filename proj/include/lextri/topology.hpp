#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lextri/facet.hpp"

namespace lextri {

struct FVector {
    int dim;
    std::array<std::int64_t, 4> f;  // f[0..dim]; face counts
};

FVector f_vector(int dim, const std::vector<facet_t>& facets);

int euler_characteristic(int dim, const std::vector<facet_t>& facets);

// Sign propagation over the facet dual graph.  Requires every ridge to lie
// in exactly two facets (a closed complex); throws otherwise.  Disconnected
// complexes are allowed: true iff every component is orientable.
bool is_orientable(int dim, const std::vector<facet_t>& facets);

struct SurfaceType {
    bool orientable;
    int genus;  // chi = 2 - 2g (orientable) resp. 2 - g (non-orientable)
};

// Requires a connected closed surface; throws on disconnected input.
SurfaceType classify_surface(const std::vector<facet_t>& facets);

}  // namespace lextri
