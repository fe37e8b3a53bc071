#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lextri/facet.hpp"

namespace lextri {

struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1, divisibility order
};

// Integral simplicial homology H_0 .. H_dim from boundary-matrix Smith forms.
std::vector<HomologyGroup> homology(int dim, const std::vector<facet_t>& facets);

enum class Manifold3 {
    S3,       // 3-sphere
    S2xS1,    // orientable sphere bundle over the circle
    S2twS1,   // twisted (non-orientable) sphere bundle over the circle
    RP3,      // real projective 3-space
};

const char* manifold3_name(Manifold3 t);

// Identifies a closed connected 3-manifold by orientability and H_1; throws
// std::domain_error when the profile matches none of the known types.
Manifold3 classify_3manifold(const std::vector<facet_t>& facets);

}  // namespace lextri
