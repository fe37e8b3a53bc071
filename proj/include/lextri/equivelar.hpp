#pragma once

#include <utility>
#include <vector>

namespace lextri {

// Arithmetic admissibility for equivelar surfaces (every vertex of equal
// degree q).  Necessary conditions only; a pair may still admit no
// triangulation.

// (n, q) with chi != 0: q = 6 - 6*chi/n must be an integer >= 3 and
// n >= q + 1.  Sorted by n.  chi == 0 is the one infinite family
// (n, 6) for all n >= 7 and is rejected here; see torus_like_pairs.
std::vector<std::pair<int, int>> admissible_pairs(int chi);

// The chi == 0 family materialized over a vertex range.
std::vector<std::pair<int, int>> torus_like_pairs(int n_min, int n_max);

struct TypeTriple {
    int p, q, n;
    bool operator==(const TypeTriple&) const = default;
    auto operator<=>(const TypeTriple&) const = default;
};

// Map type {p,q} on n vertices: faces are p-gons, vertices q-valent.
// chi must be negative.  Ordered: each primal type (p <= q) by (p, n),
// immediately followed by its dual when distinct.
std::vector<TypeTriple> admissible_triples(int chi);

TypeTriple dual_type(const TypeTriple& t);

}  // namespace lextri
