#pragma once

#include <vector>

#include "lextri/complex.hpp"

namespace lextri {

// new label of old vertex v is r[v]; r[0] is unused.
using Relabeling = std::vector<int>;

// Relabels, sorts ascending.
std::vector<facet_t> apply_relabeling(const std::vector<facet_t>& facets, int dim,
                                      const Relabeling& r);

// True iff no relabeling of the used vertices produces a lex-smaller facet
// list.  Intended for enumeration states: the star of vertex 1 must be
// closed.  On complete complexes the test is exact.
bool partial_is_lex_minimal(const PartialComplex& K);

// Lex-least facet list over all relabelings of 1..n.  Requires a complete
// complex whose facets use exactly the labels 1..n.
std::vector<facet_t> canonical_form(int dim, int n, std::vector<facet_t> facets);

bool is_isomorphic(int dim, int n_a, const std::vector<facet_t>& a, int n_b,
                   const std::vector<facet_t>& b);

}  // namespace lextri
