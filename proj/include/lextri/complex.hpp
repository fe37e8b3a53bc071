#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lextri/facet.hpp"

namespace lextri {

enum class AddViolation {
    ok,
    not_lex_greater,   // facet does not compare greater than the current last facet
    closed_vertex,     // facet touches a vertex whose star is already closed
    ridge_overuse,     // some ridge of the facet already lies in two facets
};

enum class VertexState { unused, open, closed };

// A pure simplicial complex of dimension 2 or 3 under construction.
// Facets are kept in the order they were added (strictly increasing),
// and incidence tables are maintained incrementally so that ridge usage,
// vertex degrees and open-ridge counts are O(1) to query.
class PartialComplex {
public:
    PartialComplex(int dim, int n_max);

    int dim() const { return dim_; }
    int arity() const { return dim_ + 1; }
    int n_max() const { return n_; }

    const std::vector<facet_t>& facets() const { return facets_; }
    facet_t last_facet() const { return facets_.empty() ? 0 : facets_.back(); }
    int used_vertices() const { return used_; }

    // Validating insertion; on success the facet is appended.
    AddViolation add_facet(facet_t f);

    // Engine path: preconditions already established by the caller.
    // Vertices whose stars become closed by this insertion are appended
    // to *newly_closed (ascending) when non-null.
    void add_facet_unchecked(facet_t f, std::array<int, 4>* newly_closed = nullptr,
                             int* n_newly_closed = nullptr);

    void remove_last_facet();
    void clear();

    VertexState vertex_state(int v) const {
        if (degree_[v] == 0) return VertexState::unused;
        return open_at_[v] == 0 ? VertexState::closed : VertexState::open;
    }
    int degree(int v) const { return degree_[v]; }
    int open_ridges_at(int v) const { return open_at_[v]; }

    int ridge_usage(facet_t ridge) const { return ridge_use_[ridge_rank(ridge, dim_)]; }
    // dim 3 only: number of facets containing the edge {a,b}.
    int edge_facet_count(int a, int b) const;

    bool is_complete() const { return open_total_ == 0 && !facets_.empty(); }
    int open_ridge_total() const { return open_total_; }

    // Smallest vertex with an open star, or 0 if all stars are closed.
    int smallest_open_vertex() const;

    // dim 2: vertex degree.  dim 3: minimum, over neighbours w of v, of the
    // number of facets on the edge {v,w} — i.e. the smallest vertex degree
    // in the link surface of v.
    int star_key(int v) const;

    // Link tests.  For dim 2 the link of v must be a single closed cycle
    // through all neighbours of v; for dim 3 it must be a 2-sphere.
    bool link_is_sphere(int v) const;

    // Connectivity of the facet dual graph through ridges.
    bool is_strongly_connected() const;
    // Connectivity of the vertex set through facets.
    bool is_connected() const;

    // Rebuilds all incidence tables from the facet list; used to cross-check
    // the incremental bookkeeping.
    bool tables_consistent() const;

private:
    void bump_ridge(facet_t ridge, int delta);

    int dim_;
    int n_;
    int used_ = 0;
    int open_total_ = 0;
    std::vector<facet_t> facets_;
    std::vector<std::uint8_t> ridge_use_;   // per ridge rank: 0, 1 or 2
    std::vector<std::uint16_t> degree_;     // per vertex (1-based)
    std::vector<std::uint16_t> open_at_;    // per vertex: incident ridges at usage 1
    std::vector<std::uint16_t> edge_use_;   // dim 3 only: facets per edge
};

}  // namespace lextri
