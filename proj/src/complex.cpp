#include "lextri/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lextri {

PartialComplex::PartialComplex(int dim, int n_max) : dim_(dim), n_(n_max) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
    if (n_max < dim + 2 || n_max > kMaxLabel)
        throw std::invalid_argument("vertex count out of range");
    ridge_use_.assign(
        dim == 2 ? static_cast<std::size_t>(choose2(n_)) : static_cast<std::size_t>(choose3(n_)),
        0);
    degree_.assign(n_ + 1, 0);
    open_at_.assign(n_ + 1, 0);
    if (dim == 3) edge_use_.assign(static_cast<std::size_t>(choose2(n_)), 0);
    facets_.reserve(64);
}

void PartialComplex::bump_ridge(facet_t ridge, int delta) {
    std::size_t rk = ridge_rank(ridge, dim_);
    int before = ridge_use_[rk];
    int after = before + delta;
    ridge_use_[rk] = static_cast<std::uint8_t>(after);
    // Track ridges at usage exactly 1 ("open"), per incident vertex and globally.
    int open_delta = (after == 1) - (before == 1);
    if (open_delta) {
        open_total_ += open_delta;
        for (int i = 0; i < dim_; ++i) {
            int w = unpack_vertex(ridge, dim_, i);
            open_at_[w] = static_cast<std::uint16_t>(open_at_[w] + open_delta);
        }
    }
}

void PartialComplex::add_facet_unchecked(facet_t f, std::array<int, 4>* newly_closed,
                                         int* n_newly_closed) {
    const int a = arity();
    int v[4];
    unpack(f, a, v);
    for (int i = 0; i < a; ++i) {
        if (degree_[v[i]]++ == 0) ++used_;
    }
    for (int i = 0; i < a; ++i) bump_ridge(drop_vertex(f, a, i), +1);
    if (dim_ == 3) {
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) ++edge_use_[edge_rank(v[i], v[j])];
    }
    facets_.push_back(f);
    if (newly_closed) {
        int k = 0;
        for (int i = 0; i < a; ++i)
            if (open_at_[v[i]] == 0) (*newly_closed)[k++] = v[i];
        *n_newly_closed = k;
    }
}

AddViolation PartialComplex::add_facet(facet_t f) {
    const int a = arity();
    int v[4];
    unpack(f, a, v);
    for (int i = 0; i < a; ++i) {
        if (v[i] < 1 || v[i] > n_ || (i && v[i] <= v[i - 1]))
            throw std::invalid_argument("malformed facet");
    }
    if (!facets_.empty() && f <= facets_.back()) return AddViolation::not_lex_greater;
    for (int i = 0; i < a; ++i)
        if (vertex_state(v[i]) == VertexState::closed) return AddViolation::closed_vertex;
    for (int i = 0; i < a; ++i)
        if (ridge_use_[ridge_rank(drop_vertex(f, a, i), dim_)] >= 2)
            return AddViolation::ridge_overuse;
    add_facet_unchecked(f);
    return AddViolation::ok;
}

void PartialComplex::remove_last_facet() {
    facet_t f = facets_.back();
    facets_.pop_back();
    const int a = arity();
    int v[4];
    unpack(f, a, v);
    for (int i = 0; i < a; ++i) bump_ridge(drop_vertex(f, a, i), -1);
    if (dim_ == 3) {
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) --edge_use_[edge_rank(v[i], v[j])];
    }
    for (int i = 0; i < a; ++i) {
        if (--degree_[v[i]] == 0) --used_;
    }
}

void PartialComplex::clear() {
    while (!facets_.empty()) remove_last_facet();
}

int PartialComplex::edge_facet_count(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edge_use_[edge_rank(a, b)];
}

int PartialComplex::smallest_open_vertex() const {
    for (int v = 1; v <= n_; ++v)
        if (degree_[v] && open_at_[v]) return v;
    return 0;
}

int PartialComplex::star_key(int v) const {
    if (dim_ == 2) return degree_[v];
    int best = 1 << 30;
    for (int w = 1; w <= n_; ++w) {
        if (w == v) continue;
        int c = edge_use_[edge_rank(std::min(v, w), std::max(v, w))];
        if (c && c < best) best = c;
    }
    return best;
}

namespace {

// The link of a vertex in a surface: edges between neighbours.
// True iff they form one closed cycle through every neighbour.
bool edges_form_single_cycle(const std::vector<std::array<int, 2>>& edges) {
    if (edges.empty()) return false;
    std::map<int, std::vector<int>> adj;
    for (auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj)
        if (nb.size() != 2) return false;
    // Walk the cycle from an arbitrary start; it must visit every edge.
    int start = edges[0][0];
    int prev = start, cur = adj[start][0];
    std::size_t steps = 1;
    while (cur != start) {
        auto& nb = adj[cur];
        int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++steps;
        if (steps > edges.size()) return false;
    }
    return steps == edges.size();
}

}  // namespace

bool PartialComplex::link_is_sphere(int v) const {
    if (degree_[v] == 0) return false;
    if (dim_ == 2) {
        std::vector<std::array<int, 2>> edges;
        for (facet_t f : facets_) {
            if (!contains_vertex(f, 3, v)) continue;
            int w[3];
            unpack(f, 3, w);
            int e[2], k = 0;
            for (int i = 0; i < 3; ++i)
                if (w[i] != v) e[k++] = w[i];
            edges.push_back({e[0], e[1]});
        }
        return edges_form_single_cycle(edges);
    }
    // dim 3: link triangles must form a closed connected surface with chi = 2.
    std::vector<std::array<int, 3>> tris;
    for (facet_t f : facets_) {
        if (!contains_vertex(f, 4, v)) continue;
        int w[4];
        unpack(f, 4, w);
        std::array<int, 3> t;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (w[i] != v) t[k++] = w[i];
        tris.push_back(t);
    }
    if (tris.empty()) return false;
    std::map<std::pair<int, int>, int> edge_count;
    std::map<int, std::vector<std::array<int, 2>>> vertex_link;
    std::map<int, int> comp;  // union-find over link vertices
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto& t : tris)
        for (int i = 0; i < 3; ++i)
            if (!comp.count(t[i])) comp[t[i]] = t[i];
    for (auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            int a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
            if (a > b) std::swap(a, b);
            ++edge_count[{a, b}];
            vertex_link[c].push_back({a, b});
        }
        comp[find(t[0])] = find(t[1]);
        comp[find(t[0])] = find(t[2]);
    }
    for (auto& [e, c] : edge_count)
        if (c != 2) return false;
    for (auto& [w, edges] : vertex_link)
        if (!edges_form_single_cycle(edges)) return false;
    int roots = 0;
    for (auto& [x, p] : comp)
        if (find(x) == x) ++roots;
    if (roots != 1) return false;
    std::int64_t chi = static_cast<std::int64_t>(comp.size()) -
                       static_cast<std::int64_t>(edge_count.size()) +
                       static_cast<std::int64_t>(tris.size());
    return chi == 2;
}

bool PartialComplex::is_strongly_connected() const {
    if (facets_.empty()) return false;
    std::vector<int> comp(facets_.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    std::map<std::size_t, int> seen;  // ridge rank -> first facet index
    const int a = arity();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        for (int j = 0; j < a; ++j) {
            std::size_t rk = ridge_rank(drop_vertex(facets_[i], a, j), dim_);
            auto [it, fresh] = seen.emplace(rk, static_cast<int>(i));
            if (!fresh) comp[find(it->second)] = find(static_cast<int>(i));
        }
    }
    int roots = 0;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return roots == 1;
}

bool PartialComplex::is_connected() const {
    if (facets_.empty()) return false;
    std::vector<int> comp(n_ + 1);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    const int a = arity();
    for (facet_t f : facets_) {
        int v[4];
        unpack(f, a, v);
        for (int i = 1; i < a; ++i) comp[find(v[0])] = find(v[i]);
    }
    int roots = 0;
    for (int v = 1; v <= n_; ++v)
        if (degree_[v] && find(v) == v) ++roots;
    return roots == 1;
}

bool PartialComplex::tables_consistent() const {
    PartialComplex fresh(dim_, n_);
    for (facet_t f : facets_) fresh.add_facet_unchecked(f);
    return fresh.ridge_use_ == ridge_use_ && fresh.degree_ == degree_ &&
           fresh.open_at_ == open_at_ && fresh.edge_use_ == edge_use_ &&
           fresh.used_ == used_ && fresh.open_total_ == open_total_;
}

}  // namespace lextri
