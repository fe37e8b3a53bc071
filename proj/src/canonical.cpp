#include "lextri/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace lextri {

std::vector<facet_t> apply_relabeling(const std::vector<facet_t>& facets, int dim,
                                      const Relabeling& r) {
    const int a = dim + 1;
    std::vector<facet_t> out;
    out.reserve(facets.size());
    for (facet_t f : facets) {
        int v[4];
        unpack(f, a, v);
        for (int i = 0; i < a; ++i) v[i] = r[v[i]];
        std::sort(v, v + a);
        out.push_back(pack(v, a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr int kPerm2[2][2] = {{0, 1}, {1, 0}};
constexpr int kPerm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// Backtracking search for a relabeling whose sorted facet list precedes the
// reference list.  Labels are assigned greedily position by position: at each
// output position the minimum achievable facet value (unassigned vertices
// optimistically mapped to the smallest free labels) either beats the
// reference (smaller labeling found), loses to it (branch dead), or ties, in
// which case every facet and label-matching realizing the tie is explored.
// A full tie is an automorphism and not an improvement.
struct Decider {
    int ar = 0, nv = 0, nf = 0;
    const facet_t* F = nullptr;
    std::vector<std::array<std::uint8_t, 4>> fv;
    std::vector<std::uint8_t> new_of_old, old_of_new;
    std::vector<std::uint8_t> emitted;
    std::vector<int> assign_stack;  // shared LIFO undo logs
    std::vector<int> emit_stack;
    int pos = 0;
    bool want_witness = false;
    Relabeling witness;

    void prepare(int dim, int n_used, const std::vector<facet_t>& facets) {
        ar = dim + 1;
        nv = n_used;
        nf = static_cast<int>(facets.size());
        F = facets.data();
        fv.assign(nf, {});
        for (int i = 0; i < nf; ++i) {
            int v[4];
            unpack(facets[i], ar, v);
            for (int j = 0; j < ar; ++j) fv[i][j] = static_cast<std::uint8_t>(v[j]);
        }
        new_of_old.assign(nv + 1, 0);
        old_of_new.assign(nv + 1, 0);
        emitted.assign(nf, 0);
        assign_stack.clear();
        emit_stack.clear();
        pos = 0;
    }

    void reset_run() {
        std::fill(new_of_old.begin(), new_of_old.end(), 0);
        std::fill(old_of_new.begin(), old_of_new.end(), 0);
        std::fill(emitted.begin(), emitted.end(), 0);
        assign_stack.clear();
        emit_stack.clear();
        pos = 0;
    }

    void assign(int old_v, int new_l) {
        new_of_old[old_v] = static_cast<std::uint8_t>(new_l);
        old_of_new[new_l] = static_cast<std::uint8_t>(old_v);
    }
    void unassign(int old_v) {
        old_of_new[new_of_old[old_v]] = 0;
        new_of_old[old_v] = 0;
    }

    facet_t key_of(int i, const int* free_lab, int* t_out) {
        int lab[4];
        int k = 0, t = 0;
        for (int j = 0; j < ar; ++j) {
            int m = new_of_old[fv[i][j]];
            if (m)
                lab[k++] = m;
            else
                ++t;
        }
        for (int s = 0; s < t; ++s) lab[k++] = free_lab[s];
        for (int x = 1; x < ar; ++x) {  // insertion sort, at most 4 entries
            int val = lab[x], y = x;
            while (y > 0 && lab[y - 1] > val) {
                lab[y] = lab[y - 1];
                --y;
            }
            lab[y] = val;
        }
        if (t_out) *t_out = t;
        return pack(lab, ar);
    }

    // Commits facet i, matching its unassigned vertices (in facet order) to
    // free labels through perm (nullptr = identity).
    void commit(int i, const int* free_lab, const int* perm) {
        int t = 0;
        for (int j = 0; j < ar; ++j) {
            int u = fv[i][j];
            if (!new_of_old[u]) {
                assign(u, free_lab[perm ? perm[t] : t]);
                assign_stack.push_back(u);
                ++t;
            }
        }
    }

    // Completes the current partial assignment into a full relabeling:
    // facet i takes the smallest free labels, every other unassigned vertex
    // the remaining labels in ascending order.
    void realize_witness(int i, const int* free_lab) {
        witness.assign(nv + 1, 0);
        std::vector<char> used(nv + 1, 0);
        for (int v = 1; v <= nv; ++v) {
            if (new_of_old[v]) {
                witness[v] = new_of_old[v];
                used[witness[v]] = 1;
            }
        }
        int t = 0;
        for (int j = 0; j < ar; ++j) {
            int u = fv[i][j];
            if (!witness[u]) {
                witness[u] = free_lab[t++];
                used[witness[u]] = 1;
            }
        }
        int next = 1;
        for (int v = 1; v <= nv; ++v) {
            if (witness[v]) continue;
            while (used[next]) ++next;
            witness[v] = next;
            used[next] = 1;
        }
    }

    bool extend() {
        const std::size_t a0 = assign_stack.size();
        const std::size_t e0 = emit_stack.size();
        const int entry_pos = pos;
        bool found = false;
        for (;;) {
            if (pos == nf) break;  // complete tie: an automorphism, not smaller
            int free_lab[4];
            int nfree = 0;
            for (int l = 1; l <= nv && nfree < ar; ++l)
                if (!old_of_new[l]) free_lab[nfree++] = l;
            facet_t best = std::numeric_limits<facet_t>::max();
            int best_i = -1, best_t = 0, n_best = 0;
            for (int i = 0; i < nf; ++i) {
                if (emitted[i]) continue;
                int t;
                facet_t key = key_of(i, free_lab, &t);
                if (key < best) {
                    best = key;
                    best_i = i;
                    best_t = t;
                    n_best = 1;
                } else if (key == best) {
                    ++n_best;
                }
            }
            if (best > F[pos]) break;
            if (best < F[pos]) {
                if (want_witness) realize_witness(best_i, free_lab);
                found = true;
                break;
            }
            if (n_best == 1 && best_t <= 1) {
                commit(best_i, free_lab, nullptr);
                emitted[best_i] = 1;
                emit_stack.push_back(best_i);
                ++pos;
                continue;
            }
            found = branch(best, free_lab);
            break;
        }
        while (emit_stack.size() > e0) {
            emitted[emit_stack.back()] = 0;
            emit_stack.pop_back();
        }
        while (assign_stack.size() > a0) {
            unassign(assign_stack.back());
            assign_stack.pop_back();
        }
        pos = entry_pos;
        return found;
    }

    bool branch(facet_t best, const int* free_lab) {
        for (int i = 0; i < nf; ++i) {
            if (emitted[i]) continue;
            int t;
            if (key_of(i, free_lab, &t) != best) continue;
            int nperm = (t <= 1) ? 1 : (t == 2 ? 2 : 6);
            for (int p = 0; p < nperm; ++p) {
                const int* perm = nullptr;
                if (t == 2)
                    perm = kPerm2[p];
                else if (t == 3)
                    perm = kPerm3[p];
                const std::size_t a0 = assign_stack.size();
                commit(i, free_lab, perm);
                emitted[i] = 1;
                ++pos;
                bool r = extend();
                --pos;
                emitted[i] = 0;
                while (assign_stack.size() > a0) {
                    unassign(assign_stack.back());
                    assign_stack.pop_back();
                }
                if (r) return true;
            }
        }
        return false;
    }
};

thread_local Decider tl_decider;

// Seeds: candidate images of the labels 1..4.  In a lex-minimal labeling the
// first facet is (1,2,3) resp. (1,2,3,4) and the second facet completes the
// first ridge of vertex 1 with the label 4 (dim 2) — so trying, for every
// admissible vertex v and neighbour w, the facet pair on the edge {v,w}
// (dim 2) resp. every facet through {v,w} (dim 3) covers all prefixes a
// smaller labeling could have.
template <class Fn>
bool for_each_seed(const PartialComplex& K, int v, Fn&& fn) {
    const auto& facets = K.facets();
    const int ar = K.arity();
    if (K.dim() == 2) {
        for (int w = 1; w <= K.n_max(); ++w) {
            if (w == v || K.degree(w) == 0) continue;
            int third[2], cnt = 0;
            for (facet_t f : facets) {
                if (!contains_vertex(f, 3, v) || !contains_vertex(f, 3, w)) continue;
                int u[3];
                unpack(f, 3, u);
                for (int i = 0; i < 3; ++i)
                    if (u[i] != v && u[i] != w && cnt < 2) third[cnt++] = u[i];
            }
            if (cnt != 2) continue;  // edge {v,w} absent or not yet doubled
            if (fn(v, w, third[0], third[1])) return true;
            if (fn(v, w, third[1], third[0])) return true;
        }
        return false;
    }
    for (facet_t f : facets) {
        if (!contains_vertex(f, ar, v)) continue;
        int u[4];
        unpack(f, 4, u);
        int rest[3], cnt = 0;
        for (int i = 0; i < 4; ++i)
            if (u[i] != v) rest[cnt++] = u[i];
        for (int wi = 0; wi < 3; ++wi) {
            int w = rest[wi];
            int x = rest[(wi + 1) % 3], y = rest[(wi + 2) % 3];
            if (fn(v, w, x, y)) return true;
            if (fn(v, w, y, x)) return true;
        }
    }
    return false;
}

bool seed_finds_smaller(Decider& D, const PartialComplex& K, int v, bool want_witness) {
    return for_each_seed(K, v, [&](int a, int b, int c, int d) {
        D.reset_run();
        D.want_witness = want_witness;
        D.assign(a, 1);
        D.assign(b, 2);
        D.assign(c, 3);
        D.assign(d, 4);
        return D.extend();
    });
}

}  // namespace

bool partial_is_lex_minimal(const PartialComplex& K) {
    if (K.facets().empty()) return true;
    const int key1 = K.star_key(1);
    // A closed vertex with a smaller star key relabels to a smaller list.
    for (int v = 2; v <= K.n_max(); ++v) {
        if (K.vertex_state(v) != VertexState::closed) continue;
        if (K.star_key(v) < key1) return false;
    }
    Decider& D = tl_decider;
    D.prepare(K.dim(), K.used_vertices(), K.facets());
    for (int v = 1; v <= K.n_max(); ++v) {
        if (K.vertex_state(v) != VertexState::closed) continue;
        if (K.star_key(v) != key1) continue;
        if (seed_finds_smaller(D, K, v, false)) return false;
    }
    return true;
}

std::vector<facet_t> canonical_form(int dim, int n, std::vector<facet_t> facets) {
    std::sort(facets.begin(), facets.end());
    PartialComplex K(dim, n);
    for (facet_t f : facets) {
        AddViolation r = K.add_facet(f);
        if (r == AddViolation::closed_vertex || r == AddViolation::ridge_overuse)
            throw std::invalid_argument("not a closed complex");
        if (r == AddViolation::not_lex_greater)
            throw std::invalid_argument("duplicate facet");
    }
    if (!K.is_complete() || K.used_vertices() != n)
        throw std::invalid_argument("expected a complete complex on labels 1..n");
    for (int v = 1; v <= n; ++v)
        if (K.degree(v) == 0) throw std::invalid_argument("labels must be 1..n");

    Decider& D = tl_decider;
    for (;;) {
        int min_key = std::numeric_limits<int>::max();
        for (int v = 1; v <= n; ++v) min_key = std::min(min_key, K.star_key(v));
        D.prepare(dim, n, K.facets());
        bool improved = false;
        for (int v = 1; v <= n && !improved; ++v) {
            if (K.star_key(v) != min_key) continue;
            if (seed_finds_smaller(D, K, v, true)) improved = true;
        }
        if (!improved) return K.facets();
        auto next = apply_relabeling(K.facets(), dim, D.witness);
        K.clear();
        for (facet_t f : next) K.add_facet_unchecked(f);
    }
}

bool is_isomorphic(int dim, int n_a, const std::vector<facet_t>& a, int n_b,
                   const std::vector<facet_t>& b) {
    if (n_a != n_b || a.size() != b.size()) return false;
    return canonical_form(dim, n_a, a) == canonical_form(dim, n_b, b);
}

}  // namespace lextri
