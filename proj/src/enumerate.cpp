#include "lextri/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "lextri/canonical.hpp"

namespace lextri {

namespace {

bool debug_asserts_enabled() {
    static const bool on = [] {
        const char* e = std::getenv("LEXTRI_DEBUG_ASSERTS");
        return e && *e && *e != '0';
    }();
    return on;
}

struct Star {
    std::vector<facet_t> facets;
    int key1;  // star key of vertex 1
};

// The star of vertex 1 in any lex-minimal surface with deg(1) = d:
// 123, 124, then 1 j j+2 for j = 3..d-1, closing with 1 d d+1.
std::vector<Star> initial_stars_dim2(int n, int degree_constraint) {
    std::vector<Star> out;
    int lo = 3, hi = n - 1;
    if (degree_constraint) lo = hi = degree_constraint;
    for (int d = std::max(lo, 3); d <= std::min(hi, n - 1); ++d) {
        Star s;
        s.facets.push_back(pack3(1, 2, 3));
        s.facets.push_back(pack3(1, 2, 4));
        for (int j = 3; j <= d - 1; ++j) s.facets.push_back(pack3(1, j, j + 2));
        s.facets.push_back(pack3(1, d, d + 1));
        s.key1 = d;
        out.push_back(std::move(s));
    }
    return out;
}

// The star of vertex 1 in a lex-minimal 3-manifold is the cone over a
// lex-minimal 2-sphere, shifted up by one label.  Branches are ordered by
// the coned facet lists themselves (not by sphere size: a larger sphere of
// smaller minimum degree can cone below a smaller one).
std::vector<Star> initial_stars_dim3(int n) {
    std::vector<Star> out;
    for (int m = 4; m <= n - 1; ++m) {
        for (const auto& sphere : canonical_spheres(m)) {
            Star s;
            s.facets.reserve(sphere.size());
            std::vector<int> deg(m + 1, 0);
            for (facet_t f : sphere) {
                int v[3];
                unpack(f, 3, v);
                for (int i = 0; i < 3; ++i) ++deg[v[i]];
                s.facets.push_back(pack4(1, v[0] + 1, v[1] + 1, v[2] + 1));
            }
            s.key1 = *std::min_element(deg.begin() + 1, deg.end());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Star& a, const Star& b) { return a.facets < b.facets; });
    return out;
}

class Engine {
public:
    Engine(const EnumerationConfig& cfg, const Sink& sink, SearchObserver* obs)
        : cfg_(cfg), K_(cfg.dim, cfg.n), sink_(sink), obs_(obs) {}

    void run() {
        auto stars = cfg_.dim == 2 ? initial_stars_dim2(cfg_.n, cfg_.degree_constraint)
                                   : initial_stars_dim3(cfg_.n);
        for (const Star& s : stars) run_star(s);
    }

    const EnumerationStats& stats() const { return stats_; }

private:
    void heartbeat() {
        std::cerr << "lextri: " << stats_.nodes << " nodes, " << stats_.emitted
                  << " emitted\n";
    }

    void run_star(const Star& S) {
        K_.clear();
        levels_.clear();
        for (facet_t f : S.facets) K_.add_facet_unchecked(f);
        key1_ = S.key1;
        assert(K_.vertex_state(1) == VertexState::closed);
        if (obs_) obs_->on_star(K_);
        facet_t bound = K_.last_facet();
        bool resumed = false;
        const std::size_t D = static_cast<std::size_t>(cfg_.partition_depth);
        for (;;) {
            facet_t f = next_candidate(bound);
            if (!f) {
                if (levels_.empty()) {
                    if (obs_) obs_->on_star_abandon(K_);
                    return;
                }
                bound = levels_.back();
                levels_.pop_back();
                K_.remove_last_facet();
                resumed = true;
                continue;
            }
            if (cfg_.slice_count > 1 && levels_.size() + 1 == D) {
                // Subtree root: belongs to exactly one slice.
                if (ordinal_++ % static_cast<std::uint64_t>(cfg_.slice_count) !=
                    static_cast<std::uint64_t>(cfg_.slice_index)) {
                    bound = f;
                    continue;
                }
            }
            if (resumed) {
                if (obs_) obs_->on_resume(K_);
                resumed = false;
            }
            std::array<int, 4> closed_v{};
            int n_closed = 0;
            const int pivot_before = pivot_;
            K_.add_facet_unchecked(f, &closed_v, &n_closed);
            ++stats_.nodes;
            if (cfg_.progress && stats_.nodes % 1000000 == 0) heartbeat();
            int detail = 0;
            NodeOutcome out = evaluate(closed_v, n_closed, pivot_before, &detail);
            if (obs_) obs_->on_node(K_, out, detail);
            switch (out) {
                case NodeOutcome::descend:
                    levels_.push_back(f);
                    bound = f;
                    continue;
                case NodeOutcome::emitted:
                case NodeOutcome::discarded: {
                    bool mine = true;
                    if (cfg_.slice_count > 1 && levels_.size() + 1 < D)
                        mine = (ordinal_++ % static_cast<std::uint64_t>(cfg_.slice_count)) ==
                               static_cast<std::uint64_t>(cfg_.slice_index);
                    if (out == NodeOutcome::emitted) {
                        if (mine) {
                            ++stats_.emitted;
                            sink_(Triangulation{cfg_.dim, cfg_.n, K_.facets()});
                        }
                    } else {
                        if (mine) ++stats_.discarded;
                    }
                    break;
                }
                case NodeOutcome::prune_degree:
                    ++stats_.pruned_degree;
                    break;
                case NodeOutcome::prune_constraint:
                    ++stats_.pruned_constraint;
                    break;
                case NodeOutcome::prune_link:
                    ++stats_.pruned_link;
                    break;
                case NodeOutcome::prune_relabel:
                    ++stats_.pruned_relabel;
                    break;
            }
            K_.remove_last_facet();
            bound = f;
            resumed = true;
        }
    }

    NodeOutcome evaluate(const std::array<int, 4>& closed_v, int n_closed,
                         int pivot_before, int* detail) {
        const int q = cfg_.degree_constraint;
        for (int i = 0; i < n_closed; ++i) {
            int w = closed_v[i];
            if (q) {
                if (K_.degree(w) != q) {
                    *detail = w;
                    return NodeOutcome::prune_constraint;
                }
            } else if (K_.star_key(w) < key1_) {
                *detail = w;
                return NodeOutcome::prune_degree;
            }
        }
        if (q) {
            // Degrees only grow, and a facet at an open vertex closes at most
            // two of its open ridges, so the final degree is at least
            // deg + ceil(open/2).  Past q the state is dead.
            const int ar = cfg_.dim + 1;
            int v[4];
            unpack(K_.last_facet(), ar, v);
            for (int i = 0; i < ar; ++i) {
                if (K_.vertex_state(v[i]) != VertexState::open) continue;
                if (K_.degree(v[i]) + (K_.open_ridges_at(v[i]) + 1) / 2 > q) {
                    *detail = v[i];
                    return NodeOutcome::prune_constraint;
                }
            }
        }
        for (int i = 0; i < n_closed; ++i) {
            int w = closed_v[i];
            if (!K_.link_is_sphere(w)) {
                *detail = w;
                return NodeOutcome::prune_link;
            }
        }
        if (debug_asserts_enabled()) {
            for (int i = 0; i < n_closed; ++i)
                if (closed_v[i] == pivot_before) assert(K_.is_strongly_connected());
            assert(K_.is_connected());
            assert(K_.tables_consistent());
        }
        const bool complete = K_.is_complete();
        if (complete && K_.used_vertices() < cfg_.n) return NodeOutcome::discarded;
        bool check_relabel = complete;
        if (!complete && cfg_.relabel_period > 0)
            check_relabel = (levels_.size() + 1) % static_cast<std::size_t>(
                                                       cfg_.relabel_period) ==
                            0;
        if (check_relabel && !partial_is_lex_minimal(K_))
            return NodeOutcome::prune_relabel;
        return complete ? NodeOutcome::emitted : NodeOutcome::descend;
    }

    // --- candidate generation ---

    // Largest vertex that could close the ridge with a facet beyond f:
    // it must not be closed already and not lie in the ridge.  Facet values
    // grow with the added vertex, so only the largest candidate matters.
    bool ridge_closable(const int* r, facet_t f) {
        const int d = cfg_.dim;
        for (int x = cfg_.n; x >= 2; --x) {
            bool in_r = false;
            for (int i = 0; i < d; ++i) in_r |= (r[i] == x);
            if (in_r) continue;
            if (K_.vertex_state(x) == VertexState::closed) continue;
            int g[4];
            for (int i = 0; i < d; ++i) g[i] = r[i];
            g[d] = x;
            std::sort(g, g + d + 1);
            return pack(g, d + 1) > f;
        }
        return false;
    }

    // With f tentatively inserted: every ridge of f left at usage 1 and every
    // still-open ridge at the pivot must admit a lex-greater closing facet,
    // otherwise no completion below f exists.
    bool viable_after_add(facet_t f, int k) {
        const int d = cfg_.dim;
        const int ar = d + 1;
        int r[3];
        for (int i = 0; i < ar; ++i) {
            facet_t rf = drop_vertex(f, ar, i);
            if (K_.ridge_usage(rf) != 1) continue;
            unpack(rf, d, r);
            if (!ridge_closable(r, f)) return false;
        }
        // Open ridges through k lie in exactly one facet each; scan k's star.
        for (facet_t g : K_.facets()) {
            if (!contains_vertex(g, ar, k)) continue;
            if (g == f) continue;  // already handled above
            for (int i = 0; i < ar; ++i) {
                facet_t rf = drop_vertex(g, ar, i);
                if (contains_vertex(rf, d, k) && K_.ridge_usage(rf) == 1) {
                    unpack(rf, d, r);
                    if (!ridge_closable(r, f)) return false;
                }
            }
        }
        return true;
    }

    bool accept_candidate(facet_t f, int k) {
        std::array<int, 4> dummy{};
        int nd = 0;
        K_.add_facet_unchecked(f, &dummy, &nd);
        bool ok = viable_after_add(f, k);
        K_.remove_last_facet();
        return ok;
    }

    facet_t next_candidate(facet_t bound) {
        const int k = K_.smallest_open_vertex();
        assert(k > 0);
        pivot_ = k;
        const int q = cfg_.degree_constraint;
        if (q && K_.degree(k) >= q) return 0;
        const int u = K_.used_vertices();
        const int n = cfg_.n;
        const int b0 = unpack_vertex(bound, cfg_.dim + 1, 0);
        if (b0 > k) return 0;  // every facet through k precedes the bound
        if (cfg_.dim == 2) {
            int xlo = (b0 == k) ? unpack_vertex(bound, 3, 1) : k + 1;
            for (int x = xlo; x <= u; ++x) {
                if (K_.vertex_state(x) != VertexState::open) continue;
                if (q && K_.degree(x) >= q) continue;
                if (K_.ridge_usage(pack2(k, x)) >= 2) continue;
                for (int y = x + 1; y <= u; ++y) {
                    facet_t f = pack3(k, x, y);
                    if (f <= bound) continue;
                    if (K_.vertex_state(y) != VertexState::open) continue;
                    if (q && K_.degree(y) >= q) continue;
                    if (K_.ridge_usage(pack2(k, y)) >= 2) continue;
                    if (K_.ridge_usage(pack2(x, y)) >= 2) continue;
                    if (accept_candidate(f, k)) return f;
                }
                if (u < n) {
                    facet_t f = pack3(k, x, u + 1);
                    if (f > bound && accept_candidate(f, k)) return f;
                }
            }
            return 0;
        }
        // dim 3
        int xlo = (b0 == k) ? unpack_vertex(bound, 4, 1) : k + 1;
        for (int x = xlo; x <= u; ++x) {
            if (K_.vertex_state(x) != VertexState::open) continue;
            for (int y = x + 1; y <= u; ++y) {
                if (K_.vertex_state(y) != VertexState::open) continue;
                for (int z = y + 1; z <= u; ++z) {
                    facet_t f = pack4(k, x, y, z);
                    if (f <= bound) continue;
                    if (K_.vertex_state(z) != VertexState::open) continue;
                    int t1[] = {k, x, y}, t2[] = {k, x, z}, t3[] = {k, y, z},
                        t4[] = {x, y, z};
                    if (K_.ridge_usage(pack(t1, 3)) >= 2) continue;
                    if (K_.ridge_usage(pack(t2, 3)) >= 2) continue;
                    if (K_.ridge_usage(pack(t3, 3)) >= 2) continue;
                    if (K_.ridge_usage(pack(t4, 3)) >= 2) continue;
                    if (accept_candidate(f, k)) return f;
                }
                if (u < n) {
                    facet_t f = pack4(k, x, y, u + 1);
                    int t1[] = {k, x, y};
                    if (f > bound && K_.ridge_usage(pack(t1, 3)) < 2 &&
                        accept_candidate(f, k))
                        return f;
                }
            }
            if (u + 1 < n) {
                facet_t f = pack4(k, x, u + 1, u + 2);
                if (f > bound && accept_candidate(f, k)) return f;
            }
        }
        return 0;
    }

    EnumerationConfig cfg_;
    PartialComplex K_;
    const Sink& sink_;
    SearchObserver* obs_;
    EnumerationStats stats_{};
    std::vector<facet_t> levels_;  // facets beyond the initial star
    std::uint64_t ordinal_ = 0;
    int key1_ = 0;
    int pivot_ = 0;
};

void validate(const EnumerationConfig& cfg) {
    if (cfg.dim != 2 && cfg.dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    if (cfg.n < cfg.dim + 2 || cfg.n > kMaxLabel)
        throw std::invalid_argument("vertex count out of range");
    if (cfg.degree_constraint && cfg.dim != 2)
        throw std::invalid_argument("degree constraint requires dim 2");
    if (cfg.degree_constraint && cfg.degree_constraint < 3)
        throw std::invalid_argument("degree constraint must be at least 3");
    if (cfg.slice_count < 1 || cfg.slice_index < 0 || cfg.slice_index >= cfg.slice_count)
        throw std::invalid_argument("bad slice");
    if (cfg.partition_depth < 1) throw std::invalid_argument("bad partition depth");
    if (cfg.relabel_period < 0) throw std::invalid_argument("bad relabel period");
}

}  // namespace

void enumerate(const EnumerationConfig& cfg, const Sink& sink, SearchObserver* observer,
               EnumerationStats* stats) {
    validate(cfg);
    Engine e(cfg, sink, observer);
    e.run();
    if (stats) *stats = e.stats();
}

std::uint64_t count_triangulations(const EnumerationConfig& cfg, EnumerationStats* stats) {
    std::uint64_t n = 0;
    enumerate(cfg, [&](const Triangulation&) { ++n; }, nullptr, stats);
    return n;
}

const std::vector<std::vector<facet_t>>& canonical_spheres(int m) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<facet_t>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<facet_t>> spheres;
    EnumerationConfig cfg;
    cfg.dim = 2;
    cfg.n = m;
    enumerate(cfg, [&](const Triangulation& t) {
        if (t.facets.size() == static_cast<std::size_t>(2 * m - 4))
            spheres.push_back(t.facets);
    });
    return cache.emplace(m, std::move(spheres)).first->second;
}

// --- observers ---

std::vector<int> incomplete_vertices(const PartialComplex& K) {
    std::vector<int> out;
    for (int v = 1; v <= K.n_max(); ++v)
        if (K.vertex_state(v) != VertexState::closed) out.push_back(v);
    return out;
}

namespace {

std::string outcome_remark(const PartialComplex& K, NodeOutcome out, int detail) {
    const char* what = K.dim() == 2 ? "surface" : "manifold";
    switch (out) {
        case NodeOutcome::descend:
            return "";
        case NodeOutcome::emitted:
            return std::string(what) + " complete!";
        case NodeOutcome::discarded:
            return std::string(what) + " complete";
        case NodeOutcome::prune_degree:
            return "degree of " + std::to_string(detail) + " too small";
        case NodeOutcome::prune_constraint:
            return "degree of " + std::to_string(detail) + " violates constraint";
        case NodeOutcome::prune_link:
            return "link of " + std::to_string(detail) + " is not a sphere";
        case NodeOutcome::prune_relabel:
            return "relabeling is smaller";
    }
    return "";
}

}  // namespace

void EventRecorder::on_node(const PartialComplex& K, NodeOutcome out, int detail) {
    auto push = [&](EventKind kind, std::string reason) {
        events_.push_back(
            EnumerationEvent{kind, K.facets(), incomplete_vertices(K), std::move(reason)});
    };
    push(EventKind::facet_added, "");
    switch (out) {
        case NodeOutcome::descend:
            break;
        case NodeOutcome::emitted:
            push(EventKind::surface_complete, "");
            push(EventKind::manifold_emitted, "");
            break;
        case NodeOutcome::discarded:
            push(EventKind::surface_complete, "");
            push(EventKind::manifold_discarded, "wrong vertex count");
            break;
        default:
            push(EventKind::backtrack, outcome_remark(K, out, detail));
            break;
    }
}

void TraceObserver::line(const PartialComplex& K, const std::string& remark) {
    const bool wide = K.n_max() > 9;
    std::string s;
    const auto& fs = K.facets();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += '+';
        s += format_facet(fs[i], K.arity(), wide);
    }
    s += " | ";
    auto inc = incomplete_vertices(K);
    if (inc.empty()) {
        s += '-';
    } else {
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(inc[i]);
        }
    }
    if (!remark.empty()) {
        s += " | ";
        s += remark;
    }
    os_ << s << '\n';
}

void TraceObserver::on_star(const PartialComplex& K) { line(K, ""); }
void TraceObserver::on_node(const PartialComplex& K, NodeOutcome out, int detail) {
    line(K, outcome_remark(K, out, detail));
}
void TraceObserver::on_resume(const PartialComplex& K) { line(K, ""); }
void TraceObserver::on_star_abandon(const PartialComplex& K) { line(K, ""); }

}  // namespace lextri
