#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lextri/complex.hpp"

namespace lextri {

struct Triangulation {
    int dim = 2;
    int n = 0;
    std::vector<facet_t> facets;
};

enum class NodeOutcome {
    descend,           // facet accepted, search continues below it
    emitted,           // complete on the full vertex count, output
    discarded,         // complete on fewer vertices
    prune_degree,      // closed vertex with star key below vertex 1's
    prune_constraint,  // closed vertex violating the degree constraint
    prune_link,        // closed vertex whose link is not a sphere
    prune_relabel,     // some relabeling is lex-smaller
};

// Observer over the search tree.  on_node fires after each facet insertion
// with its outcome (detail = the offending vertex for degree/link prunes);
// on_resume fires when the search returns to a node and another candidate
// will be tried; on_star/on_star_abandon frame each initial-star branch.
class SearchObserver {
public:
    virtual ~SearchObserver() = default;
    virtual void on_star(const PartialComplex&) {}
    virtual void on_node(const PartialComplex&, NodeOutcome, int /*detail*/) {}
    virtual void on_resume(const PartialComplex&) {}
    virtual void on_star_abandon(const PartialComplex&) {}
};

struct EnumerationConfig {
    int dim = 2;
    int n = 4;
    int degree_constraint = 0;  // dim 2 only; 0 = unconstrained
    int slice_index = 0;        // keep subtrees with ordinal % slice_count
    int slice_count = 1;        //   == slice_index (see partition_depth)
    int partition_depth = 2;    // subtree roots: facets beyond the initial star
    int relabel_period = 1;     // relabeling prune on every j-th insertion;
                                // 0 = completions only (output unchanged)
    bool progress = false;      // stderr heartbeat every 1e6 nodes
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    std::uint64_t discarded = 0;
    std::uint64_t pruned_degree = 0;
    std::uint64_t pruned_constraint = 0;
    std::uint64_t pruned_link = 0;
    std::uint64_t pruned_relabel = 0;
};

using Sink = std::function<void(const Triangulation&)>;

// Depth-first generation of all lex-minimal closed-manifold facet lists on
// exactly cfg.n vertices, in increasing lexicographic order.
void enumerate(const EnumerationConfig& cfg, const Sink& sink,
               SearchObserver* observer = nullptr, EnumerationStats* stats = nullptr);

std::uint64_t count_triangulations(const EnumerationConfig& cfg,
                                   EnumerationStats* stats = nullptr);

// Canonical triangulated 2-spheres on m vertices, ordered lexicographically
// (memoized; used to seed the 3-dimensional search).
const std::vector<std::vector<facet_t>>& canonical_spheres(int m);

// --- observers ---

enum class EventKind {
    facet_added,
    backtrack,
    surface_complete,
    manifold_emitted,
    manifold_discarded,
};

struct EnumerationEvent {
    EventKind kind;
    std::vector<facet_t> facets;  // state right after the action
    std::vector<int> incomplete;  // vertices (<= n) whose stars are not closed
    std::string reason;
};

class EventRecorder : public SearchObserver {
public:
    void on_node(const PartialComplex&, NodeOutcome, int detail) override;
    const std::vector<EnumerationEvent>& events() const { return events_; }

private:
    std::vector<EnumerationEvent> events_;
};

// Renders the search tree in the tabular text format used by `lextri trace`:
// one line per visited state, "facets | incomplete vertices | remark".
class TraceObserver : public SearchObserver {
public:
    explicit TraceObserver(std::ostream& os) : os_(os) {}
    void on_star(const PartialComplex&) override;
    void on_node(const PartialComplex&, NodeOutcome, int detail) override;
    void on_resume(const PartialComplex&) override;
    void on_star_abandon(const PartialComplex&) override;

private:
    void line(const PartialComplex&, const std::string& remark);
    std::ostream& os_;
};

std::vector<int> incomplete_vertices(const PartialComplex& K);

}  // namespace lextri
