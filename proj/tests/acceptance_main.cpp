// Acceptance gate: nine criteria, one PASS/FAIL line each.  Reference values
// are pinned below; time limits are wall-clock seconds on a single core.
// Hours-scale checks (criterion 3 and the tails of 4 and 7) run only with
// LEXTRI_RUN_EXTENDED=1 and are otherwise reported as skipped.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lextri/canonical.hpp"
#include "lextri/enumerate.hpp"
#include "lextri/equivelar.hpp"
#include "lextri/homology.hpp"
#include "lextri/io.hpp"
#include "lextri/topology.hpp"
#include "naive_oracle.hpp"

using namespace lextri;

namespace {

constexpr double kSurfaceRunLimit = 300.0;   // criterion 1, per n
constexpr double kManifoldRunLimit = 600.0;  // criterion 4, n = 5..9 total
constexpr double kEquivelarLimit = 600.0;    // criterion 7, required part

bool extended_enabled() {
    const char* e = std::getenv("LEXTRI_RUN_EXTENDED");
    return e && *e && *e != '0';
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string note;
};

Outcome fail(std::string why) { return {false, false, std::move(why)}; }
Outcome pass(std::string what) { return {true, false, std::move(what)}; }

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::vector<Triangulation> run_census(int dim, int n, int degree = 0,
                                      int relabel_period = 1,
                                      EnumerationStats* stats = nullptr) {
    EnumerationConfig cfg;
    cfg.dim = dim;
    cfg.n = n;
    cfg.degree_constraint = degree;
    cfg.relabel_period = relabel_period;
    std::vector<Triangulation> out;
    enumerate(cfg, [&](const Triangulation& t) { out.push_back(t); }, nullptr, stats);
    return out;
}

oracle::Complex to_oracle(const Triangulation& t) {
    oracle::Complex c;
    for (facet_t f : t.facets) {
        int v[4];
        unpack(f, t.dim + 1, v);
        c.emplace_back(v, v + t.dim + 1);
    }
    return c;
}

// --- criterion 1: surface census n = 4..10 + independent oracle ---

Outcome criterion1() {
    const std::uint64_t want[] = {1, 1, 3, 9, 43, 655, 42426};
    for (int n = 4; n <= 10; ++n) {
        auto t0 = Clock::now();
        EnumerationConfig cfg;
        cfg.dim = 2;
        cfg.n = n;
        std::uint64_t got = count_triangulations(cfg);
        double dt = since(t0);
        if (got != want[n - 4])
            return fail(fmt("dim 2, n=%d: counted %llu, expected %llu", n,
                            (unsigned long long)got, (unsigned long long)want[n - 4]));
        if (dt > kSurfaceRunLimit)
            return fail(fmt("dim 2, n=%d took %.1fs (> %.0fs)", n, dt, kSurfaceRunLimit));
    }
    for (int n = 4; n <= 8; ++n) {
        std::set<oracle::Complex> mine;
        for (const auto& t : run_census(2, n)) mine.insert(to_oracle(t));
        auto raw = oracle::generate_all(2, n);
        std::set<oracle::Complex> raw_set(raw.begin(), raw.end());
        for (const auto& c : mine)
            if (!raw_set.count(c))
                return fail(fmt("n=%d: an output is not oracle-constructible", n));
        std::set<oracle::Complex> classes;
        for (const auto& c : raw) classes.insert(oracle::brute_canonical(c, n));
        if (classes != mine)
            return fail(fmt("n=%d: oracle classes (%zu) != output set (%zu)", n,
                            classes.size(), mine.size()));
    }
    return pass("counts 1,1,3,9,43,655,42426 for n=4..10; oracle set equality for n<=8");
}

// --- criterion 2: golden search trace, dim 2, n = 6 ---

Outcome criterion2() {
    std::ostringstream got;
    TraceObserver obs(got);
    EnumerationConfig cfg;
    cfg.dim = 2;
    cfg.n = 6;
    enumerate(cfg, [](const Triangulation&) {}, &obs);

    std::ifstream in(LEXTRI_SOURCE_DIR "/tests/golden/trace_n6_dim2.txt",
                     std::ios::binary);
    if (!in) return fail("golden trace file missing");
    std::ostringstream want;
    want << in.rdbuf();
    if (got.str() != want.str()) {
        std::istringstream a(got.str()), b(want.str());
        std::string la, lb;
        int ln = 0;
        while (true) {
            bool ra = static_cast<bool>(std::getline(a, la));
            bool rb = static_cast<bool>(std::getline(b, lb));
            ++ln;
            if (!ra && !rb) break;
            if (la != lb || ra != rb)
                return fail(fmt("trace differs from golden file at line %d", ln));
        }
        return fail("trace differs from golden file");
    }
    const std::string text = want.str();
    int lines = static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    return pass(fmt("%d trace lines byte-identical to the golden file", lines));
}

// --- criterion 3 (extended): surface census n = 11 with genus split ---

Outcome criterion3() {
    if (!extended_enabled())
        return {true, true, "n=11 surface census (set LEXTRI_RUN_EXTENDED=1 to run)"};
    // genus -> count; orientable and non-orientable sides
    const std::uint64_t ori[] = {1249, 37867, 113506, 65878, 821};
    const std::uint64_t nonori[] = {11719,   86968,   530278, 1628504, 3355250,
                                    3623421, 1834160, 295291, 5982};
    std::map<std::pair<char, int>, std::uint64_t> hist;
    std::uint64_t total = 0;
    EnumerationConfig cfg;
    cfg.dim = 2;
    cfg.n = 11;
    enumerate(cfg, [&](const Triangulation& t) {
        ++total;
        SurfaceType s = classify_surface(t.facets);
        ++hist[{s.orientable ? '+' : '-', s.genus}];
    });
    if (total != 11590894)
        return fail(fmt("n=11 total %llu, expected 11590894", (unsigned long long)total));
    for (int g = 0; g <= 4; ++g)
        if (hist[{'+', g}] != ori[g])
            return fail(fmt("n=11 orientable genus %d: %llu, expected %llu", g,
                            (unsigned long long)hist[{'+', g}],
                            (unsigned long long)ori[g]));
    for (int g = 1; g <= 9; ++g)
        if (hist[{'-', g}] != nonori[g - 1])
            return fail(fmt("n=11 non-orientable genus %d: %llu, expected %llu", g,
                            (unsigned long long)hist[{'-', g}],
                            (unsigned long long)nonori[g - 1]));
    if (hist.size() != 14) return fail("n=11: unexpected extra classes");
    return pass("n=11 total 11590894 with full genus split");
}

// --- criterion 4: 3-manifold census n = 5..9 (+ extended n = 10) ---

Outcome criterion4() {
    const std::uint64_t want[] = {1, 2, 5, 39, 1297};
    auto t0 = Clock::now();
    std::vector<Triangulation> nine;
    for (int n = 5; n <= 9; ++n) {
        auto out = run_census(3, n);
        if (out.size() != want[n - 5])
            return fail(fmt("dim 3, n=%d: %zu outputs, expected %llu", n, out.size(),
                            (unsigned long long)want[n - 5]));
        if (n == 9) nine = std::move(out);
    }
    double dt = since(t0);
    if (dt > kManifoldRunLimit)
        return fail(fmt("dim 3 censuses took %.1fs (> %.0fs)", dt, kManifoldRunLimit));

    std::map<Manifold3, std::uint64_t> types;
    for (const auto& t : nine) ++types[classify_3manifold(t.facets)];
    if (types[Manifold3::S3] != 1296 || types[Manifold3::S2twS1] != 1 ||
        types.size() != 2)
        return fail(fmt("n=9 classification: %llu S3 + %llu S2~S1, expected 1296 + 1",
                        (unsigned long long)types[Manifold3::S3],
                        (unsigned long long)types[Manifold3::S2twS1]));

    if (!extended_enabled())
        return pass(
            "counts 1,2,5,39,1297 for n=5..9; n=9 splits 1296 S3 + 1 S2~S1 "
            "(n=10 tail skipped)");

    std::map<Manifold3, std::uint64_t> ten;
    std::uint64_t total = 0;
    EnumerationConfig cfg;
    cfg.dim = 3;
    cfg.n = 10;
    enumerate(cfg, [&](const Triangulation& t) {
        ++total;
        ++ten[classify_3manifold(t.facets)];
    });
    if (total != 249015 || ten[Manifold3::S3] != 247882 ||
        ten[Manifold3::S2xS1] != 615 || ten[Manifold3::S2twS1] != 518)
        return fail(fmt("n=10: total %llu (S3 %llu, S2xS1 %llu, S2~S1 %llu), "
                        "expected 249015 (247882, 615, 518)",
                        (unsigned long long)total,
                        (unsigned long long)ten[Manifold3::S3],
                        (unsigned long long)ten[Manifold3::S2xS1],
                        (unsigned long long)ten[Manifold3::S2twS1]));
    return pass("counts 1,2,5,39,1297 for n=5..9; n=9 and n=10 type splits exact");
}

// --- criterion 5: topology fixtures + face-count identities ---

Outcome criterion5() {
    const std::vector<facet_t> tetra = {pack3(1, 2, 3), pack3(1, 2, 4),
                                        pack3(1, 3, 4), pack3(2, 3, 4)};
    const std::vector<facet_t> rp2 = {
        pack3(1, 2, 3), pack3(1, 2, 4), pack3(1, 3, 5), pack3(1, 4, 6),
        pack3(1, 5, 6), pack3(2, 3, 6), pack3(2, 4, 5), pack3(2, 5, 6),
        pack3(3, 4, 5), pack3(3, 4, 6)};
    const std::vector<facet_t> penta = {pack4(1, 2, 3, 4), pack4(1, 2, 3, 5),
                                        pack4(1, 2, 4, 5), pack4(1, 3, 4, 5),
                                        pack4(2, 3, 4, 5)};

    auto h = homology(2, tetra);
    if (h[0].betti != 1 || h[1].betti != 0 || h[2].betti != 1 ||
        !h[1].torsion.empty() || !classify_surface(tetra).orientable ||
        classify_surface(tetra).genus != 0)
        return fail("S2 fixture: expected homology (Z, 0, Z), orientable genus 0");

    h = homology(2, rp2);
    if (h[0].betti != 1 || h[1].betti != 0 || h[2].betti != 0 ||
        h[1].torsion != std::vector<std::int64_t>{2} || is_orientable(2, rp2))
        return fail("RP2 fixture: expected H1 = Z/2 and non-orientable");

    auto seven = run_census(2, 7, 6);
    if (seven.size() != 1) return fail("expected a unique (7,6) triangulation");
    SurfaceType s = classify_surface(seven[0].facets);
    h = homology(2, seven[0].facets);
    if (!s.orientable || s.genus != 1 || h[1].betti != 2 ||
        !h[1].torsion.empty())
        return fail("7-vertex torus fixture: expected orientable genus 1, H1 = Z^2");

    if (classify_3manifold(penta) != Manifold3::S3)
        return fail("boundary of the 4-simplex did not classify as S3");
    h = homology(3, penta);
    if (h[0].betti != 1 || h[1].betti != 0 || h[2].betti != 0 || h[3].betti != 1)
        return fail("S3 fixture: expected homology (Z, 0, 0, Z)");

    std::uint64_t surfaces = 0, manifolds = 0;
    for (int n = 4; n <= 8; ++n)
        for (const auto& t : run_census(2, n)) {
            FVector fv = f_vector(2, t.facets);
            SurfaceType st = classify_surface(t.facets);
            int chi = euler_characteristic(2, t.facets);
            if (2 * fv.f[1] != 3 * fv.f[2])
                return fail(fmt("dim 2, n=%d: 2 f1 == 3 f2 violated", n));
            if (chi != (st.orientable ? 2 - 2 * st.genus : 2 - st.genus))
                return fail(fmt("dim 2, n=%d: Euler characteristic vs genus", n));
            ++surfaces;
        }
    for (int n = 5; n <= 8; ++n)
        for (const auto& t : run_census(3, n)) {
            FVector fv = f_vector(3, t.facets);
            if (fv.f[2] != 2 * fv.f[3])
                return fail(fmt("dim 3, n=%d: f2 == 2 f3 violated", n));
            if (euler_characteristic(3, t.facets) != 0)
                return fail(fmt("dim 3, n=%d: Euler characteristic != 0", n));
            ++manifolds;
        }
    return pass(fmt("fixtures exact; identities hold on %llu surfaces and %llu "
                    "3-manifolds",
                    (unsigned long long)surfaces, (unsigned long long)manifolds));
}

// --- criterion 6: admissibility arithmetic ---

Outcome criterion6() {
    using Pairs = std::vector<std::pair<int, int>>;
    const std::map<int, Pairs> pair_table = {
        {2, {{4, 3}, {6, 4}, {12, 5}}},
        {1, {{6, 5}}},
        {-1, {}},
        {-2, {{12, 7}}},
        {-3, {{9, 8}, {18, 7}}},
        {-4, {{12, 8}, {24, 7}}},
        {-5, {{10, 9}, {15, 8}, {30, 7}}},
        {-6, {{12, 9}, {18, 8}, {36, 7}}},
        {-7, {{14, 9}, {21, 8}, {42, 7}}},
        {-8, {{12, 10}, {16, 9}, {24, 8}, {48, 7}}},
        {-9, {{18, 9}, {27, 8}, {54, 7}}},
        {-10, {{12, 11}, {15, 10}, {20, 9}, {30, 8}, {60, 7}}},
    };
    for (const auto& [chi, want] : pair_table)
        if (admissible_pairs(chi) != want)
            return fail(fmt("admissible_pairs(%d) mismatch", chi));

    using Triples = std::vector<TypeTriple>;
    const std::map<int, Triples> triple_table = {
        {-1, {}},
        {-2, {{3, 7, 12}, {7, 3, 28}}},
        {-3, {{3, 8, 9}, {8, 3, 24}, {3, 7, 18}, {7, 3, 42}, {4, 5, 12}, {5, 4, 15}}},
        {-4, {{3, 8, 12}, {8, 3, 32}, {3, 7, 24}, {7, 3, 56}, {4, 5, 16}, {5, 4, 20}}},
    };
    for (const auto& [chi, want] : triple_table)
        if (admissible_triples(chi) != want)
            return fail(fmt("admissible_triples(%d) mismatch", chi));
    return pass("pair table for chi in {2,1,-1..-10} and triples for chi in "
                "{-1..-4} exact");
}

// --- criterion 7: equivelar enumeration ---

Outcome criterion7() {
    auto t0 = Clock::now();
    // (torus, Klein bottle) counts for n = 7..30
    const int torus[] = {1, 1, 2, 1, 1, 4, 2, 2, 4, 5, 2, 5, 3, 6,
                         6, 4, 3, 11, 5, 5, 7, 9, 4, 11};
    const int klein[] = {0, 0, 1, 1, 0, 3, 0, 1, 3, 2, 0, 4, 0, 4,
                         3, 1, 0, 7, 2, 1, 3, 4, 0, 8};
    for (int n = 7; n <= 30; ++n) {
        int t = 0, k = 0;
        for (const auto& m : run_census(2, n, 6)) {
            SurfaceType s = classify_surface(m.facets);
            if (s.orientable && s.genus == 1)
                ++t;
            else if (!s.orientable && s.genus == 2)
                ++k;
            else
                return fail(fmt("(%d,6) output that is neither torus nor Klein", n));
        }
        if (t != torus[n - 7] || k != klein[n - 7])
            return fail(fmt("n=%d degree 6: %d torus + %d Klein, expected %d + %d", n,
                            t, k, torus[n - 7], klein[n - 7]));
    }

    // All equivelar triangulations on at most 11 vertices: 27 in total.
    // Non-admissible (n,q) must come up empty; (11,9) and (11,10) are skipped
    // as hopeless-but-slow searches (their chi = n(6-q)/6 is not an integer,
    // so admissibility already rules them out).
    std::uint64_t total = 0;
    for (int n = 4; n <= 11; ++n)
        for (int q = 3; q <= n - 1 && !(n == 11 && q >= 9); ++q) {
            EnumerationConfig cfg;
            cfg.dim = 2;
            cfg.n = n;
            cfg.degree_constraint = q;
            std::uint64_t c = count_triangulations(cfg);
            if (c && (n * (6 - q)) % 6 != 0)
                return fail(fmt("(%d,%d) emitted despite non-integral chi", n, q));
            total += c;
        }
    if (total != 27)
        return fail(fmt("equivelar total for n<=11 is %llu, expected 27",
                        (unsigned long long)total));

    // (12,7): orientable genus 2 and non-orientable genus 4 split
    int g2 = 0, g4 = 0, other = 0;
    for (const auto& m : run_census(2, 12, 7)) {
        SurfaceType s = classify_surface(m.facets);
        if (s.orientable && s.genus == 2)
            ++g2;
        else if (!s.orientable && s.genus == 4)
            ++g4;
        else
            ++other;
    }
    if (g2 != 6 || g4 != 28 || other != 0)
        return fail(fmt("(12,7): %d orientable genus 2 + %d non-orientable genus 4, "
                        "expected 6 + 28",
                        g2, g4));
    double dt = since(t0);
    if (dt > kEquivelarLimit)
        return fail(fmt("equivelar runs took %.1fs (> %.0fs)", dt, kEquivelarLimit));

    if (!extended_enabled())
        return pass(fmt("torus/Klein tables for n<=30 exact; 27 types for n<=11; "
                        "(12,7) splits 6+28 (%.0fs; n=12 tail skipped)",
                        dt));

    std::uint64_t twelve = 0;
    for (int q = 5; q <= 11; ++q) {
        EnumerationConfig cfg;
        cfg.dim = 2;
        cfg.n = 12;
        cfg.degree_constraint = q;
        twelve += count_triangulations(cfg);
    }
    if (twelve != 240914)
        return fail(fmt("n=12 equivelar total %llu, expected 240914",
                        (unsigned long long)twelve));
    return pass("torus/Klein tables for n<=30, 27 types for n<=11, (12,7) split, "
                "and n=12 total 240914 exact");
}

// --- criterion 8: canonicality properties ---

Outcome criterion8() {
    std::mt19937 rng(20240817u);
    std::uint64_t relabelings = 0;
    auto check_dim = [&](int dim, int n_lo, int n_hi) -> std::string {
        for (int n = n_lo; n <= n_hi; ++n)
            for (const auto& t : run_census(dim, n)) {
                if (canonical_form(dim, n, t.facets) != t.facets)
                    return fmt("dim %d, n=%d: output is not a canonical_form fixed "
                               "point",
                               dim, n);
                std::vector<int> perm(n + 1);
                std::iota(perm.begin(), perm.end(), 0);
                for (int rep = 0; rep < 10; ++rep) {
                    std::shuffle(perm.begin() + 1, perm.end(), rng);
                    auto relabeled = apply_relabeling(t.facets, dim, perm);
                    ++relabelings;
                    if (canonical_form(dim, n, relabeled) != t.facets)
                        return fmt("dim %d, n=%d: canonical_form failed to recover "
                                   "an output from a relabeling",
                                   dim, n);
                }
            }
        return {};
    };
    if (auto err = check_dim(2, 4, 8); !err.empty()) return fail(err);
    if (auto err = check_dim(3, 5, 8); !err.empty()) return fail(err);
    if (relabelings < 1000)
        return fail(fmt("only %llu relabelings exercised",
                        (unsigned long long)relabelings));

    // Intermediate relabeling checks are an optimization only: without them
    // (period 0) the tree grows but the output list is unchanged.
    for (int dim : {2, 3})
        for (int n = (dim == 2 ? 6 : 7); n <= 7; ++n) {
            EnumerationStats with{}, without{};
            auto a = run_census(dim, n, 0, 1, &with);
            auto b = run_census(dim, n, 0, 0, &without);
            auto key = [](const std::vector<Triangulation>& v) {
                std::vector<std::vector<facet_t>> k;
                for (const auto& t : v) k.push_back(t.facets);
                return k;
            };
            if (key(a) != key(b))
                return fail(fmt("dim %d, n=%d: output differs without the "
                                "relabeling prune",
                                dim, n));
            if (without.nodes <= with.nodes)
                return fail(fmt("dim %d, n=%d: node count did not grow without the "
                                "relabeling prune",
                                dim, n));
        }
    return pass(fmt("%llu relabelings recovered; all outputs canonical; prune "
                    "affects nodes only",
                    (unsigned long long)relabelings));
}

// --- criterion 9: deterministic search-tree partition ---

Outcome criterion9() {
    for (int dim : {2, 3}) {
        const int n = 8;
        std::vector<std::string> base;
        for (const auto& t : run_census(dim, n)) base.push_back(serialize(t));
        for (int m : {2, 4, 8}) {
            std::vector<std::string> merged;
            std::set<std::string> seen;
            for (int i = 0; i < m; ++i) {
                EnumerationConfig cfg;
                cfg.dim = dim;
                cfg.n = n;
                cfg.slice_index = i;
                cfg.slice_count = m;
                enumerate(cfg, [&](const Triangulation& t) {
                    std::string rec = serialize(t);
                    if (!seen.insert(rec).second)
                        throw std::runtime_error(
                            fmt("dim %d, m=%d: record emitted by two slices", dim, m));
                    merged.push_back(std::move(rec));
                });
            }
            std::sort(merged.begin(), merged.end());
            std::vector<std::string> sorted_base = base;
            std::sort(sorted_base.begin(), sorted_base.end());
            if (merged != sorted_base)
                return fail(fmt("dim %d, m=%d: merged slices differ from the "
                                "unpartitioned run",
                                dim, m));
        }
    }
    return pass("n=8 slices disjoint for m in {2,4,8}, merged output identical "
                "(both dims)");
}

}  // namespace

int main() {
    struct Row {
        int id;
        Outcome (*fn)();
    };
    const Row rows[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                        {4, criterion4}, {5, criterion5}, {6, criterion6},
                        {7, criterion7}, {8, criterion8}, {9, criterion9}};
    int failures = 0;
    for (const Row& r : rows) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = r.fn();
        } catch (const std::exception& e) {
            o = fail(e.what());
        }
        double dt = since(t0);
        const char* verdict = o.skipped ? "SKIP" : (o.pass ? "PASS" : "FAIL");
        std::printf("criterion %d: %s - %s (%.1fs)\n", r.id, verdict,
                    o.note.c_str(), dt);
        std::fflush(stdout);
        if (!o.pass && !o.skipped) ++failures;
    }
    if (failures) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
