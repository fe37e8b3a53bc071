#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <stdexcept>

#include "lextri/canonical.hpp"
#include "lextri/enumerate.hpp"
#include "lextri/equivelar.hpp"
#include "lextri/homology.hpp"
#include "lextri/io.hpp"
#include "lextri/topology.hpp"

namespace py = pybind11;
using namespace lextri;

namespace {

using PyFacets = std::vector<std::vector<int>>;

Triangulation from_py(const PyFacets& fs) {
    if (fs.empty()) throw std::invalid_argument("empty facet list");
    const std::size_t ar = fs[0].size();
    if (ar != 3 && ar != 4)
        throw std::invalid_argument("facets must have 3 or 4 vertices");
    Triangulation t;
    t.dim = static_cast<int>(ar) - 1;
    for (auto f : fs) {
        if (f.size() != ar) throw std::invalid_argument("mixed facet sizes");
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i < ar; ++i) {
            if (f[i] < 1 || f[i] > kMaxLabel)
                throw std::invalid_argument("label out of range");
            if (i && f[i] == f[i - 1])
                throw std::invalid_argument("repeated vertex in facet");
            t.n = std::max(t.n, f[i]);
        }
        t.facets.push_back(pack(f.data(), static_cast<int>(ar)));
    }
    std::sort(t.facets.begin(), t.facets.end());
    if (std::adjacent_find(t.facets.begin(), t.facets.end()) != t.facets.end())
        throw std::invalid_argument("duplicate facet");
    return t;
}

PyFacets to_py(int dim, const std::vector<facet_t>& facets) {
    PyFacets out;
    out.reserve(facets.size());
    for (facet_t f : facets) {
        int v[4];
        unpack(f, dim + 1, v);
        out.emplace_back(v, v + dim + 1);
    }
    return out;
}

std::vector<PyFacets> enumerate_py(int dim, int n, int degree) {
    EnumerationConfig cfg;
    cfg.dim = dim;
    cfg.n = n;
    cfg.degree_constraint = degree;
    std::vector<PyFacets> out;
    {
        py::gil_scoped_release release;
        enumerate(cfg, [&](const Triangulation& t) {
            out.push_back(to_py(dim, t.facets));
        });
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_lextri, m) {
    m.doc() = "lexicographic enumeration of triangulated surfaces and 3-manifolds";

    m.def(
        "enumerate_surfaces",
        [](int n, int degree) { return enumerate_py(2, n, degree); },
        py::arg("n"), py::arg("degree") = 0,
        "All canonical triangulated surfaces on n vertices, in lexicographic\n"
        "order, as lists of triangles.  degree > 0 restricts to equivelar\n"
        "triangulations of that vertex degree.");

    m.def(
        "enumerate_3manifolds",
        [](int n) { return enumerate_py(3, n, 0); }, py::arg("n"),
        "All canonical combinatorial 3-manifolds on n vertices, in\n"
        "lexicographic order, as lists of tetrahedra.");

    m.def(
        "count",
        [](int dim, int n, int degree) {
            EnumerationConfig cfg;
            cfg.dim = dim;
            cfg.n = n;
            cfg.degree_constraint = degree;
            py::gil_scoped_release release;
            return count_triangulations(cfg);
        },
        py::arg("dim"), py::arg("n"), py::arg("degree") = 0,
        "Number of canonical triangulations without materializing them.");

    m.def(
        "classify_surface",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            if (t.dim != 2) throw std::invalid_argument("not a surface");
            SurfaceType s = classify_surface(t.facets);
            return py::make_tuple(s.orientable, s.genus);
        },
        py::arg("facets"), "(orientable, genus) of a closed surface.");

    m.def(
        "classify_3manifold",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            if (t.dim != 3) throw std::invalid_argument("not a 3-manifold");
            return std::string(manifold3_name(classify_3manifold(t.facets)));
        },
        py::arg("facets"),
        "Name of a recognized closed 3-manifold: S3, S2xS1, S2~S1, or RP3.");

    m.def(
        "euler_characteristic",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            return euler_characteristic(t.dim, t.facets);
        },
        py::arg("facets"));

    m.def(
        "f_vector",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            FVector fv = f_vector(t.dim, t.facets);
            std::vector<std::int64_t> out(fv.f.begin(), fv.f.begin() + t.dim + 1);
            return out;
        },
        py::arg("facets"));

    m.def(
        "homology",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> out;
            for (const auto& h : homology(t.dim, t.facets))
                out.emplace_back(h.betti, h.torsion);
            return out;
        },
        py::arg("facets"),
        "Integral homology as (betti, [torsion factors]) per dimension.");

    m.def(
        "canonical_form",
        [](const PyFacets& fs) {
            Triangulation t = from_py(fs);
            return to_py(t.dim, canonical_form(t.dim, t.n, t.facets));
        },
        py::arg("facets"),
        "Lexicographically smallest relabeling of a closed triangulation.");

    m.def(
        "is_isomorphic",
        [](const PyFacets& a, const PyFacets& b) {
            Triangulation ta = from_py(a), tb = from_py(b);
            if (ta.dim != tb.dim) return false;
            return is_isomorphic(ta.dim, ta.n, ta.facets, tb.n, tb.facets);
        },
        py::arg("a"), py::arg("b"));

    m.def("admissible_pairs", &admissible_pairs, py::arg("chi"),
          "All (n, q) that an equivelar triangulation of Euler characteristic\n"
          "chi != 0 could have.");

    m.def("torus_like_pairs", &torus_like_pairs, py::arg("n_min"), py::arg("n_max"),
          "The chi == 0 family (n, 6) over a vertex range.");

    m.def(
        "admissible_triples",
        [](int chi) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& t : admissible_triples(chi))
                out.emplace_back(t.p, t.q, t.n);
            return out;
        },
        py::arg("chi"),
        "All polyhedral-map types (p, q, n) admitted by chi < 0.");

    m.def(
        "serialize",
        [](const PyFacets& fs) { return serialize(from_py(fs)); }, py::arg("facets"),
        "One-line record: facets ';'-separated, labels ' '-separated.");

    m.def(
        "parse",
        [](const std::string& line, bool verified) {
            Triangulation t = parse_triangulation(
                line, verified ? ParseMode::verified : ParseMode::raw);
            return to_py(t.dim, t.facets);
        },
        py::arg("line"), py::arg("verified") = false);

    m.def(
        "verify",
        [](const std::string& line) {
            VerifyReport r = verify_triangulation(line);
            py::dict d;
            d["parses"] = r.parses;
            d["closed"] = r.closed;
            d["links_ok"] = r.links_ok;
            d["connected"] = r.connected;
            d["contiguous"] = r.contiguous;
            d["canonical"] = r.canonical;
            d["error"] = r.error;
            return d;
        },
        py::arg("line"), "Structural report for a one-line facet record.");
}
