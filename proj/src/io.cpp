#include "lextri/io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lextri/canonical.hpp"

namespace lextri {

std::string serialize(const Triangulation& t) {
    std::string out;
    const int ar = t.dim + 1;
    for (std::size_t i = 0; i < t.facets.size(); ++i) {
        if (i) out += ';';
        out += format_facet(t.facets[i], ar, true);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> split_facets(std::string_view line) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    int val = -1;
    auto flush_val = [&] {
        if (val >= 0) cur.push_back(val);
        val = -1;
    };
    auto flush_facet = [&] {
        flush_val();
        if (!cur.empty()) out.push_back(std::move(cur));
        cur = {};
    };
    for (char c : line) {
        if (c >= '0' && c <= '9') {
            val = (val < 0 ? 0 : val * 10) + (c - '0');
            if (val > kMaxLabel) throw std::invalid_argument("label out of range");
        } else if (c == ' ' || c == '\t') {
            flush_val();
        } else if (c == ';') {
            flush_facet();
        } else if (c == '\r' || c == '\n') {
            break;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }
    flush_facet();
    return out;
}

// Ridge multiplicities read straight off the facet list, independent of the
// incremental tables (which assume facets arrive in search order).
std::map<facet_t, int> ridge_counts(const Triangulation& t) {
    std::map<facet_t, int> use;
    const int ar = t.dim + 1;
    for (facet_t f : t.facets)
        for (int i = 0; i < ar; ++i) ++use[drop_vertex(f, ar, i)];
    return use;
}

bool all_doubled(const std::map<facet_t, int>& use) {
    for (auto [r, c] : use)
        if (c != 2) return false;
    return true;
}

PartialComplex load_tables(const Triangulation& t) {
    PartialComplex K(t.dim, std::max(t.n, t.dim + 2));
    for (facet_t f : t.facets) K.add_facet_unchecked(f);
    return K;
}

}  // namespace

Triangulation parse_triangulation(std::string_view line, ParseMode mode) {
    auto raw = split_facets(line);
    if (raw.empty()) throw std::invalid_argument("empty record");
    const std::size_t ar = raw[0].size();
    if (ar != 3 && ar != 4)
        throw std::invalid_argument("facets must have 3 or 4 vertices");
    Triangulation t;
    t.dim = static_cast<int>(ar) - 1;
    int n = 0;
    for (auto& f : raw) {
        if (f.size() != ar) throw std::invalid_argument("mixed facet sizes");
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i < ar; ++i) {
            if (f[i] < 1) throw std::invalid_argument("labels start at 1");
            if (i && f[i] == f[i - 1])
                throw std::invalid_argument("repeated vertex in facet");
            n = std::max(n, f[i]);
        }
        t.facets.push_back(pack(f.data(), static_cast<int>(ar)));
    }
    t.n = n;
    std::sort(t.facets.begin(), t.facets.end());
    if (std::adjacent_find(t.facets.begin(), t.facets.end()) != t.facets.end())
        throw std::invalid_argument("duplicate facet");
    if (mode == ParseMode::verified) {
        auto use = ridge_counts(t);
        for (auto [r, c] : use)
            if (c > 2) throw std::invalid_argument("ridge in more than two facets");
        for (auto [r, c] : use)
            if (c == 1) throw std::invalid_argument("complex has open ridges");
        PartialComplex K = load_tables(t);
        for (int v = 1; v <= t.n; ++v) {
            if (K.degree(v) == 0)
                throw std::invalid_argument("labels must be contiguous 1..n");
            if (!K.link_is_sphere(v))
                throw std::invalid_argument("vertex link is not a sphere");
        }
        if (!K.is_connected()) throw std::invalid_argument("complex is not connected");
    }
    return t;
}

VerifyReport verify_triangulation(std::string_view line) {
    VerifyReport r;
    Triangulation t;
    try {
        t = parse_triangulation(line, ParseMode::raw);
        r.parses = true;
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }
    r.closed = all_doubled(ridge_counts(t));
    PartialComplex K = load_tables(t);
    r.contiguous = true;
    for (int v = 1; v <= t.n; ++v)
        if (K.degree(v) == 0) r.contiguous = false;
    if (!r.closed) return r;
    r.links_ok = true;
    for (int v = 1; v <= t.n; ++v)
        if (K.degree(v) > 0 && !K.link_is_sphere(v)) r.links_ok = false;
    r.connected = K.is_connected();
    if (r.links_ok && r.connected && r.contiguous) {
        try {
            r.canonical = canonical_form(t.dim, t.n, t.facets) == t.facets;
        } catch (const std::exception&) {
            r.canonical = false;
        }
    }
    return r;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::string data;
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        data = ss.str();
    }
    if (data.size() >= 2 && static_cast<unsigned char>(data[0]) == 0x1f &&
        static_cast<unsigned char>(data[1]) == 0x8b) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw std::runtime_error("cannot open " + path);
        std::string plain;
        char buf[1 << 16];
        int got;
        while ((got = gzread(gz, buf, sizeof buf)) > 0) plain.append(buf, got);
        bool bad = got < 0;
        gzclose(gz);
        if (bad) throw std::runtime_error("corrupt gzip stream in " + path);
        data = std::move(plain);
    }
    std::vector<std::string> lines;
    std::string cur;
    for (char c : data) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur = {};
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    return lines;
}

std::string render_manifest(const std::vector<ManifestEntry>& entries) {
    std::string out = "slice\tof\tcount\tlast\n";
    for (const auto& e : entries) {
        out += std::to_string(e.slice);
        out += '\t';
        out += std::to_string(e.slice_count);
        out += '\t';
        out += std::to_string(e.count);
        out += '\t';
        out += e.last_record;
        out += '\n';
    }
    return out;
}

std::vector<ManifestEntry> parse_manifest(const std::vector<std::string>& lines) {
    std::vector<ManifestEntry> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == 0 && lines[i].rfind("slice\t", 0) == 0) continue;  // header
        if (lines[i].empty()) continue;
        std::istringstream ss(lines[i]);
        ManifestEntry e;
        std::string rest;
        if (!(ss >> e.slice >> e.slice_count >> e.count))
            throw std::invalid_argument("bad manifest line: " + lines[i]);
        std::getline(ss, rest);
        if (!rest.empty() && rest[0] == '\t') rest.erase(0, 1);
        e.last_record = rest;
        out.push_back(std::move(e));
    }
    return out;
}

std::string render_count_table(const std::vector<CountRow>& rows) {
    std::string out = "n,dim,orientable,type,count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.dim);
        out += ',';
        out += r.orientable;
        out += ',';
        out += r.type;
        out += ',';
        out += std::to_string(r.count);
        out += '\n';
    }
    return out;
}

}  // namespace lextri
