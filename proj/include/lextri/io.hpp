#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lextri/enumerate.hpp"

namespace lextri {

// One triangulation per line: facets ";"-separated, labels " "-separated,
// e.g. the tetrahedron boundary is "1 2 3;1 2 4;1 3 4;2 3 4".
std::string serialize(const Triangulation& t);

enum class ParseMode {
    raw,       // syntax only: well-formed facets of a uniform arity
    verified,  // raw + closed manifold checks (ridges, links, connectivity,
               // contiguous labels)
};

Triangulation parse_triangulation(std::string_view line, ParseMode mode);

struct VerifyReport {
    bool parses = false;
    bool closed = false;      // every ridge in exactly two facets
    bool links_ok = false;    // every vertex link a sphere of proper dim
    bool connected = false;
    bool contiguous = false;  // labels exactly 1..n
    bool canonical = false;   // equals its canonical form
    std::string error;        // parse failure message
};

VerifyReport verify_triangulation(std::string_view line);

// All lines of a text file; transparently inflates gzip (by magic number,
// not extension).  Throws std::runtime_error when unreadable.
std::vector<std::string> read_lines(const std::string& path);

struct ManifestEntry {
    int slice = 0;
    int slice_count = 1;
    std::uint64_t count = 0;
    std::string last_record;  // empty when the slice produced nothing
};

std::string render_manifest(const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> parse_manifest(const std::vector<std::string>& lines);

// "n,dim,orientable,type,count" CSV with a header; rows emitted as given.
struct CountRow {
    int n = 0;
    int dim = 2;
    char orientable = '+';    // '+', '-' (or '?' when not applicable)
    std::string type;         // genus for surfaces, name for 3-manifolds
    std::uint64_t count = 0;
};

std::string render_count_table(const std::vector<CountRow>& rows);

}  // namespace lextri
