#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>

namespace lextri {

// A facet is packed into one machine word, 8 bits per vertex label,
// highest byte = smallest label.  Facets of equal arity then compare
// lexicographically as plain integers.
using facet_t = std::uint32_t;

constexpr int kMaxLabel = 250;

constexpr facet_t pack2(int a, int b) {
    return (static_cast<facet_t>(a) << 8) | static_cast<facet_t>(b);
}

constexpr facet_t pack3(int a, int b, int c) {
    return (static_cast<facet_t>(a) << 16) | (static_cast<facet_t>(b) << 8) |
           static_cast<facet_t>(c);
}

constexpr facet_t pack4(int a, int b, int c, int d) {
    return (static_cast<facet_t>(a) << 24) | (static_cast<facet_t>(b) << 16) |
           (static_cast<facet_t>(c) << 8) | static_cast<facet_t>(d);
}

// arity = number of vertices (dim + 1 for facets, dim for ridges).
inline facet_t pack(const int* v, int arity) {
    facet_t f = 0;
    for (int i = 0; i < arity; ++i) f = (f << 8) | static_cast<facet_t>(v[i]);
    return f;
}

inline int unpack_vertex(facet_t f, int arity, int i) {
    return static_cast<int>((f >> (8 * (arity - 1 - i))) & 0xff);
}

inline void unpack(facet_t f, int arity, int* out) {
    for (int i = 0; i < arity; ++i) out[i] = unpack_vertex(f, arity, i);
}

inline bool contains_vertex(facet_t f, int arity, int v) {
    for (int i = 0; i < arity; ++i)
        if (unpack_vertex(f, arity, i) == v) return true;
    return false;
}

// Ridge obtained by dropping the i-th smallest vertex.
inline facet_t drop_vertex(facet_t f, int arity, int i) {
    int v[4];
    unpack(f, arity, v);
    int r[3];
    int j = 0;
    for (int t = 0; t < arity; ++t)
        if (t != i) r[j++] = v[t];
    return pack(r, arity - 1);
}

constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }
constexpr std::int64_t choose3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

// Colexicographic ranks; dense and collision-free for labels 1..n.
inline std::size_t edge_rank(int a, int b) {
    assert(a < b);
    return static_cast<std::size_t>(choose2(b - 1)) + static_cast<std::size_t>(a - 1);
}

inline std::size_t triangle_rank(int a, int b, int c) {
    assert(a < b && b < c);
    return static_cast<std::size_t>(choose3(c - 1)) +
           static_cast<std::size_t>(choose2(b - 1)) + static_cast<std::size_t>(a - 1);
}

// Rank of a packed ridge (arity 2 or 3).
inline std::size_t ridge_rank(facet_t r, int arity) {
    if (arity == 2) return edge_rank(unpack_vertex(r, 2, 0), unpack_vertex(r, 2, 1));
    return triangle_rank(unpack_vertex(r, 3, 0), unpack_vertex(r, 3, 1),
                         unpack_vertex(r, 3, 2));
}

inline std::string format_facet(facet_t f, int arity, bool spaces) {
    std::string s;
    for (int i = 0; i < arity; ++i) {
        if (spaces && i) s += ' ';
        s += std::to_string(unpack_vertex(f, arity, i));
    }
    return s;
}

}  // namespace lextri
