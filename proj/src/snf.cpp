#include "lextri/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>

namespace lextri {

namespace {

struct Overflow {};

// Arithmetic shims: the int64 instantiation signals overflow, the
// multiprecision one cannot overflow.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
using big = boost::multiprecision::cpp_int;
inline big mul(const big& a, const big& b) { return a * b; }
inline big sub(const big& a, const big& b) { return a - b; }
inline big add(const big& a, const big& b) { return a + b; }

template <class I>
std::vector<I> snf_impl(std::vector<std::vector<I>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<I> out;
    auto abs_of = [](const I& x) { return x < 0 ? I(-x) : x; };
    int t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing submatrix to the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi < 0 || abs_of(a[i][j]) < abs_of(a[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        for (;;) {
            // clear column and row by Euclidean steps; a nonzero remainder
            // becomes the (strictly smaller) pivot and we start over
            bool again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                I q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] = sub(a[i][j], mul(q, a[t][j]));
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                I q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
                if (a[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    again = true;
                }
            }
            if (again) continue;
            // the pivot must divide the whole trailing submatrix
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i)
                for (int j = t + 1; j < cols && fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj)
                            a[t][jj] = add(a[t][jj], a[i][jj]);
                        fixed = false;
                    }
            if (fixed) break;
        }
        out.push_back(abs_of(a[t][t]));
        ++t;
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(std::vector<std::vector<std::int64_t>> m) {
    try {
        return snf_impl<std::int64_t>(m);
    } catch (const Overflow&) {
        std::vector<std::vector<big>> wide(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            wide[i].assign(m[i].begin(), m[i].end());
        auto d = snf_impl<big>(std::move(wide));
        std::vector<std::int64_t> out;
        out.reserve(d.size());
        for (auto& x : d) {
            if (x > big(INT64_MAX)) throw std::overflow_error("invariant factor too large");
            out.push_back(static_cast<std::int64_t>(x));
        }
        return out;
    }
}

}  // namespace lextri
