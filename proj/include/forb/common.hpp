#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace forb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when an instance exceeds the configured enumeration guards.
class infeasible_size : public std::runtime_error {
public:
    explicit infeasible_size(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation defined only for good choices meets an I/I^c triple.
class not_good_choice : public std::invalid_argument {
public:
    explicit not_good_choice(const std::string& what) : std::invalid_argument(what) {}
};

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt ipow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Index of unordered pair {i,j}, i<j, among the C(m,2) pairs in lex order.
inline int pair_index(int i, int j, int m) {
    if (i > j) std::swap(i, j);
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

// All C(m,3) sorted triples of {0,..,m-1} in lexicographic order, with a
// reverse index. Shared by choices and triangular choice multigraphs.
struct TripleTable {
    int m = 0;
    std::vector<std::array<int, 3>> list;

    TripleTable() = default;
    explicit TripleTable(int m_) : m(m_) {
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) list.push_back({a, b, c});
    }
    int size() const { return static_cast<int>(list.size()); }
    int index(int a, int b, int c) const {
        // lexicographic rank of sorted (a,b,c)
        int lo = std::min({a, b, c}), hi = std::max({a, b, c});
        int mid = a + b + c - lo - hi;
        std::uint64_t r = 0;
        r += binomial(m, 3) - binomial(m - lo, 3);
        r += binomial(m - lo - 1, 2) - binomial(m - mid, 2);
        r += static_cast<std::uint64_t>(hi - mid - 1);
        return static_cast<int>(r);
    }
};

using Rng = std::mt19937_64;

// Thread cap for parallel search kernels; reads FORBCFG_THREADS, else
// hardware concurrency.
unsigned thread_cap();

}  // namespace forb
