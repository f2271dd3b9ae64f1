#include "forb/triple_pattern.hpp"

#include <cassert>
#include <stdexcept>

namespace forb {
namespace {

constexpr int col_bit(int ci, int cj, int ck) { return (ci << 2) | (cj << 1) | ck; }

// eq:misspairs, encoded as 3-bit column values; PAIRS[p][b] is member b of pair p
constexpr std::uint8_t PAIRS[3][2] = {
    {col_bit(1, 0, 0), col_bit(0, 1, 1)},
    {col_bit(0, 1, 0), col_bit(1, 0, 1)},
    {col_bit(0, 0, 1), col_bit(1, 1, 0)},
};

constexpr std::uint8_t I_MASK =
    (1u << col_bit(1, 0, 0)) | (1u << col_bit(0, 1, 0)) | (1u << col_bit(0, 0, 1));
constexpr std::uint8_t IC_MASK =
    (1u << col_bit(0, 1, 1)) | (1u << col_bit(1, 0, 1)) | (1u << col_bit(1, 1, 0));

std::uint8_t arcs_valid_mask(const std::array<std::pair<int, int>, 2>& arcs) {
    std::uint8_t mask = 0;
    for (int v = 0; v < 8; ++v) {
        bool ok = true;
        for (const auto& [from, to] : arcs) {
            int cf = (v >> (2 - from)) & 1;
            int ct = (v >> (2 - to)) & 1;
            if (cf == 0 && ct != 0) ok = false;
        }
        if (ok) mask |= static_cast<std::uint8_t>(1u << v);
    }
    return mask;
}

std::array<TriplePattern, 8> build() {
    std::array<TriplePattern, 8> out{};
    for (int sel = 0; sel < 8; ++sel) {
        TriplePattern p;
        p.selector = static_cast<std::uint8_t>(sel);
        for (int pr = 0; pr < 3; ++pr)
            p.forbidden_mask |= static_cast<std::uint8_t>(1u << PAIRS[pr][(sel >> pr) & 1]);
        p.valid_mask = static_cast<std::uint8_t>(~p.forbidden_mask);

        if (p.forbidden_mask == I_MASK) {
            p.kind = TriplePattern::Kind::Identity;
        } else if (p.forbidden_mask == IC_MASK) {
            p.kind = TriplePattern::Kind::IdentityComplement;
        } else {
            p.kind = TriplePattern::Kind::Good;
            int matches = 0;
            for (int shared = 0; shared < 3; ++shared) {
                int o0 = shared == 0 ? 1 : 0;
                int o1 = shared == 2 ? 1 : 2;
                for (int tail = 0; tail < 2; ++tail) {
                    std::array<std::pair<int, int>, 2> arcs =
                        tail ? std::array<std::pair<int, int>, 2>{{{shared, o0}, {shared, o1}}}
                             : std::array<std::pair<int, int>, 2>{{{o0, shared}, {o1, shared}}};
                    if (arcs_valid_mask(arcs) == p.valid_mask) {
                        p.arcs = arcs;
                        p.shared_role = shared;
                        p.shared_is_tail = (tail == 1);
                        p.tcm_edge_roles = {o0, o1};
                        ++matches;
                    }
                }
            }
            if (matches != 1)
                throw std::logic_error("triple_patterns: good selector without unique arc pair");
            if (__builtin_popcount(p.valid_mask) != 5)
                throw std::logic_error("triple_patterns: good selector must leave 5 valid columns");
        }
        out[static_cast<size_t>(sel)] = p;
    }
    int n_i = 0, n_ic = 0;
    for (const auto& p : out) {
        n_i += p.kind == TriplePattern::Kind::Identity;
        n_ic += p.kind == TriplePattern::Kind::IdentityComplement;
    }
    if (n_i != 1 || n_ic != 1) throw std::logic_error("triple_patterns: expected one I and one I^c");
    return out;
}

std::uint8_t cols_mask(std::initializer_list<int> cols) {
    std::uint8_t m = 0;
    for (int c : cols) m |= static_cast<std::uint8_t>(1u << c);
    return m;
}

}  // namespace

const std::array<TriplePattern, 8>& triple_patterns() {
    static const std::array<TriplePattern, 8> table = build();
    return table;
}

int selector_A1() {
    static const int s = [] {
        std::uint8_t a1 = cols_mask({col_bit(0, 1, 1), col_bit(0, 0, 1), col_bit(0, 1, 0)});
        for (const auto& p : triple_patterns())
            if (p.forbidden_mask == a1) return static_cast<int>(p.selector);
        throw std::logic_error("A1 selector not found");
    }();
    return s;
}

int selector_A2() {
    static const int s = [] {
        std::uint8_t a2 = cols_mask({col_bit(0, 0, 1), col_bit(0, 1, 1), col_bit(1, 0, 1)});
        for (const auto& p : triple_patterns())
            if (p.forbidden_mask == a2) return static_cast<int>(p.selector);
        throw std::logic_error("A2 selector not found");
    }();
    return s;
}

int selector_I() {
    for (const auto& p : triple_patterns())
        if (p.kind == TriplePattern::Kind::Identity) return p.selector;
    throw std::logic_error("unreachable");
}

int selector_Ic() {
    for (const auto& p : triple_patterns())
        if (p.kind == TriplePattern::Kind::IdentityComplement) return p.selector;
    throw std::logic_error("unreachable");
}

}  // namespace forb
