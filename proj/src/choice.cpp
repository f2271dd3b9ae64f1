#include "forb/choice.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace forb {

Choice::Choice(int m_, std::vector<std::uint8_t> sel_) : m(m_), triples(m_) {
    if (static_cast<int>(sel_.size()) != triples.size())
        throw std::invalid_argument("Choice: need one selector per triple");
    for (std::uint8_t s : sel_)
        if (s > 7) throw std::invalid_argument("Choice: selector out of range");
    sel = std::move(sel_);
}

bool Choice::is_good() const {
    const auto& pats = triple_patterns();
    for (std::uint8_t s : sel)
        if (!pats[s].good()) return false;
    return true;
}

std::string Choice::to_json() const {
    nlohmann::json pats = nlohmann::json::object();
    for (int t = 0; t < triples.size(); ++t) {
        const auto& tr = triples.list[t];
        std::string key = std::to_string(tr[0] + 1) + "," + std::to_string(tr[1] + 1) + "," +
                          std::to_string(tr[2] + 1);
        pats[key] = static_cast<int>(sel[t]);
    }
    nlohmann::json j;
    j["m"] = m;
    j["patterns"] = pats;
    return j.dump();
}

Choice Choice::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Choice b(j.at("m").get<int>());
    std::vector<char> seen(b.triples.size(), 0);
    for (const auto& [key, val] : j.at("patterns").items()) {
        int a, x, c;
        if (sscanf(key.c_str(), "%d,%d,%d", &a, &x, &c) != 3)
            throw std::invalid_argument("Choice: bad triple key");
        int idx = b.triples.index(a - 1, x - 1, c - 1);
        int s = val.get<int>();
        if (s < 0 || s > 7) throw std::invalid_argument("Choice: selector out of range");
        b.sel[idx] = static_cast<std::uint8_t>(s);
        seen[idx] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("Choice: missing triple in patterns map");
    return b;
}

namespace {

struct SubtripleList {
    // triples of the choice lying inside X, with positions relative to X
    struct Entry {
        int triple_index;
        int pos[3];
    };
    std::vector<Entry> entries;
};

SubtripleList subtriples(const Choice& b, const std::vector<int>& x) {
    SubtripleList out;
    const int n = static_cast<int>(x.size());
    std::vector<int> pos_of(b.m, -1);
    for (int p = 0; p < n; ++p) pos_of[x[p]] = p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int t = b.triples.index(x[i], x[j], x[k]);
                out.entries.push_back({t, {i, j, k}});
            }
    return out;
}

void check_sorted_subset(const Choice& b, const std::vector<int>& x) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= b.m) throw std::invalid_argument("X not a subset of [m]");
        if (i && x[i] <= x[i - 1]) throw std::invalid_argument("X must be strictly ascending");
    }
}

}  // namespace

ImplicationGraph implication_graph(const Choice& b, const std::vector<int>& x) {
    check_sorted_subset(b, x);
    ImplicationGraph g;
    g.verts = x;
    const auto& pats = triple_patterns();
    for (const auto& e : subtriples(b, x).entries) {
        const TriplePattern& p = pats[b.sel[e.triple_index]];
        if (!p.good()) continue;
        const auto& tr = b.triples.list[e.triple_index];
        for (const auto& [from, to] : p.arcs) g.arcs.emplace_back(tr[from], tr[to]);
    }
    return g;
}

std::vector<std::uint32_t> valid_columns(const Choice& b, const std::vector<int>& x) {
    check_sorted_subset(b, x);
    const int n = static_cast<int>(x.size());
    if (n > 24) throw infeasible_size("valid_columns: |X| > 24");
    const auto& pats = triple_patterns();
    auto subs = subtriples(b, x);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        bool ok = true;
        for (const auto& e : subs.entries) {
            int key = (((v >> e.pos[0]) & 1) << 2) | (((v >> e.pos[1]) & 1) << 1) |
                      ((v >> e.pos[2]) & 1);
            if ((pats[b.sel[e.triple_index]].forbidden_mask >> key) & 1) { ok = false; break; }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

std::int64_t count_valid_columns(const Choice& b, const std::vector<int>& x) {
    return static_cast<std::int64_t>(valid_columns(b, x).size());
}

namespace {

// iterative Tarjan over <=64 local vertices with bitmask adjacency
std::vector<int> scc_of(int n, const std::vector<std::uint64_t>& adj, int& count) {
    std::vector<int> comp(n, -1), low(n), num(n, -1), stk, call;
    std::vector<std::uint64_t> rem(adj);
    int timer = 0;
    count = 0;
    std::vector<int> on(n, 0);
    for (int s = 0; s < n; ++s) {
        if (num[s] >= 0) continue;
        call.push_back(s);
        while (!call.empty()) {
            int v = call.back();
            if (num[v] < 0) {
                num[v] = low[v] = timer++;
                stk.push_back(v);
                on[v] = 1;
            }
            bool descended = false;
            while (rem[v]) {
                int w = __builtin_ctzll(rem[v]);
                rem[v] &= rem[v] - 1;
                if (num[w] < 0) {
                    call.push_back(w);
                    descended = true;
                    break;
                }
                if (on[w]) low[v] = std::min(low[v], num[w]);
            }
            if (descended) continue;
            if (low[v] == num[v]) {
                while (true) {
                    int w = stk.back();
                    stk.pop_back();
                    on[w] = 0;
                    comp[w] = count;
                    if (w == v) break;
                }
                ++count;
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back();
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

std::int64_t c_scc(const Choice& b, const std::vector<int>& x) {
    check_sorted_subset(b, x);
    const int n = static_cast<int>(x.size());
    if (n > 64) throw infeasible_size("c_scc: |X| > 64");
    const auto& pats = triple_patterns();
    auto subs = subtriples(b, x);
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& e : subs.entries) {
        const TriplePattern& p = pats[b.sel[e.triple_index]];
        if (!p.good())
            throw not_good_choice("c_scc: choice restricted to X contains I or I^c");
        for (const auto& [from, to] : p.arcs)
            adj[e.pos[from]] |= 1ULL << e.pos[to];
    }
    int t = 0;
    std::vector<int> comp = scc_of(n, adj, t);
    // n_t: unordered component pairs with no arc between them in either direction
    std::vector<std::uint64_t> linked(t, 0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = adj[v];
        while (row) {
            int w = __builtin_ctzll(row);
            row &= row - 1;
            if (comp[v] != comp[w]) {
                linked[comp[v]] |= 1ULL << comp[w];
                linked[comp[w]] |= 1ULL << comp[v];
            }
        }
    }
    std::int64_t n_t = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (!((linked[i] >> j) & 1)) ++n_t;
    return n_t + t + 1;
}

BlockDecomposition block_decomposition(const Choice& b, const std::vector<int>& x) {
    check_sorted_subset(b, x);
    const int n = static_cast<int>(x.size());
    if (n > 64) throw infeasible_size("block_decomposition: |X| > 64");
    BlockDecomposition out;
    out.bound = n + 1;
    out.weak_bound = n + 1;
    if (n == 0) return out;

    const auto& pats = triple_patterns();
    auto subs = subtriples(b, x);
    std::vector<std::uint64_t> adj(n, 0);
    struct IdTriple {
        int pos[3];
        bool is_identity;  // false -> I^c
    };
    std::vector<IdTriple> idtris;
    for (const auto& e : subs.entries) {
        const TriplePattern& p = pats[b.sel[e.triple_index]];
        if (p.good()) {
            for (const auto& [from, to] : p.arcs)
                adj[e.pos[from]] |= 1ULL << e.pos[to];
        } else {
            idtris.push_back({{e.pos[0], e.pos[1], e.pos[2]},
                              p.kind == TriplePattern::Kind::Identity});
        }
    }

    // closure rules to fixpoint: transitivity, plus the I / I^c propagation
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            std::uint64_t reach = adj[v], row = adj[v];
            while (row) {
                int w = __builtin_ctzll(row);
                row &= row - 1;
                reach |= adj[w];
            }
            reach &= ~(1ULL << v);
            if (reach & ~adj[v]) { adj[v] |= reach; changed = true; }
        }
        for (const auto& it : idtris) {
            for (int a = 0; a < 3; ++a)
                for (int bb = 0; bb < 3; ++bb) {
                    if (a == bb) continue;
                    int u = it.pos[a], v = it.pos[bb];
                    int w = it.pos[3 - a - bb];
                    if (!((adj[u] >> v) & 1)) continue;
                    if (it.is_identity) {
                        if (!((adj[u] >> w) & 1)) { adj[u] |= 1ULL << w; changed = true; }
                    } else {
                        if (!((adj[w] >> v) & 1)) { adj[w] |= 1ULL << v; changed = true; }
                    }
                }
        }
    }

    // blocks: classes of "no arc either way" (an equivalence relation here)
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!((adj[i] >> j) & 1) && !((adj[j] >> i) & 1)) parent[find(i)] = find(j);

    std::vector<std::vector<int>> raw(n);
    for (int i = 0; i < n; ++i) raw[find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& blk : raw)
        if (!blk.empty()) blocks.push_back(std::move(blk));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b2) { return a[0] < b2[0]; });

    // order blocks so every earlier->later pair has a forward arc; insert each
    // block at the first position it has an arc into (closure is transitive,
    // so the invariant propagates)
    auto arc_between = [&](const std::vector<int>& a, const std::vector<int>& b2) {
        for (int u : a)
            for (int v : b2)
                if ((adj[u] >> v) & 1) return true;
        return false;
    };
    std::vector<std::vector<int>> order;
    for (auto& blk : blocks) {
        size_t at = order.size();
        for (size_t i = 0; i < order.size(); ++i)
            if (arc_between(blk, order[i])) { at = i; break; }
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(at), std::move(blk));
    }

    // special blocks: distinct i,j in the block with an I-triple through some
    // k in an earlier block, or an I^c-triple through some k in a later block
    std::vector<int> block_of(n);
    for (size_t g = 0; g < order.size(); ++g)
        for (int v : order[g]) block_of[v] = static_cast<int>(g);
    auto kind_of = [&](int u, int v, int w) -> int {
        // 0 none, 1 identity, 2 complement; u,v,w are positions in X
        int va = x[u], vb = x[v], vc = x[w];
        int lo = std::min({va, vb, vc}), hi = std::max({va, vb, vc});
        int mid = va + vb + vc - lo - hi;
        const TriplePattern& p = pats[b.sel[b.triples.index(lo, mid, hi)]];
        if (p.kind == TriplePattern::Kind::Identity) return 1;
        if (p.kind == TriplePattern::Kind::IdentityComplement) return 2;
        return 0;
    };
    out.special.assign(order.size(), 0);
    for (size_t g = 0; g < order.size(); ++g) {
        const auto& blk = order[g];
        if (blk.size() < 2) continue;
        bool sp = false;
        for (size_t a = 0; a < blk.size() && !sp; ++a)
            for (size_t c = a + 1; c < blk.size() && !sp; ++c)
                for (int k = 0; k < n && !sp; ++k) {
                    if (block_of[k] == static_cast<int>(g)) continue;
                    int kk = kind_of(blk[a], blk[c], k);
                    if (kk == 1 && block_of[k] < static_cast<int>(g)) sp = true;
                    if (kk == 2 && block_of[k] > static_cast<int>(g)) sp = true;
                }
        if (sp) out.special[g] = 1;
    }

    for (size_t g = 0; g < order.size(); ++g) {
        if (order[g].size() >= 2) ++out.b;
        if (out.special[g]) ++out.s;
    }
    // report blocks with the original row ids
    out.blocks.reserve(order.size());
    for (const auto& blk : order) {
        std::vector<int> ids;
        for (int p : blk) ids.push_back(x[p]);
        out.blocks.push_back(std::move(ids));
    }
    out.bound = n + out.b - out.s + 1;
    out.weak_bound = n + out.b + 1;
    return out;
}

std::int64_t block_bound(const Choice& b, const std::vector<int>& x) {
    return block_decomposition(b, x).bound;
}

namespace {

template <typename Fn>
void for_each_subset_by_popcount(int m, Fn&& fn) {
    std::vector<int> x;
    std::function<void(int, int, int)> rec = [&](int start, int left, int) {
        if (left == 0) {
            fn(x);
            return;
        }
        for (int v = start; v <= m - left; ++v) {
            x.push_back(v);
            rec(v + 1, left - 1, 0);
            x.pop_back();
        }
    };
    for (int k = 0; k <= m; ++k) rec(0, k, 0);
}

}  // namespace

BigInt forb_from_choice(int m, int r, const Choice& b, int subset_guard) {
    if (b.m != m) throw std::invalid_argument("forb_from_choice: choice is on a different m");
    if (r < 2) throw std::invalid_argument("forb_from_choice: r >= 2 required");
    if (m > subset_guard) throw infeasible_size("forb_from_choice: 2^m subsets over guard");
    const bool good = b.is_good();
    BigInt total = 0;
    for_each_subset_by_popcount(m, [&](const std::vector<int>& x) {
        std::int64_t c = good ? c_scc(b, x) : count_valid_columns(b, x);
        total += BigInt(c) * ipow(BigInt(r - 2), static_cast<unsigned>(m - x.size()));
    });
    return total;
}

ChoiceWitness choice_witness(int m, int r, const Choice& b) {
    ChoiceWitness w;
    w.value = 0;
    for_each_subset_by_popcount(m, [&](const std::vector<int>& x) {
        std::vector<std::uint32_t> vc = valid_columns(b, x);
        // spread each valid (0,1)-column on support X over all {2..r-1}
        // fillings of the complement
        std::vector<int> comp;
        for (int v = 0, i = 0; v < m; ++v) {
            if (i < static_cast<int>(x.size()) && x[i] == v) { ++i; continue; }
            comp.push_back(v);
        }
        std::vector<std::uint8_t> col(m, 0);
        std::function<void(size_t)> fill = [&](size_t ci) {
            if (ci == comp.size()) {
                for (std::uint32_t v : vc) {
                    for (size_t p = 0; p < x.size(); ++p)
                        col[x[p]] = static_cast<std::uint8_t>((v >> p) & 1);
                    w.columns.push_back(col);
                }
                return;
            }
            for (int e = 2; e < r; ++e) {
                col[comp[ci]] = static_cast<std::uint8_t>(e);
                fill(ci + 1);
            }
        };
        fill(0);
    });
    w.value = static_cast<long long>(w.columns.size());
    return w;
}

namespace {

struct GoodOnlySearch {
    int m, r;
    const TripleTable* triples;
    std::vector<std::int64_t> pw;      // pw[j] = (r-1)^j (r-2)^(m-2-j)
    std::vector<std::vector<int>> rem; // rem[d][pair] = remaining triples containing pair
    std::vector<int> mult;
    std::vector<std::uint8_t> sel;
    std::vector<int> good_selectors;
    BigInt base;
    BigInt best = -1;
    std::vector<std::uint8_t> best_sel;
    std::uint64_t budget = 0, visited = 0;
    bool exact = true;

    std::int64_t tcm_ub(int depth) const {
        std::int64_t ub = 0;
        for (size_t e = 0; e < mult.size(); ++e) ub += pw[mult[e]];
        for (int i = depth; i < triples->size(); ++i) {
            const auto& tr = triples->list[i];
            std::int64_t step = 0;
            const int pairs[3] = {pair_index(tr[0], tr[1], m), pair_index(tr[0], tr[2], m),
                                  pair_index(tr[1], tr[2], m)};
            for (int p : pairs) {
                int cap = mult[p] + rem[depth][p];
                step = std::max(step, pw[cap] - pw[cap - 1]);
            }
            ub += step;
        }
        return ub;
    }

    void dfs(int depth) {
        if (!exact) return;
        if (budget && ++visited > budget) { exact = false; return; }
        if (depth == triples->size()) {
            Choice b(m, sel);
            BigInt v = forb_from_choice(m, r, b);
            if (v > best) { best = v; best_sel = sel; }
            return;
        }
        // prune: even the singleton-SCC ideal cannot beat the incumbent
        if (best >= 0 && base + BigInt(tcm_ub(depth)) <= best) return;
        const auto& pats = triple_patterns();
        const auto& tr = triples->list[depth];
        for (int s : good_selectors) {
            sel[depth] = static_cast<std::uint8_t>(s);
            const auto& er = pats[s].tcm_edge_roles;
            int pi = pair_index(tr[er[0]], tr[er[1]], m);
            mult[pi]++;
            dfs(depth + 1);
            mult[pi]--;
        }
    }
};

}  // namespace

ChoiceSearchResult forb_via_choices(int m, int r, ChoiceSearchMode mode, std::uint64_t budget) {
    if (m < 0 || r < 2) throw std::invalid_argument("forb_via_choices: bad m or r");
    TripleTable triples(m);
    const int T = triples.size();
    ChoiceSearchResult res;
    res.argmax = Choice(m);

    if (mode == ChoiceSearchMode::All) {
        if (T > 8) throw infeasible_size("forb_via_choices: 8^C(m,3) over the 1e7 feasibility guard");
        Choice b(m);
        std::vector<std::uint8_t>& sel = b.sel;
        bool done = false;
        res.value = -1;
        while (!done) {
            BigInt v = forb_from_choice(m, r, b);
            ++res.evaluated;
            if (v > res.value) { res.value = v; res.argmax = b; }
            if (budget && res.evaluated >= budget) { res.exact = false; break; }
            int d = T - 1;
            while (d >= 0 && sel[d] == 7) sel[d--] = 0;
            if (d < 0) done = true;
            else sel[d]++;
        }
        return res;
    }

    // GoodOnly: branch and bound over the 6 good selectors per triple, pruned
    // with base + (r-2)^(m-2) * (optimistic TCM weight) from the good-choice
    // upper bound.
    if (m > 12 || r > 10) throw infeasible_size("forb_via_choices: good-only search guard");
    GoodOnlySearch gs;
    gs.m = m;
    gs.r = r;
    gs.triples = &triples;
    gs.budget = budget;
    gs.sel.assign(T, 0);
    gs.mult.assign(std::max(1, m * (m - 1) / 2), 0);
    for (int s = 0; s < 8; ++s)
        if (triple_patterns()[s].good()) gs.good_selectors.push_back(s);
    // pw[j] = (r-1)^j (r-2)^(m-2-j) for j=0..m-2, plus a padding slot so the
    // cap lookup never overruns
    int top = std::max(0, m - 2);
    for (int j = 0; j <= top + 1; ++j) {
        int jj = std::min(j, top);
        std::int64_t v = 1;
        for (int i = 0; i < jj; ++i) v *= (r - 1);
        for (int i = 0; i < top - jj; ++i) v *= (r - 2);
        gs.pw.push_back(v);
    }
    gs.base = BigInt(m) * ipow(BigInt(r - 1), static_cast<unsigned>(std::max(0, m - 1))) +
              ipow(BigInt(r - 1), static_cast<unsigned>(m));
    gs.rem.assign(T + 1, std::vector<int>(gs.mult.size(), 0));
    for (int d = T - 1; d >= 0; --d) {
        gs.rem[d] = gs.rem[d + 1];
        const auto& tr = triples.list[d];
        gs.rem[d][pair_index(tr[0], tr[1], m)]++;
        gs.rem[d][pair_index(tr[0], tr[2], m)]++;
        gs.rem[d][pair_index(tr[1], tr[2], m)]++;
    }
    gs.dfs(0);
    res.value = gs.best;
    res.exact = gs.exact;
    res.evaluated = gs.visited;
    res.argmax = Choice(m, gs.best_sel.empty() ? std::vector<std::uint8_t>(T, 1) : gs.best_sel);
    res.argmax_tcm = tcm_of_choice(res.argmax);
    return res;
}

ChoiceSearchResult forb_via_choices_sample(int m, int r, std::uint64_t n, std::uint64_t seed) {
    TripleTable triples(m);
    Rng rng(seed);
    std::uniform_int_distribution<int> dist(0, 7);
    ChoiceSearchResult res;
    res.value = -1;
    res.exact = false;  // a sample is always a lower bound
    Choice b(m);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (int t = 0; t < triples.size(); ++t)
            b.sel[t] = static_cast<std::uint8_t>(dist(rng));
        BigInt v = forb_from_choice(m, r, b);
        ++res.evaluated;
        if (v > res.value) { res.value = v; res.argmax = b; }
    }
    return res;
}

Tcm tcm_of_choice(const Choice& b) {
    const auto& pats = triple_patterns();
    Tcm g(b.m);
    for (int t = 0; t < b.triples.size(); ++t) {
        const TriplePattern& p = pats[b.sel[t]];
        if (!p.good()) throw not_good_choice("tcm_of_choice: choice contains I or I^c");
        // edge roles {0,1} -> choice 0, {0,2} -> 1, {1,2} -> 2
        int choice = p.tcm_edge_roles[0] == 0 ? (p.tcm_edge_roles[1] == 1 ? 0 : 1) : 2;
        g.set_choice(t, choice);
    }
    return g;
}

ChoiceFromTcm choice_from_tcm(const Tcm& g, const std::vector<int>& order) {
    std::vector<int> rank(g.m);
    if (order.empty()) {
        for (int i = 0; i < g.m; ++i) rank[i] = i;
    } else {
        if (static_cast<int>(order.size()) != g.m)
            throw std::invalid_argument("choice_from_tcm: order must list all vertices");
        for (int i = 0; i < g.m; ++i) rank[order[i]] = i;
    }
    const auto& pats = triple_patterns();
    ChoiceFromTcm out;
    out.choice = Choice(g.m);
    out.uniform = true;
    for (int t = 0; t < g.triples.size(); ++t) {
        const auto& tr = g.triples.list[t];
        int shared_role = 2 - g.edge_choice[t];  // edge {0,1}->shared 2, {0,2}->1, {1,2}->0
        int shared = tr[shared_role];
        int o0 = tr[shared_role == 0 ? 1 : 0];
        int o1 = tr[shared_role == 2 ? 1 : 2];
        bool tail;
        if (rank[shared] < rank[o0] && rank[shared] < rank[o1]) tail = true;
        else if (rank[shared] > rank[o0] && rank[shared] > rank[o1]) tail = false;
        else { tail = true; out.uniform = false; }  // shared vertex sits between the others
        for (const auto& p : pats) {
            if (!p.good()) continue;
            if (p.shared_role == shared_role && p.shared_is_tail == tail) {
                out.choice.sel[t] = p.selector;
                break;
            }
        }
    }
    return out;
}

}  // namespace forb
