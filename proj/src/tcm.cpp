#include "forb/tcm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace forb {

Tcm::Tcm(int m_) : m(m_), triples(m_) {
    edge_choice.assign(triples.size(), 0);
    mult.assign(m * (m - 1) / 2, 0);
    for (int t = 0; t < triples.size(); ++t) mult[pair_of_triple(t)]++;
}

Tcm::Tcm(int m_, std::vector<std::uint8_t> choices) : m(m_), triples(m_) {
    if (static_cast<int>(choices.size()) != triples.size())
        throw std::invalid_argument("Tcm: need one choice per triple");
    edge_choice = std::move(choices);
    mult.assign(m * (m - 1) / 2, 0);
    for (int t = 0; t < triples.size(); ++t) mult[pair_of_triple(t)]++;
}

int Tcm::pair_of_triple(int t) const {
    const auto& tr = triples.list[t];
    switch (edge_choice[t]) {
        case 0: return pair_index(tr[0], tr[1], m);
        case 1: return pair_index(tr[0], tr[2], m);
        default: return pair_index(tr[1], tr[2], m);
    }
}

void Tcm::set_choice(int t, int choice) {
    mult[pair_of_triple(t)]--;
    edge_choice[t] = static_cast<std::uint8_t>(choice);
    mult[pair_of_triple(t)]++;
}

std::vector<int> Tcm::recompute_mult() const {
    std::vector<int> fresh(m * (m - 1) / 2, 0);
    for (int t = 0; t < triples.size(); ++t) fresh[pair_of_triple(t)]++;
    return fresh;
}

std::string Tcm::to_json() const {
    nlohmann::json edges = nlohmann::json::object();
    for (int t = 0; t < triples.size(); ++t) {
        const auto& tr = triples.list[t];
        std::string key = std::to_string(tr[0] + 1) + "," + std::to_string(tr[1] + 1) + "," +
                          std::to_string(tr[2] + 1);
        int u, v;
        switch (edge_choice[t]) {
            case 0: u = tr[0]; v = tr[1]; break;
            case 1: u = tr[0]; v = tr[2]; break;
            default: u = tr[1]; v = tr[2]; break;
        }
        edges[key] = std::to_string(u + 1) + "," + std::to_string(v + 1);
    }
    nlohmann::json j;
    j["m"] = m;
    j["edges"] = edges;
    return j.dump();
}

static std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

Tcm Tcm::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    Tcm g(m);
    std::vector<char> seen(g.triples.size(), 0);
    for (const auto& [key, val] : j.at("edges").items()) {
        std::vector<int> tr = parse_csv_ints(key);
        std::vector<int> ed = parse_csv_ints(val.get<std::string>());
        if (tr.size() != 3 || ed.size() != 2) throw std::invalid_argument("Tcm: bad edge entry");
        for (int& x : tr) --x;
        for (int& x : ed) --x;
        std::sort(tr.begin(), tr.end());
        std::sort(ed.begin(), ed.end());
        int choice;
        if (ed[0] == tr[0] && ed[1] == tr[1]) choice = 0;
        else if (ed[0] == tr[0] && ed[1] == tr[2]) choice = 1;
        else if (ed[0] == tr[1] && ed[1] == tr[2]) choice = 2;
        else throw std::invalid_argument("Tcm: edge not inside its triple");
        int t = g.triples.index(tr[0], tr[1], tr[2]);
        g.set_choice(t, choice);
        seen[t] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("Tcm: missing triple in edges map");
    return g;
}

BigInt weight_exact(const Tcm& g, long alpha) {
    if (alpha < 0) throw std::domain_error("weight_exact: alpha must be >= 0");
    BigInt w = 0;
    for (int mu : g.mult) w += ipow(BigInt(alpha), static_cast<unsigned>(mu));
    return w;
}

double weight_fp(const Tcm& g, double alpha) {
    double w = 0;
    for (int mu : g.mult) w += std::pow(alpha, mu);
    return w;
}

namespace {

// bad_z[pair(x,y)] = set of z such that triple xyz does NOT choose xy.
// S is closed  iff  for all x,y in S: bad_z(x,y) is a subset of S.
std::vector<std::uint64_t> bad_z_table(const Tcm& g) {
    if (g.m > 64) throw infeasible_size("closed_sets: m > 64");
    std::vector<std::uint64_t> bad(g.m * (g.m - 1) / 2, 0);
    for (int t = 0; t < g.triples.size(); ++t) {
        const auto& tr = g.triples.list[t];
        int chosen = g.edge_choice[t];
        const int pairs[3][2] = {{tr[0], tr[1]}, {tr[0], tr[2]}, {tr[1], tr[2]}};
        const int other[3] = {tr[2], tr[1], tr[0]};
        for (int e = 0; e < 3; ++e)
            if (e != chosen)
                bad[pair_index(pairs[e][0], pairs[e][1], g.m)] |= (1ULL << other[e]);
    }
    return bad;
}

// smallest closed superset of S (monotone fixpoint)
std::uint64_t closure_of(const Tcm& g, const std::vector<std::uint64_t>& bad, std::uint64_t s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.m; ++x) {
            if (!(s >> x & 1)) continue;
            for (int y = x + 1; y < g.m; ++y) {
                if (!(s >> y & 1)) continue;
                std::uint64_t need = bad[pair_index(x, y, g.m)];
                if ((need & ~s) != 0) { s |= need; changed = true; }
            }
        }
    }
    return s;
}

bool is_closed(const Tcm& g, const std::vector<std::uint64_t>& bad, std::uint64_t s) {
    return closure_of(g, bad, s) == s;
}

}  // namespace

std::vector<std::vector<int>> closed_sets(const Tcm& g) {
    const std::uint64_t full = g.m >= 64 ? ~0ULL : ((1ULL << g.m) - 1);
    std::vector<std::vector<int>> out;
    if (g.m <= 1) {
        if (g.m == 1) out.push_back({0});
        return out;
    }
    auto bad = bad_z_table(g);
    std::vector<char> assigned(g.m, 0);
    for (int v = 0; v < g.m; ++v) {
        if (assigned[v]) continue;
        // closed sets containing v form a chain; climb to the largest proper one
        std::uint64_t s = 1ULL << v;  // singletons are trivially closed
        bool grew = true;
        while (grew) {
            grew = false;
            for (int y = 0; y < g.m && !grew; ++y) {
                if (s >> y & 1) continue;
                std::uint64_t t = closure_of(g, bad, s | (1ULL << y));
                if (t != full) { s = t; grew = true; }
            }
        }
        std::vector<int> set;
        for (int x = 0; x < g.m; ++x)
            if (s >> x & 1) set.push_back(x);
        // mandatory re-check against the definition
        if (!is_closed(g, bad, s) || s == full)
            throw std::logic_error("closed_sets: merge produced a non-closed or full set");
        for (int x : set) {
            if (assigned[x]) throw std::logic_error("closed_sets: sets are not disjoint");
            assigned[x] = 1;
        }
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<int> degree_profile(const Tcm& g, int x) {
    std::vector<int> d(std::max(1, g.m - 1), 0);
    for (int y = 0; y < g.m; ++y)
        if (y != x) d[g.mult[pair_index(x, y, g.m)]]++;
    return d;
}

bool degree_profile_bound_holds(const Tcm& g, int x) {
    std::vector<int> d = degree_profile(g, x);
    int suffix = 0;
    for (int t = static_cast<int>(d.size()) - 1; t >= 0; --t) {
        suffix += d[t];
        if (suffix > g.m - 1 - t) return false;
    }
    return true;
}

Tcm random_tcm(int m, Rng& rng) {
    Tcm g(m);
    std::uniform_int_distribution<int> dist(0, 2);
    for (int t = 0; t < g.triples.size(); ++t) g.set_choice(t, dist(rng));
    return g;
}

Tcm relabeled(const Tcm& g, const std::vector<int>& perm) {
    Tcm out(g.m);
    for (int t = 0; t < g.triples.size(); ++t) {
        const auto& tr = g.triples.list[t];
        int a = perm[tr[0]], b = perm[tr[1]], c = perm[tr[2]];
        int u, v;
        switch (g.edge_choice[t]) {
            case 0: u = a; v = b; break;
            case 1: u = a; v = c; break;
            default: u = b; v = c; break;
        }
        int arr[3] = {a, b, c};
        std::sort(arr, arr + 3);
        if (u > v) std::swap(u, v);
        int choice;
        if (u == arr[0] && v == arr[1]) choice = 0;
        else if (u == arr[0] && v == arr[2]) choice = 1;
        else choice = 2;
        out.set_choice(out.triples.index(a, b, c), choice);
    }
    return out;
}

}  // namespace forb
