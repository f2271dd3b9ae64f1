#include "forb/rmatrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace forb {

RMatrix::RMatrix(int rows_, int alphabet_, std::vector<Column> cols_)
    : rows(rows_), alphabet(alphabet_), cols(std::move(cols_)) {
    check_entries();
}

bool RMatrix::is_simple() const {
    std::set<Column> seen(cols.begin(), cols.end());
    return static_cast<int>(seen.size()) == num_cols();
}

void RMatrix::check_entries() const {
    if (rows < 0 || alphabet < 1) throw std::invalid_argument("RMatrix: bad shape");
    for (const Column& c : cols) {
        if (static_cast<int>(c.size()) != rows)
            throw std::invalid_argument("RMatrix: column length != rows");
        for (std::uint8_t e : c)
            if (e >= alphabet) throw std::invalid_argument("RMatrix: entry out of alphabet");
    }
}

RMatrix RMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    RMatrix out;
    out.rows = rows;
    out.alphabet = alphabet;
    out.cols.resize(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        Column c(rows);
        for (int i = 0; i < rows; ++i) c[i] = cols[col_perm[j]][row_perm[i]];
        out.cols[j] = std::move(c);
    }
    return out;
}

std::string RMatrix::to_json() const {
    nlohmann::json j;
    j["rows"] = rows;
    j["alphabet"] = alphabet;
    auto arr = nlohmann::json::array();
    for (const Column& c : cols) arr.push_back(std::vector<int>(c.begin(), c.end()));
    j["columns"] = arr;
    return j.dump();
}

RMatrix RMatrix::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RMatrix m;
    m.rows = j.at("rows").get<int>();
    m.alphabet = j.at("alphabet").get<int>();
    for (const auto& jc : j.at("columns")) {
        Column c;
        for (const auto& e : jc) c.push_back(static_cast<std::uint8_t>(e.get<int>()));
        m.cols.push_back(std::move(c));
    }
    m.check_entries();
    return m;
}

static RMatrix from_cols(std::vector<Column> cols, int rows, int alphabet = 2) {
    return RMatrix(rows, alphabet, std::move(cols));
}

RMatrix pattern_M() { return from_cols({{0, 0, 1}, {1, 1, 0}}, 3); }

RMatrix pattern_A1() { return from_cols({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}}, 3); }

RMatrix pattern_A2() { return from_cols({{0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, 3); }

RMatrix pattern_I() { return from_cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3); }

RMatrix pattern_Ic() { return from_cols({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 3); }

RMatrix pattern_K(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("pattern_K: k out of range");
    std::vector<Column> cols;
    for (int v = 0; v < (1 << k); ++v) {
        Column c(k);
        for (int i = 0; i < k; ++i) c[i] = static_cast<std::uint8_t>((v >> (k - 1 - i)) & 1);
        cols.push_back(std::move(c));
    }
    return from_cols(std::move(cols), k);
}

bool pattern_by_name(const std::string& name, RMatrix& out) {
    if (name == "M") { out = pattern_M(); return true; }
    if (name == "A1") { out = pattern_A1(); return true; }
    if (name == "A2") { out = pattern_A2(); return true; }
    if (name == "I") { out = pattern_I(); return true; }
    if (name == "Ic") { out = pattern_Ic(); return true; }
    if (name.size() >= 2 && name[0] == 'K') {
        try {
            int k = std::stoi(name.substr(1));
            out = pattern_K(k);
            return true;
        } catch (const std::exception&) { return false; }
    }
    return false;
}

}  // namespace forb
