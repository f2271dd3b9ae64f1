// forbcfg: forbidden-configuration and triangular-choice-multigraph toolkit.
//
// Subcommands: forb-exact, forb-choices, h-exact, h-local, h2, bounds,
// lambda, sandwich, verify, emit-tables. JSON goes to stdout (or --out);
// floats are printed to 6 significant digits, exact integers in full.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <numeric>
#include <algorithm>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "forb/bounds.hpp"
#include "forb/choice.hpp"
#include "forb/containment.hpp"
#include "forb/forb_search.hpp"
#include "forb/h_search.hpp"
#include "forb/local_search.hpp"
#include "forb/recurrence.hpp"
#include "forb/rmatrix.hpp"
#include "forb/verify.hpp"

using nlohmann::json;
using namespace forb;

namespace {

double sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json rat_to_json(const BigRat& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return big_to_json(boost::multiprecision::numerator(v));
    json j;
    j["num"] = big_to_json(boost::multiprecision::numerator(v));
    j["den"] = big_to_json(boost::multiprecision::denominator(v));
    j["fp"] = sig6(static_cast<double>(v));
    return j;
}

// "2", "1.5", or "3/2" as an exact rational
bool parse_alpha(const std::string& s, long& num, long& den) {
    num = 0;
    den = 1;
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            num = std::stol(s.substr(0, slash));
            den = std::stol(s.substr(slash + 1));
        } catch (...) { return false; }
        return den >= 1;
    }
    size_t dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            num = std::stol(s);
            return true;
        }
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.size() > 12) return false;
        num = std::stol(whole + frac);
        den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        long g = std::gcd(num, den);
        if (g > 0) { num /= g; den /= g; }
        return true;
    } catch (...) { return false; }
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

void emit_text(const std::string& s, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << s;
    } else {
        std::ofstream f(out_path);
        f << s;
    }
}

RMatrix load_pattern(const std::string& spec) {
    RMatrix f;
    if (pattern_by_name(spec, f)) return f;
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("pattern '" + spec + "' is neither builtin nor a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    return RMatrix::from_json(ss.str());
}

std::string pair_key(int u, int v) {
    return std::to_string(u + 1) + "," + std::to_string(v + 1);
}

json tcm_report(const Tcm& g) {
    json mult = json::object();
    for (int i = 0; i < g.m; ++i)
        for (int j = i + 1; j < g.m; ++j)
            mult[pair_key(i, j)] = g.mult[pair_index(i, j, g.m)];
    json cs = json::array();
    for (const auto& s : closed_sets(g)) {
        json set = json::array();
        for (int v : s) set.push_back(v + 1);
        cs.push_back(set);
    }
    json j;
    j["multiplicities"] = mult;
    j["closed_sets"] = cs;
    j["edges"] = json::parse(g.to_json())["edges"];
    return j;
}

int cmd_verify(const std::string& suite) {
    VerifyContext ctx;
    auto results = run_suite(suite, ctx);
    if (!results) {
        std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
        return 2;
    }
    int failures = 0;
    for (const auto& r : *results) {
        std::printf("%-5s %s / %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(),
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        if (!r.pass) ++failures;
    }
    std::printf("%d checks, %d failures\n", static_cast<int>(results->size()), failures);
    return failures ? 1 : 0;
}


json h_table_json(int max_h_m) {
    // paper values: H(m) for m=1..6 and h(m) rounded to 3 decimals
    const long long expect_H[] = {0, 1, 4, 12, 30, 73};
    const double expect_h[] = {0.000, 0.250, 0.333, 0.375, 0.375, 0.380};
    json rows = json::array();
    for (int m = 1; m <= std::min(max_h_m, 6); ++m) {
        HExactResult r = h_exact(m, 2);
        double h = m >= 1 ? static_cast<double>(r.value) / (m * std::pow(2.0, m - 1)) : 0.0;
        json row;
        row["m"] = m;
        row["H"] = rat_to_json(r.value);
        row["h"] = sig6(h);
        row["expected_H"] = expect_H[m - 1];
        row["expected_h"] = expect_h[m - 1];
        row["match"] = r.value == BigRat(expect_H[m - 1]) &&
                       std::abs(h - expect_h[m - 1]) < 5e-4;
        rows.push_back(row);
    }
    return rows;
}

json h_upper_addend_table_json(int max_h_m) {
    // h(m) + (2/3) 2^-m, the quantity the upper-bound proof tabulates
    const double expect[] = {0.333, 0.417, 0.417, 0.417, 0.396, 0.391};
    json rows = json::array();
    for (int m = 1; m <= std::min(max_h_m, 6); ++m) {
        HExactResult r = h_exact(m, 2);
        double v = static_cast<double>(r.value) / (m * std::pow(2.0, m - 1)) +
                   (2.0 / 3.0) * std::pow(2.0, -m);
        json row;
        row["m"] = m;
        row["value"] = sig6(v);
        row["expected"] = expect[m - 1];
        row["match"] = std::abs(v - expect[m - 1]) < 5e-4;
        rows.push_back(row);
    }
    return rows;
}

json h2_table_json() {
    const long long expect_H2[] = {0, 1, 4, 12, 30, 73, 172, 400};
    const double expect_h2[] = {0.000, 0.250, 0.333, 0.375, 0.375, 0.380, 0.384, 0.391};
    H2Table t = h2_table(8, 2);
    json rows = json::array();
    for (int m = 1; m <= 8; ++m) {
        json row;
        row["m"] = m;
        row["H2"] = rat_to_json(t.at(m).value);
        row["h2"] = sig6(t.at(m).normalized);
        row["expected_H2"] = expect_H2[m - 1];
        row["expected_h2"] = expect_h2[m - 1];
        row["match"] = t.at(m).value == BigRat(expect_H2[m - 1]) &&
                       std::abs(t.at(m).normalized - expect_h2[m - 1]) < 5e-4;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forbidden-configuration / triangular-choice-multigraph toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the artifact here instead of stdout")->capture_default_str();
    std::string format;
    app.add_option("--format", format, "json | csv | text (defaults per subcommand)");

    // ---- forb-exact ----
    auto* fe = app.add_subcommand("forb-exact", "exact forb(m,r,F) by search");
    int fe_m = 3, fe_r = 3;
    std::string fe_pattern = "M";
    std::uint64_t fe_budget = 0;
    bool fe_witness = false;
    fe->add_option("--m", fe_m, "rows")->required();
    fe->add_option("--r", fe_r, "alphabet size")->required();
    fe->add_option("--pattern", fe_pattern, "builtin name (M, A1, A2, I, Ic, Kk) or JSON file");
    fe->add_option("--budget", fe_budget, "node budget (0 = unlimited)");
    fe->add_flag("--witness", fe_witness, "include an extremal witness matrix");

    // ---- forb-choices ----
    auto* fc = app.add_subcommand("forb-choices", "forb(m,r,M) via the choice decomposition");
    int fc_m = 3, fc_r = 3;
    std::string fc_mode = "all";
    std::uint64_t fc_n = 0, fc_seed = 0, fc_budget = 0;
    bool fc_have_seed = false;
    fc->add_option("--m", fc_m)->required();
    fc->add_option("--r", fc_r)->required();
    fc->add_option("--mode", fc_mode, "all | good | sample");
    fc->add_option("--n", fc_n, "sample size (mode=sample)");
    fc->add_option("--seed", fc_seed, "sample seed (mode=sample)")->each([&](const std::string&) {
        fc_have_seed = true;
    });
    fc->add_option("--budget", fc_budget, "evaluation budget (0 = unlimited)");

    // ---- h-exact ----
    auto* he = app.add_subcommand("h-exact", "exact H(m,alpha) over all TCMs");
    int he_m = 4;
    std::string he_alpha = "2";
    std::uint64_t he_budget = 0;
    bool he_m7 = false;
    he->add_option("--m", he_m)->required();
    he->add_option("--alpha", he_alpha, "rational: 2, 1.5, or 3/2");
    he->add_option("--budget", he_budget, "node budget (0 = unlimited)");
    he->add_flag("--allow-m7", he_m7, "permit the 3^35-state m=7 search");

    // ---- h-local ----
    auto* hl = app.add_subcommand("h-local", "hill-climbing lower bound for H(m,alpha)");
    int hl_m = 8;
    std::string hl_alpha = "2";
    std::uint64_t hl_seed = 0, hl_iters = 200000;
    std::string hl_input;
    bool hl_have_seed = false;
    hl->add_option("--m", hl_m)->required();
    hl->add_option("--alpha", hl_alpha);
    hl->add_option("--seed", hl_seed, "restart seed (required)")->each([&](const std::string&) {
        hl_have_seed = true;
    });
    hl->add_option("--iters", hl_iters, "move budget");
    hl->add_option("--input", hl_input, "start from this TCM JSON file");

    // ---- h2 ----
    auto* h2c = app.add_subcommand("h2", "H2(m,alpha) dynamic program (CSV)");
    int h2_max_m = 8;
    std::string h2_alpha = "2";
    bool h2_exact = false;
    h2c->add_option("--max-m", h2_max_m)->required();
    h2c->add_option("--alpha", h2_alpha);
    h2c->add_flag("--exact", h2_exact, "print H2 exactly instead of 6 significant digits");

    // ---- bounds ----
    auto* bd = app.add_subcommand("bounds", "closed-form bound report");
    int bd_m = 4, bd_r = 3;
    std::string bd_alpha;
    double bd_eps = 0.0;
    bd->add_option("--m", bd_m)->required();
    bd->add_option("--r", bd_r)->required();
    bd->add_option("--alpha", bd_alpha, "override alpha for the H(m,alpha) bound");
    bd->add_option("--eps", bd_eps, "epsilon of the asymptotic lower bound");

    // ---- lambda ----
    auto* lc = app.add_subcommand("lambda", "lambda(alpha) with certified truncation");
    std::string lc_alpha = "2";
    double lc_eps = 1e-9;
    lc->add_option("--alpha", lc_alpha)->required();
    lc->add_option("--eps", lc_eps)->required();

    // ---- sandwich ----
    auto* sw = app.add_subcommand("sandwich", "verify the main-theorem sandwich at (m,r)");
    int sw_m = 4, sw_r = 3;
    sw->add_option("--m", sw_m)->required();
    sw->add_option("--r", sw_r)->required();

    // ---- verify ----
    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    std::string vf_suite = "all";
    vf->add_option("--suite", vf_suite, "suite name or 'all'");

    // ---- emit-tables ----
    auto* et = app.add_subcommand("emit-tables", "reproduce the paper's numeric tables");
    int et_max_h_m = 6;
    et->add_option("--max-h-m", et_max_h_m, "cap the exact-H column (6 needs the big search)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (!format.empty() && format != "json" && !*h2c && !*lc)
            throw CLI::ValidationError("this subcommand emits json only");
        if (*fe) {
            ForbOptions o;
            o.node_budget = fe_budget;
            ForbResult r = forb_exact(fe_m, fe_r, load_pattern(fe_pattern), o);
            json j{{"schema", 1},   {"command", "forb-exact"}, {"m", fe_m},
                   {"r", fe_r},     {"pattern", fe_pattern},   {"value", r.value},
                   {"exact", r.exact}};
            j["status"] = r.exact ? "exact" : "lower-bound";
            if (fe_witness) j["witness"] = json::parse(r.witness.to_json());
            emit(j, out_path);
            return 0;
        }
        if (*fc) {
            ChoiceSearchResult r;
            if (fc_mode == "all") {
                r = forb_via_choices(fc_m, fc_r, ChoiceSearchMode::All, fc_budget);
            } else if (fc_mode == "good") {
                r = forb_via_choices(fc_m, fc_r, ChoiceSearchMode::GoodOnly, fc_budget);
            } else if (fc_mode == "sample") {
                if (!fc_have_seed || fc_n == 0)
                    throw CLI::ValidationError("--mode sample requires --n and --seed");
                r = forb_via_choices_sample(fc_m, fc_r, fc_n, fc_seed);
            } else {
                throw CLI::ValidationError("--mode must be all, good, or sample");
            }
            json j{{"schema", 1}, {"command", "forb-choices"}, {"m", fc_m}, {"r", fc_r},
                   {"mode", fc_mode}};
            j["value"] = big_to_json(r.value);
            j["status"] = r.exact ? "exact" : "lower-bound";
            j["evaluated"] = r.evaluated;
            j["argmax_choice"] = json::parse(r.argmax.to_json());
            j["argmax_is_good"] = r.argmax.is_good();
            if (r.argmax_tcm) j["argmax_tcm"] = tcm_report(*r.argmax_tcm);
            emit(j, out_path);
            return 0;
        }
        if (*he) {
            long num, den;
            if (!parse_alpha(he_alpha, num, den)) throw CLI::ValidationError("bad --alpha");
            HExactOptions o;
            o.node_budget = he_budget;
            o.allow_m7 = he_m7;
            HExactResult r = h_exact(he_m, num, den, o);
            json j{{"schema", 1}, {"command", "h-exact"}, {"m", he_m}, {"alpha", he_alpha}};
            j["value"] = rat_to_json(r.value);
            j["value_fp"] = sig6(r.value_fp);
            j["status"] = r.exact ? "exact" : "lower-bound";
            j.update(tcm_report(r.argmax));
            emit(j, out_path);
            return 0;
        }
        if (*hl) {
            if (!hl_have_seed) throw CLI::ValidationError("h-local requires --seed");
            long num, den;
            if (!parse_alpha(hl_alpha, num, den)) throw CLI::ValidationError("bad --alpha");
            Tcm start(hl_m);
            if (!hl_input.empty()) {
                std::ifstream in(hl_input);
                if (!in) throw CLI::ValidationError("cannot read --input");
                std::stringstream ss;
                ss << in.rdbuf();
                start = Tcm::from_json(ss.str());
            }
            LocalSearchOptions o;
            o.iters = hl_iters;
            LocalSearchResult r = local_search(start, num, den, hl_seed, o);
            json j{{"schema", 1}, {"command", "h-local"}, {"m", start.m}, {"alpha", hl_alpha},
                   {"seed", hl_seed}};
            j["value"] = rat_to_json(r.weight);
            j["value_fp"] = sig6(r.weight_fp);
            j["status"] = "lower-bound";
            j["moves"] = {{"single", r.moves_single}, {"pair", r.moves_pair}, {"chain", r.moves_chain}};
            j.update(tcm_report(r.tcm));
            emit(j, out_path);
            return 0;
        }
        if (*h2c) {
            long num, den;
            if (!parse_alpha(h2_alpha, num, den)) throw CLI::ValidationError("bad --alpha");
            if (h2_exact && den != 1)
                throw CLI::ValidationError("--exact integer output needs an integral alpha");
            if (!format.empty() && format != "csv" && format != "json")
                throw CLI::ValidationError("h2 supports --format csv or json");
            H2Table t = h2_table(h2_max_m, num, den);
            if (format == "json") {
                json rows = json::array();
                for (int m = 1; m <= h2_max_m; ++m) {
                    const H2Entry& e = t.at(m);
                    json row{{"m", m}, {"H2", rat_to_json(e.value)}, {"h2", sig6(e.normalized)}};
                    if (m >= 3) {
                        row["split_a"] = e.argmax_splits.front().first;
                        row["split_b"] = e.argmax_splits.front().second;
                        json ties = json::array();
                        for (auto [a, b] : e.argmax_splits) ties.push_back({a, b});
                        row["argmax_splits"] = ties;
                    }
                    rows.push_back(row);
                }
                json j{{"schema", 1}, {"command", "h2"}, {"alpha", h2_alpha}, {"rows", rows}};
                emit(j, out_path);
                return 0;
            }
            std::ostringstream csv;
            csv << "m,H2,h2,split_a,split_b,predicted_k,agrees_with_theorem\n";
            for (int m = 1; m <= h2_max_m; ++m) {
                const H2Entry& e = t.at(m);
                csv << m << ",";
                if (h2_exact) csv << e.value;
                else {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.6g", e.value_fp);
                    csv << buf;
                }
                csv << "," << sig6(e.normalized) << ",";
                if (m >= 3) csv << e.argmax_splits.front().first << "," << e.argmax_splits.front().second;
                else csv << ",";
                if (m >= 3 && num >= 2 * den) {
                    PredictedSplit p = predicted_split(m, num, den);
                    csv << "," << p.k << ","
                        << (std::find(e.argmax_splits.begin(), e.argmax_splits.end(), p.split) !=
                                    e.argmax_splits.end()
                                ? "true"
                                : "false");
                } else {
                    csv << ",,";
                }
                csv << "\n";
            }
            emit_text(csv.str(), out_path);
            return 0;
        }
        if (*bd) {
            long num = 0, den = 1;
            if (!bd_alpha.empty() && !parse_alpha(bd_alpha, num, den))
                throw CLI::ValidationError("bad --alpha");
            BoundReport r = bounds(bd_m, bd_r, num, den, bd_eps);
            json j{{"schema", 1}, {"command", "bounds"}, {"m", r.m}, {"r", r.r}};
            j["alpha"] = {{"num", r.alpha_num}, {"den", r.alpha_den}};
            j["eq1_lower"] = big_to_json(r.eq1_lower);
            j["eq1_upper"] = big_to_json(r.eq1_upper);
            j["h_upper_alpha2"] = rat_to_json(r.h_upper_alpha2);
            j["forb_upper_general"] = rat_to_json(r.forb_upper_general);
            if (r.coeff_general_upper.has_value())
                j["general_upper_coefficient"] = rat_to_json(*r.coeff_general_upper);
            j["lambda_alpha_r"] = sig6(r.lambda_alpha_r);
            j["eps"] = r.eps;
            j["forb_lower_general"] = sig6(r.forb_lower_general);
            if (r.sandwich_lower) j["sandwich_lower"] = rat_to_json(*r.sandwich_lower);
            if (r.sandwich_upper) j["sandwich_upper"] = rat_to_json(*r.sandwich_upper);
            emit(j, out_path);
            return 0;
        }
        if (*lc) {
            long num, den;
            if (!parse_alpha(lc_alpha, num, den)) throw CLI::ValidationError("bad --alpha");
            if (!format.empty() && format != "text" && format != "json")
                throw CLI::ValidationError("lambda supports --format text or json");
            LambdaResult r = lambda_sum(static_cast<double>(num) / den, lc_eps);
            if (format == "json") {
                json j{{"schema", 1},        {"command", "lambda"},
                       {"alpha", lc_alpha},  {"eps", lc_eps},
                       {"value", sig6(r.value)}, {"terms", r.terms},
                       {"tail_bound", r.tail_bound}};
                emit(j, out_path);
                return 0;
            }
            char line[160];
            std::snprintf(line, sizeof line, "lambda(%s) = %.6g (terms=%d, tail_bound=%.3g)\n",
                          lc_alpha.c_str(), r.value, r.terms, r.tail_bound);
            emit_text(line, out_path);
            return 0;
        }
        if (*sw) {
            SandwichReport r = sandwich_check(sw_m, sw_r);
            json j{{"schema", 1}, {"command", "sandwich"}, {"m", r.m}, {"r", r.r}};
            j["forb"] = big_to_json(r.forb_value);
            j["forb_method"] = r.forb_method;
            j["status"] = r.forb_exact ? "exact" : "lower-bound";
            j["lower"] = rat_to_json(r.lower);
            j["middle"] = rat_to_json(r.middle);
            if (r.has_upper) j["upper"] = rat_to_json(r.upper);
            j["lower_ok"] = r.lower_ok;
            j["upper_ok"] = r.upper_ok;
            j["tight"] = r.tight;
            emit(j, out_path);
            return r.lower_ok && r.upper_ok ? 0 : 1;
        }
        if (*vf) return cmd_verify(vf_suite);
        if (*et) {
            json j{{"schema", 1}, {"command", "emit-tables"}};
            j["tables"] = {{"h_table", h_table_json(et_max_h_m)},
                           {"h_upper_addend_table", h_upper_addend_table_json(et_max_h_m)},
                           {"h2_table", h2_table_json()}};
            emit(j, out_path);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
