#include "forb/bounds.hpp"

#include <stdexcept>

#include "forb/choice.hpp"
#include "forb/containment.hpp"
#include "forb/forb_search.hpp"
#include "forb/h_search.hpp"
#include "forb/recurrence.hpp"
#include "forb/rmatrix.hpp"

namespace forb {

namespace {


BigInt base_term(int m, int r) {
    BigInt base = ipow(BigInt(r - 1), static_cast<unsigned>(m));
    if (m >= 1) base += BigInt(m) * ipow(BigInt(r - 1), static_cast<unsigned>(m - 1));
    return base;
}

}  // namespace

BigRat general_upper_coefficient(long alpha_num, long alpha_den) {
    BigRat a(alpha_num, alpha_den);
    if (a < 2) throw std::domain_error("general_upper_coefficient: alpha >= 2 required");
    BigRat a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
    return (a6 + a4 + a + 1) / (a6 * (a2 - 1));
}

BoundReport bounds(int m, int r, long alpha_num, long alpha_den, double eps, int h_max_m) {
    if (m < 0) throw std::domain_error("bounds: m >= 0 required");
    if (r < 3) throw std::domain_error("bounds: r >= 3 required for the forb bounds");
    BoundReport rep;
    rep.m = m;
    rep.r = r;
    rep.eps = eps;
    if (alpha_num == 0) {
        rep.alpha_num = r - 1;
        rep.alpha_den = r - 2;
    } else {
        rep.alpha_num = alpha_num;
        rep.alpha_den = alpha_den;
    }

    BigInt pow_m = ipow(BigInt(r - 1), static_cast<unsigned>(m));
    BigInt m_pow = m >= 1 ? BigInt(m) * ipow(BigInt(r - 1), static_cast<unsigned>(m - 1)) : BigInt(0);
    rep.eq1_lower = m_pow + pow_m;
    rep.eq1_upper = (3 * m_pow) / 2 + pow_m;  // floor of the 3/2 term
    rep.h_upper_alpha2 = m >= 1 ? BigRat(83, 192) * m * ipow(BigInt(2), static_cast<unsigned>(m - 1))
                                : BigRat(0);
    rep.forb_upper_general = BigRat(m_pow) * BigRat(275, 192) + pow_m;  // 1 + 83/192 = 275/192

    if (2 * rep.alpha_den <= rep.alpha_num) {
        rep.coeff_general_upper = general_upper_coefficient(rep.alpha_num, rep.alpha_den);
        if (rep.alpha_num == 2 * rep.alpha_den && *rep.coeff_general_upper != BigRat(83, 192))
            throw std::logic_error("bounds: coefficient at alpha=2 must be 83/192");
    }

    double alpha_r = static_cast<double>(r - 1) / (r - 2);
    rep.lambda_alpha_r = lambda_sum(alpha_r, 1e-9).value;
    double rider = static_cast<double>(r - 1) / (2.0 * (r - 2) * (r - 2)) * rep.lambda_alpha_r;
    rep.forb_lower_general =
        (1.0 + rider - eps) * static_cast<double>(m_pow) + static_cast<double>(pow_m);

    if (m >= 1) {
        H2Table t = h2_table(m, r - 1, r - 2);
        BigRat scale = m >= 2 ? BigRat(ipow(BigInt(r - 2), static_cast<unsigned>(m - 2))) : BigRat(0);
        if (m >= 2)
            rep.sandwich_lower = BigRat(base_term(m, r)) + t.at(m).value * scale;
        if (m >= 2 && m <= h_max_m && m <= 7) {
            HExactResult h = h_exact(m, r - 1, r - 2);
            rep.sandwich_upper = BigRat(base_term(m, r)) + h.value * scale;
        }
    }
    return rep;
}

SandwichReport sandwich_check(int m, int r) {
    if (m < 0 || r < 3) throw std::domain_error("sandwich_check: m >= 0 and r >= 3 required");
    SandwichReport rep;
    rep.m = m;
    rep.r = r;

    // forb(m, r, M): full choice enumeration when tiny, direct search when the
    // column space is small, otherwise the constructed-witness lower bound.
    if (m <= 4) {
        rep.forb_value = forb_via_choices(m, r, ChoiceSearchMode::All).value;
        rep.forb_method = "choices-all";
    } else {
        double cols = std::pow(static_cast<double>(r), m);
        if (cols <= 4096) {
            ForbResult fr = forb_exact(m, r, pattern_M());
            rep.forb_value = fr.value;
            rep.forb_method = "forb-exact";
            rep.forb_exact = fr.exact;
        } else {
            Choice b = choice_from_tcm(h2_argmax_tcm(m, r - 1, r - 2)).choice;
            rep.forb_value = forb_from_choice(m, r, b);
            rep.forb_method = "witness-lower-bound";
            rep.forb_exact = false;
        }
    }

    BigRat scale = m >= 2 ? BigRat(ipow(BigInt(r - 2), static_cast<unsigned>(m - 2))) : BigRat(0);
    if (m >= 1) {
        H2Table t = h2_table(m, r - 1, r - 2);
        rep.lower = t.at(m).value * scale;
    }
    rep.middle = BigRat(rep.forb_value - base_term(m, r));
    if (m >= 1 && m <= 6) {
        rep.upper = h_exact(m, r - 1, r - 2).value * scale;
        rep.has_upper = true;
    } else if (m == 0) {
        rep.upper = 0;
        rep.has_upper = true;
    }
    rep.lower_ok = rep.lower <= rep.middle;
    rep.upper_ok = !rep.has_upper || rep.middle <= rep.upper;
    rep.tight = rep.has_upper && rep.lower == rep.middle && rep.middle == rep.upper;
    return rep;
}

}  // namespace forb
