#pragma once

#include <optional>
#include <string>

#include "forb/common.hpp"

namespace forb {

// Closed-form bounds of the paper evaluated at one (m, r); alpha defaults to
// (r-1)/(r-2). Rational fields are exact; *_fp mirrors for display.
struct BoundReport {
    int m = 0, r = 0;
    long alpha_num = 0, alpha_den = 1;
    double eps = 0;  // slack parameter of the asymptotic lower bound

    BigInt eq1_lower;              // m(r-1)^(m-1) + (r-1)^m
    BigInt eq1_upper;              // floor(3/2 m(r-1)^(m-1)) + (r-1)^m
    BigRat h_upper_alpha2;         // (83/192) m 2^(m-1)
    BigRat forb_upper_general;     // (1 + 83/192) m(r-1)^(m-1) + (r-1)^m
    std::optional<BigRat> coeff_general_upper;  // (a^6+a^4+a+1)/(a^6 (a^2-1)); set when alpha >= 2
    double lambda_alpha_r = 0;     // lambda((r-1)/(r-2)) to 1e-9
    double forb_lower_general = 0; // (1 + (r-1)/(2(r-2)^2) lambda - eps) m(r-1)^(m-1) + (r-1)^m

    // Theorem main endpoints, filled when H2/H are computable (H needs the
    // exact search, so only small m by default).
    std::optional<BigRat> sandwich_lower;  // base + H2(m,alpha_r) (r-2)^(m-2)
    std::optional<BigRat> sandwich_upper;  // base + H(m,alpha_r) (r-2)^(m-2)
};

// alpha_num/alpha_den = 0/1 means "use alpha_r = (r-1)/(r-2)". h_max_m caps
// the exact H search used for the sandwich upper endpoint.
BoundReport bounds(int m, int r, long alpha_num = 0, long alpha_den = 1, double eps = 0.0,
                   int h_max_m = 5);

// Exact coefficient of the general upper bound theorem at rational alpha >= 2.
BigRat general_upper_coefficient(long alpha_num, long alpha_den = 1);

// Theorem main verification: H2 (r-2)^(m-2) <= forb - (r-1)^m - m(r-1)^(m-1)
//                            <= H (r-2)^(m-2).
struct SandwichReport {
    int m = 0, r = 0;
    BigInt forb_value;
    std::string forb_method;  // "choices-all", "forb-exact", or "witness-lower-bound"
    bool forb_exact = true;   // false in witness mode (forb_value is a lower bound)
    BigRat lower;             // H2(m, alpha_r) (r-2)^(m-2)
    BigRat middle;            // forb - (r-1)^m - m(r-1)^(m-1)
    BigRat upper;             // H(m, alpha_r) (r-2)^(m-2); absent if H infeasible
    bool has_upper = false;
    bool lower_ok = false;    // lower <= middle
    bool upper_ok = false;    // middle <= upper (when present)
    bool tight = false;       // lower == middle == upper
};

SandwichReport sandwich_check(int m, int r);

}  // namespace forb
