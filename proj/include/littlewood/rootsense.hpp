#pragma once

// Detects repeated roots of integer polynomials and classifies where they
// sit: at -1, 0, +1, at other roots of unity (which cyclotomic squares
// divide), or at a residual non-cyclotomic repeated factor.

#include <set>

#include "littlewood/polyint.hpp"

namespace littlewood {

struct RootReport {
    int mult_at_minus1 = 0;
    int mult_at_zero = 0;
    int mult_at_plus1 = 0;
    // k >= 3 with Phi_k^2 dividing the polynomial, up to the scan bound.
    std::set<unsigned long> cyclotomic_square_indices;
    // gcd(P, P') kept a nonconstant factor after dividing out all detected
    // (z -+ 1)- and Phi_k-powers.
    bool has_noncyclotomic_repeat = false;
    int repeated_part_degree = 0;
};

// True iff gcd(p, p') is nonconstant. Throws on the zero polynomial
// (every point is a root of it; callers account for that event separately).
bool has_repeated_root(const IntPoly& p);

// Largest m with (z - a)^m dividing p, for a in {-1, 0, 1}.
int multiplicity_at(const IntPoly& p, int a);

// Full classification. Cyclotomic indices are found by trial division of
// gcd(p, p') by Phi_k for 3 <= k <= k_max. The default bound 2*deg(p)
// covers every k that can occur for degrees up to a few dozen; scans of
// much larger polynomials should raise k_max (totient(k) >= sqrt(k/2)
// makes deg(p)^2/2 always sufficient).
RootReport classify(const IntPoly& p, unsigned long k_max);
RootReport classify(const IntPoly& p);

}  // namespace littlewood
