#pragma once

#include <vector>

#include "modeq/bipoly.hpp"
#include "modeq/ratfun.hpp"

namespace modeq {

/// Elementary symmetric functions e_0..e_{p+1} of the p+1 Hecke summand
/// ratios, as rational functions of the Hauptmodul.
struct SymmetricData {
    long prime = 0;
    std::vector<RationalFunction> e;  // e[0] = 1, count prime + 2
};

/// Psi(z,x) = psi(z,x)/den(x) with integer cleared numerator; monic of degree
/// p+1 in z in the sense that the z^{p+1} coefficient of psi equals den(x).
struct PsiFunction {
    BiPoly psi;   // variables (z, x)
    UniPoly den;  // in x
    long prime = 0;
};

// e_m via m e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i from p_1..p_{p+1}.
SymmetricData newton_to_elementary(const std::vector<RationalFunction>& power_sums);

// Back-conversion used as an independent check: p_m from e_1..e_n.
std::vector<RationalFunction> elementary_to_power_sums(const std::vector<RationalFunction>& e,
                                                       std::size_t count);

// Psi(z,x) = sum_m (-1)^m e_m(x) z^{p+1-m}, cleared to the least common
// denominator; joint content removed, den(x) has a positive leading
// coefficient.
PsiFunction build_psi(const SymmetricData& sym);

// z^{p+1} Psi(1/z, y) on the cleared numerator: reverses the z-coefficients
// and renames x to y.
BiPoly reverse_psi(const PsiFunction& psi);

}  // namespace modeq
