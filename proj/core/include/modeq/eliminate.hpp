#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modeq/bipoly.hpp"
#include "modeq/unipoly.hpp"

namespace modeq {

/// content * prod factor_i^{mult_i} reconstructs the factored input exactly;
/// factors are primitive with positive (graded-lex) leading coefficients and
/// pairwise non-associate.
template <class P>
struct FactorList {
    Integer content{1};
    std::vector<std::pair<P, int>> factors;
};

/// The selected modular polynomial together with its selection evidence.
struct ModularPolynomial {
    BiPoly phi;  // primitive irreducible element of Z[x,y]
    long level = 0;
    std::string curve;
    FactorList<UniPoly> diagonal_factors;  // factorization of phi(x,x)
};

struct SingularModulusEntry {
    UniPoly factor;
    int multiplicity = 1;
    Rational norm;  // (-1)^deg * constant / leading
};

struct SingularModuliReport {
    std::vector<SingularModulusEntry> entries;
};

// Sylvester resultant of a(z,x) and b(z,y) with respect to z, exact; computed
// by evaluation at integer nodes, fraction-free integer determinants, and
// Newton interpolation. Throws on z-degree 0 input.
BiPoly resultant_z(const BiPoly& a, const BiPoly& b);

// Determinant of the Sylvester matrix of a and b specialized at (x0, y0);
// used by resultant_z and exposed for the specialization-consistency checks.
Rational resultant_z_specialized(const BiPoly& a, const BiPoly& b, const Rational& x0,
                                 const Rational& y0);

struct ContentSplit {
    UniPoly x_content;  // polynomial-in-x factor (carries the integer content and sign)
    UniPoly y_content;  // polynomial-in-y factor, primitive, positive leading coefficient
    BiPoly core;        // trivial contents, positive graded-lex leading coefficient
};
// x_content * y_content * core reconstructs the input exactly.
ContentSplit strip_content(const BiPoly& r);

// Complete factorization over Q (primitive factorization over Z): squarefree
// decomposition, then Berlekamp mod a good prime, Hensel lifting past twice
// the Landau-Mignotte bound, and subset recombination. Input must have
// integer coefficients.
FactorList<UniPoly> factor_univariate(const UniPoly& f);

// Irreducible factors of a primitive squarefree truly bivariate integer
// polynomial: univariate factorization at a good specialization var2 = y0,
// Hensel lifting in powers of (var2 - y0) to precision deg2+1, subset
// recombination with exact trial division.
std::vector<BiPoly> factor_bivariate(const BiPoly& f);

// strip_content + squarefree decomposition + factor_bivariate on each part;
// univariate contents are factored as well and reported as bivariate factors
// are not: they appear in the two content slots of the result.
struct BivariateFactorization {
    ContentSplit split;
    FactorList<UniPoly> x_content_factors;
    FactorList<UniPoly> y_content_factors;
    FactorList<BiPoly> core_factors;
};
BivariateFactorization factor_bivariate_full(const BiPoly& f);

// Picks the candidate of y-degree p+1 whose diagonal P(x,x) splits into
// linear factors over Q (additionally vanishing at every cm hint when
// supplied); throws PipelineError / AmbiguityError per the selection rules.
ModularPolynomial select_modular_factor(const FactorList<BiPoly>& factors, long p,
                                        const std::optional<std::vector<Rational>>& cm_hints,
                                        const std::string& curve_name);

// Irreducible factors of phi(x,x) with multiplicities and rational norms,
// ordered by degree then coefficients.
SingularModuliReport singular_moduli(const ModularPolynomial& phi);
SingularModuliReport singular_moduli_of_diagonal(const UniPoly& diagonal);

}  // namespace modeq
