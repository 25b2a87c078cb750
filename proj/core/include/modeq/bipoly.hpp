#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modeq/rational.hpp"
#include "modeq/unipoly.hpp"

namespace modeq {

/// Bivariate polynomial over Q, sparse map (i, j) -> coefficient of v1^i v2^j.
/// Stored degree bounds always equal the actual maximal exponents and no
/// explicit zeros are kept.
class BiPoly {
public:
    BiPoly(std::string var1 = "x", std::string var2 = "y") : v1_(std::move(var1)), v2_(std::move(var2)) {}

    static BiPoly constant(std::string var1, std::string var2, Rational c);
    // Sum over i of coeffs[i](var2) * var1^i.
    static BiPoly from_coeffs_var1(const std::string& var1, const std::string& var2,
                                   const std::vector<UniPoly>& coeffs);
    static BiPoly from_unipoly_var1(const UniPoly& p, const std::string& var2);
    static BiPoly from_unipoly_var2(const UniPoly& p, const std::string& var1);

    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    BiPoly with_vars(std::string var1, std::string var2) const;

    bool is_zero() const { return t_.empty(); }
    long deg1() const { return d1_; }
    long deg2() const { return d2_; }
    long total_degree() const;

    const Rational& get(long i, long j) const;
    void set(long i, long j, Rational c);
    void add_to(long i, long j, const Rational& c);
    const std::map<std::pair<long, long>, Rational>& terms() const { return t_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator*(const Rational& s) const;
    BiPoly operator/(const Rational& s) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Coefficients of var1^i as polynomials in var2, index 0..deg1.
    std::vector<UniPoly> coeffs_in_var1() const;
    std::vector<UniPoly> coeffs_in_var2() const;

    UniPoly eval_var1(const Rational& x) const;  // polynomial in var2
    UniPoly eval_var2(const Rational& y) const;  // polynomial in var1
    Rational eval(const Rational& x, const Rational& y) const;
    // Substitutes var2 := var1.
    UniPoly diagonal() const;

    BiPoly derivative_var1() const;
    BiPoly derivative_var2() const;

    // Exponents swapped, variable tags kept.
    BiPoly transposed() const;

    // Graded lexicographic order: total degree first, then var1 exponent.
    std::pair<long, long> leading_term_graded() const;  // throws on zero
    const Rational& leading_coeff_graded() const;

    std::string to_string() const;

private:
    void recompute_degrees();
    std::string v1_, v2_;
    std::map<std::pair<long, long>, Rational> t_;
    long d1_ = -1, d2_ = -1;
};

bool is_integer_bipoly(const BiPoly& f);
Integer integer_content(const BiPoly& f);
// f = scale * primitive with primitive over Z, integer content 1, positive
// graded-lex leading coefficient.
struct BiPrimitiveSplit {
    Rational scale;
    BiPoly primitive;
};
BiPrimitiveSplit primitive_split(const BiPoly& f);

// Content of f as a polynomial in var2 with coefficients in Z[var1]
// (the polynomial-in-var1 factor of f), gcd over Z[var1].
UniPoly content_var1(const BiPoly& f);
UniPoly content_var2(const BiPoly& f);

// Exact division; throws std::domain_error when not exact.
BiPoly exact_divide(const BiPoly& f, const BiPoly& g);
bool bipoly_divides(const BiPoly& g, const BiPoly& f);

// gcd of f and g taken as polynomials in var1 over Q(var2), returned as a
// primitive integer polynomial with positive graded-lex leading coefficient
// (content in var2 is not included). Primitive PRS.
BiPoly gcd_var1(const BiPoly& f, const BiPoly& g);

// Squarefree decomposition with respect to var1 (inputs should have trivial
// contents); returns pairwise coprime parts with their multiplicities.
std::vector<std::pair<BiPoly, int>> squarefree_decompose_var1(const BiPoly& f);

}  // namespace modeq
