#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modeq/rational.hpp"

namespace modeq {

/// Dense univariate polynomial over Q, coefficients stored by ascending degree.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> ascending);

    static UniPoly constant(std::string var, Rational c);
    static UniPoly monomial(std::string var, long degree, Rational c = Rational(1));
    // (x - a)
    static UniPoly linear_root(std::string var, const Rational& a);

    const std::string& variable() const { return var_; }
    UniPoly with_variable(std::string var) const;

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    // Zero outside the stored range.
    const Rational& coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    const Rational& constant_term() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    UniPoly operator*(const Rational& s) const;
    UniPoly operator/(const Rational& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    // p(x + c)
    UniPoly shifted(const Rational& c) const;
    // p(s * x)
    UniPoly scaled_arg(const Rational& s) const;
    // x^deg * p(1/x)
    UniPoly reversed() const;
    UniPoly monic() const;
    UniPoly pow(unsigned long e) const;

    // Deterministic total order: degree first, then coefficients from the top down.
    static int compare(const UniPoly& a, const UniPoly& b);

    // Descending-degree rendering, e.g. "3*t^4 - 119*t^3 + 10368".
    std::string to_string() const;

private:
    void trim();
    std::string var_;
    std::vector<Rational> c_;
};

UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
// Throws std::domain_error when b = 0; returns (q, r) with a = q*b + r, deg r < deg b.
std::pair<UniPoly, UniPoly> poly_divrem(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0. Primitive PRS over Z internally.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
// Throws std::domain_error when the division is not exact.
UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b);
bool poly_divides(const UniPoly& d, const UniPoly& a);

// f = scale * primitive with primitive in Z[x], content 1, positive leading
// coefficient; the zero polynomial yields scale 0, primitive 0.
struct PrimitiveSplit {
    Rational scale;
    UniPoly primitive;
};
PrimitiveSplit primitive_split(const UniPoly& f);

bool is_integer_poly(const UniPoly& f);
// gcd of the coefficients of an integer polynomial (0 for the zero polynomial).
Integer integer_content(const UniPoly& f);
// lcm over Z[x] of integer polynomials, primitive-times-content form, positive leading coefficient.
UniPoly poly_lcm_z(const UniPoly& a, const UniPoly& b);
// gcd over Z[x] including integer content, positive leading coefficient.
UniPoly poly_gcd_z(const UniPoly& a, const UniPoly& b);

// Exact Newton interpolation through (nodes[i], values[i]); nodes must be distinct.
UniPoly interpolate(const std::string& var, const std::vector<Rational>& nodes,
                    const std::vector<Rational>& values);

}  // namespace modeq
