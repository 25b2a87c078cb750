#pragma once

#include <string>

#include "modeq/unipoly.hpp"

namespace modeq {

/// Univariate rational function in canonical form: numerator and denominator
/// are coprime integer polynomials, the denominator has a positive leading
/// coefficient, and gcd(content(num), content(den)) = 1. Zero is 0/1.
/// Equality of canonical forms decides equality of rational functions.
class RationalFunction {
public:
    RationalFunction() : num_("x"), den_(UniPoly::constant("x", Rational(1))) {}
    explicit RationalFunction(const UniPoly& num);
    RationalFunction(const UniPoly& num, const UniPoly& den);
    explicit RationalFunction(std::string var, Rational value = Rational(0));

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& variable() const { return num_.variable(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator*(const Rational& s) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Throws std::domain_error at a pole.
    Rational eval(const Rational& x) const;
    RationalFunction with_variable(const std::string& var) const;

    std::string to_string() const;

private:
    UniPoly num_, den_;
    void normalize();
};

// Throws std::domain_error on a zero denominator.
RationalFunction ratfun_normalize(const UniPoly& num, const UniPoly& den);

}  // namespace modeq
