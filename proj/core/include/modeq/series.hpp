#pragma once

#include <string>
#include <vector>

#include "modeq/rational.hpp"
#include "modeq/unipoly.hpp"

namespace modeq {

/// Truncated power series with a rational leading exponent:
///   t^offset * (c_0 + c_1 t + ... + c_N t^N) + O(t^{offset+N+1}),  c_0 != 0.
/// A series that is zero to the known precision stores no coefficients; its
/// offset then records the first exponent at which the value is unknown,
/// i.e. the value is O(t^offset).
class PuiseuxSeries {
public:
    PuiseuxSeries(Rational offset, std::vector<Rational> coeffs, std::string var = "t");
    static PuiseuxSeries zero(Rational unknown_from, std::string var = "t");

    bool is_zero() const { return c_.empty(); }
    const Rational& offset() const { return offset_; }
    // Truncation order N (count of stored coefficients minus one); -1 for zero.
    long order() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const std::string& variable() const { return var_; }

    // Largest exponent E such that every coefficient of t^e, e <= E, is known.
    Rational known_through() const;

    // Adds d to every exponent (multiplication by t^d).
    PuiseuxSeries shifted_exponent(const Rational& d) const;
    // Drops coefficients above absolute exponent bound.
    PuiseuxSeries truncated_through(const Rational& bound) const;

    Rational coeff_at(const Rational& exponent) const;

    std::string to_string() const;

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return a.offset_ == b.offset_ && a.c_ == b.c_;
    }

private:
    Rational offset_;
    std::vector<Rational> c_;
    std::string var_;
};

PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
// Throws std::domain_error on a zero series.
PuiseuxSeries series_recip(const PuiseuxSeries& s);
PuiseuxSeries series_pow(const PuiseuxSeries& s, unsigned long e);
// Offsets must differ by an integer.
PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries series_sub(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries series_derivative(const PuiseuxSeries& s);

// Polynomial as a series, truncated at order n (absolute exponent n).
PuiseuxSeries series_from_poly(const UniPoly& p, long n);

}  // namespace modeq
