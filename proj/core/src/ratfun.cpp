#include "modeq/ratfun.hpp"

#include <stdexcept>

namespace modeq {

RationalFunction::RationalFunction(const UniPoly& num)
    : num_(num), den_(UniPoly::constant(num.variable(), Rational(1))) {
    normalize();
}

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RationalFunction::RationalFunction(std::string var, Rational value)
    : num_(UniPoly::constant(var, std::move(value))), den_(UniPoly::constant(var, Rational(1))) {
    normalize();
}

void RationalFunction::normalize() {
    const std::string var = den_.variable();
    if (num_.is_zero()) {
        num_ = UniPoly(var);
        den_ = UniPoly::constant(var, Rational(1));
        return;
    }
    const UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    // Scale to coprime integer polynomials with coprime contents and a
    // positive leading denominator coefficient.
    auto [sn, pn] = primitive_split(num_);
    auto [sd, pd] = primitive_split(den_);
    const Rational s = sn / sd;
    num_ = pn * Rational(s.num());
    den_ = pd * Rational(s.den());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& s) const {
    return RationalFunction(num_ * s, den_);
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::with_variable(const std::string& var) const {
    RationalFunction r = *this;
    r.num_ = r.num_.with_variable(var);
    r.den_ = r.den_.with_variable(var);
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_normalize(const UniPoly& num, const UniPoly& den) {
    return RationalFunction(num, den);
}

}  // namespace modeq
