#include "modeq/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modeq {

namespace {

void require_same_var(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.variable() != b.variable())
        throw std::invalid_argument("series variable mismatch: '" + a.variable() + "' vs '" +
                                    b.variable() + "'");
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Rational offset, std::vector<Rational> coeffs, std::string var)
    : offset_(std::move(offset)), c_(std::move(coeffs)), var_(std::move(var)) {
    // Strip leading zeros without losing precision: the absolute known order
    // offset+N is preserved by moving the offset up.
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        // Zero to the whole known precision: value is O(t^{offset+N+1}).
        offset_ += Rational(static_cast<long>(c_.size()));
        c_.clear();
    } else if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        offset_ += Rational(static_cast<long>(lead));
    }
    // Trailing zeros stay: they witness coefficients known to vanish.
}

PuiseuxSeries PuiseuxSeries::zero(Rational unknown_from, std::string var) {
    PuiseuxSeries s(std::move(unknown_from), {}, std::move(var));
    return s;
}

Rational PuiseuxSeries::known_through() const {
    if (is_zero()) return offset_ - Rational(1);
    return offset_ + Rational(order());
}

PuiseuxSeries PuiseuxSeries::shifted_exponent(const Rational& d) const {
    PuiseuxSeries r = *this;
    r.offset_ += d;
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated_through(const Rational& bound) const {
    if (is_zero()) return bound < known_through() ? zero(bound + Rational(1), var_) : *this;
    if (bound < offset_) return zero(bound + Rational(1), var_);
    const Rational len = bound - offset_;  // keep exponents offset..bound
    if (len >= Rational(order())) return *this;
    std::vector<Rational> c(c_.begin(), c_.begin() + static_cast<long>(len.floor().get_si()) + 1);
    return PuiseuxSeries(offset_, std::move(c), var_);
}

Rational PuiseuxSeries::coeff_at(const Rational& exponent) const {
    if (is_zero()) return Rational(0);
    const Rational idx = exponent - offset_;
    if (!idx.is_integer() || idx.sign() < 0) return Rational(0);
    const long i = static_cast<long>(idx.num().get_si());
    if (i > order()) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

std::string PuiseuxSeries::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << var_ << "^(" << offset_.to_string() << "))";
        return os.str();
    }
    bool first = true;
    for (long n = 0; n <= order(); ++n) {
        const Rational& c = c_[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        const Rational e = offset_ + Rational(n);
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (e.is_zero()) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << var_;
            if (!e.is_one()) {
                os << "^";
                if (e.is_integer() && e.sign() > 0) os << e.to_string();
                else os << "(" << e.to_string() << ")";
            }
        }
    }
    os << " + O(" << var_ << "^(" << (known_through() + Rational(1)).to_string() << "))";
    return os.str();
}

PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    require_same_var(a, b);
    if (a.is_zero() || b.is_zero()) {
        // O(t^u) * (t^v * unit + ...) = O(t^{u+v}).
        return PuiseuxSeries::zero(a.offset() + b.offset(), a.variable());
    }
    const long n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= std::min<long>(a.order(), n); ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j <= n && j <= b.order(); ++j)
            c[static_cast<std::size_t>(i + j)] +=
                a.coeffs()[static_cast<std::size_t>(i)] * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return PuiseuxSeries(a.offset() + b.offset(), std::move(c), a.variable());
}

PuiseuxSeries series_recip(const PuiseuxSeries& s) {
    if (s.is_zero()) throw std::domain_error("reciprocal of zero series");
    const long n = s.order();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    const Rational c0_inv = s.coeffs()[0].reciprocal();
    r[0] = c0_inv;
    for (long k = 1; k <= n; ++k) {
        Rational acc;
        for (long i = 1; i <= k; ++i)
            acc += s.coeffs()[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = -acc * c0_inv;
    }
    return PuiseuxSeries(-s.offset(), std::move(r), s.variable());
}

PuiseuxSeries series_pow(const PuiseuxSeries& s, unsigned long e) {
    if (e == 0) {
        std::vector<Rational> one(static_cast<std::size_t>(std::max<long>(s.order(), 0)) + 1);
        one[0] = Rational(1);
        return PuiseuxSeries(Rational(0), std::move(one), s.variable());
    }
    PuiseuxSeries r = s;
    for (unsigned long i = 1; i < e; ++i) r = series_mul(r, s);
    return r;
}

PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    require_same_var(a, b);
    const Rational known = std::min(a.known_through(), b.known_through());
    if (a.is_zero() && b.is_zero()) return PuiseuxSeries::zero(known + Rational(1), a.variable());
    if (a.is_zero()) return b.truncated_through(known);
    if (b.is_zero()) return a.truncated_through(known);
    const Rational step = a.offset() - b.offset();
    if (!step.is_integer())
        throw std::invalid_argument("series addition needs offsets differing by an integer");
    const Rational base = std::min(a.offset(), b.offset());
    const Rational top = known;
    if (top < base) return PuiseuxSeries::zero(top + Rational(1), a.variable());
    const long len = static_cast<long>((top - base).floor().get_si()) + 1;
    std::vector<Rational> c(static_cast<std::size_t>(len));
    for (long i = 0; i < len; ++i) {
        const Rational e = base + Rational(i);
        c[static_cast<std::size_t>(i)] = a.coeff_at(e) + b.coeff_at(e);
    }
    return PuiseuxSeries(base, std::move(c), a.variable());
}

PuiseuxSeries series_sub(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (b.is_zero()) return series_add(a, b);
    std::vector<Rational> neg(b.coeffs());
    for (auto& c : neg) c = -c;
    return series_add(a, PuiseuxSeries(b.offset(), std::move(neg), b.variable()));
}

PuiseuxSeries series_derivative(const PuiseuxSeries& s) {
    if (s.is_zero()) return PuiseuxSeries::zero(s.offset() - Rational(1), s.variable());
    std::vector<Rational> c(s.coeffs().size());
    for (long n = 0; n <= s.order(); ++n)
        c[static_cast<std::size_t>(n)] =
            s.coeffs()[static_cast<std::size_t>(n)] * (s.offset() + Rational(n));
    return PuiseuxSeries(s.offset() - Rational(1), std::move(c), s.variable());
}

PuiseuxSeries series_from_poly(const UniPoly& p, long n) {
    if (p.is_zero()) return PuiseuxSeries::zero(Rational(n + 1), p.variable());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n && i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
    return PuiseuxSeries(Rational(0), std::move(c), p.variable());
}

}  // namespace modeq
