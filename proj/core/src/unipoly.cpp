#include "modeq/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modeq {

namespace {

void require_same_var(const UniPoly& a, const UniPoly& b) {
    if (!a.is_zero() && !b.is_zero() && a.variable() != b.variable())
        throw std::invalid_argument("polynomial variable mismatch: '" + a.variable() + "' vs '" +
                                    b.variable() + "'");
}

// --- integer coefficient vectors (ascending), used by the primitive PRS ---

using ZVec = std::vector<Integer>;

void ztrim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

Integer zcontent(const ZVec& v) {
    Integer g = 0;
    for (const auto& c : v) g = int_gcd(g, c);
    return g;
}

void zprimitive(ZVec& v) {
    const Integer g = zcontent(v);
    if (g == 0) return;
    for (auto& c : v) c /= g;
    if (sgn(v.back()) < 0)
        for (auto& c : v) c = -c;
}

// One pseudo-division pass: replaces a by lc(b)^k * a mod b for some k >= 0.
void zprem(ZVec& a, const ZVec& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        const long da = static_cast<long>(a.size()) - 1;
        const Integer la = a.back();
        for (long i = 0; i < da; ++i) a[i] *= lb;
        for (long i = 0; i <= db - 1; ++i) a[da - db + i] -= la * b[i];
        a.pop_back();
        ztrim(a);
    }
}

ZVec to_zvec(const UniPoly& f, Integer* denom_out) {
    Integer lcm = 1;
    for (const auto& c : f.coeffs()) lcm = int_lcm(lcm, c.den());
    ZVec v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(c.num() * (lcm / c.den()));
    if (denom_out) *denom_out = lcm;
    return v;
}

UniPoly from_zvec(const std::string& var, const ZVec& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return UniPoly(var, std::move(c));
}

}  // namespace

UniPoly::UniPoly(std::string var, std::vector<Rational> ascending)
    : var_(std::move(var)), c_(std::move(ascending)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(std::string var, Rational c) {
    return UniPoly(std::move(var), {std::move(c)});
}

UniPoly UniPoly::monomial(std::string var, long degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return UniPoly(std::move(var), std::move(v));
}

UniPoly UniPoly::linear_root(std::string var, const Rational& a) {
    return UniPoly(std::move(var), {-a, Rational(1)});
}

UniPoly UniPoly::with_variable(std::string var) const {
    UniPoly r = *this;
    r.var_ = std::move(var);
    return r;
}

const Rational& UniPoly::coeff(long i) const {
    static const Rational zero;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& UniPoly::constant_term() const {
    static const Rational zero;
    return c_.empty() ? zero : c_.front();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same_var(*this, o);
    if (var_.empty() || is_zero()) var_ = o.is_zero() ? var_ : o.var_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    *this += -o;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.is_zero() ? b.variable() : a.variable());
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.variable(), std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly(var_);
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::operator/(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("polynomial division by zero scalar");
    return *this * s.reciprocal();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::shifted(const Rational& c) const {
    // Horner with the argument (x + c).
    if (c.is_zero() || is_zero()) return *this;
    const UniPoly arg(var_, {c, Rational(1)});
    UniPoly r(var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * arg + UniPoly::constant(var_, *it);
    return r;
}

UniPoly UniPoly::scaled_arg(const Rational& s) const {
    UniPoly r = *this;
    Rational p(1);
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
        p *= s;
        r.c_[i] *= p;
    }
    r.trim();
    return r;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly r = UniPoly::constant(var_, Rational(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

int UniPoly::compare(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = a.degree(); i >= 0; --i) {
        const Rational &x = a.coeff(i), &y = b.coeff(i);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one();
        if (i == 0 || !unit) os << a.to_string();
        if (i > 0) {
            if (!unit) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

std::pair<UniPoly, UniPoly> poly_divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero polynomial");
    require_same_var(a, b);
    const std::string& var = b.variable();
    if (a.degree() < b.degree()) return {UniPoly(var), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lb_inv = b.leading().reciprocal();
    for (long i = a.degree(); i >= b.degree(); --i) {
        Rational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        const Rational q = top * lb_inv;
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(b.degree(), 0)));
    return {UniPoly(var, std::move(quo)), UniPoly(var, std::move(rem))};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    require_same_var(a, b);
    ZVec u = to_zvec(a, nullptr);
    ZVec v = to_zvec(b, nullptr);
    zprimitive(u);
    zprimitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        zprem(u, v);
        zprimitive(u);
        std::swap(u, v);
    }
    return from_zvec(a.variable(), u).monic();
}

UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

bool poly_divides(const UniPoly& d, const UniPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divrem(a, d).second.is_zero();
}

PrimitiveSplit primitive_split(const UniPoly& f) {
    if (f.is_zero()) return {Rational(0), f};
    Integer denom;
    ZVec v = to_zvec(f, &denom);
    const Integer cont = zcontent(v);
    const int sign = sgn(v.back());
    for (auto& c : v) c /= cont;
    if (sign < 0)
        for (auto& c : v) c = -c;
    const Rational scale = Rational(sign < 0 ? -cont : cont, denom);
    return {scale, from_zvec(f.variable(), v)};
}

bool is_integer_poly(const UniPoly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

Integer integer_content(const UniPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        if (!c.is_integer()) throw std::invalid_argument("integer_content on non-integer polynomial");
        g = int_gcd(g, c.num());
    }
    return g;
}

UniPoly poly_gcd_z(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) {
        auto [s, p] = primitive_split(b);
        return p * Rational(s.abs().num());
    }
    if (b.is_zero()) {
        auto [s, p] = primitive_split(a);
        return p * Rational(s.abs().num());
    }
    const Integer ca = integer_content(a);
    const Integer cb = integer_content(b);
    const UniPoly g = poly_gcd(a, b);
    auto [gs, gp] = primitive_split(g);
    return gp * Rational(int_gcd(ca, cb));
}

UniPoly poly_lcm_z(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.variable());
    const UniPoly g = poly_gcd_z(a, b);
    UniPoly l = poly_exact_div(a * b, g);
    auto [s, p] = primitive_split(l);
    return p * Rational(s.abs().num());
}

UniPoly interpolate(const std::string& var, const std::vector<Rational>& nodes,
                    const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    if (nodes.empty()) return UniPoly(var);
    // Newton divided differences.
    const std::size_t n = nodes.size();
    std::vector<Rational> dd(values);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational dx = nodes[i] - nodes[i - level];
            if (dx.is_zero()) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    UniPoly r = UniPoly::constant(var, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        r = r * UniPoly::linear_root(var, nodes[i]) + UniPoly::constant(var, dd[i]);
    return r;
}

}  // namespace modeq
