#include "modeq/bipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace modeq {

namespace {

void require_same_vars(const BiPoly& a, const BiPoly& b) {
    if (a.var1() != b.var1() || a.var2() != b.var2())
        throw std::invalid_argument("bivariate variable mismatch: (" + a.var1() + "," + a.var2() +
                                    ") vs (" + b.var1() + "," + b.var2() + ")");
}

// --- (Z[var2])[var1] viewed as a coefficient vector in var1 ---

using XVec = std::vector<UniPoly>;  // ascending var1 powers, entries in var2

void xtrim(XVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// lc(b)^k * a mod b for some k >= 0 (pseudo-remainder pass).
void xprem(XVec& a, const XVec& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const UniPoly lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        const long da = static_cast<long>(a.size()) - 1;
        const UniPoly la = a.back();
        for (long i = 0; i < da; ++i) a[static_cast<std::size_t>(i)] *= lb;
        for (long i = 0; i < db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
        a.pop_back();
        xtrim(a);
    }
}

// Divides out the gcd (over Z[var2]) of the entries; sign so that the leading
// entry has a positive leading coefficient.
void xprimitive(XVec& v) {
    xtrim(v);
    if (v.empty()) return;
    // Clear rational denominators first.
    Integer lcm = 1;
    for (const auto& p : v)
        for (const auto& c : p.coeffs()) lcm = int_lcm(lcm, c.den());
    if (lcm != 1)
        for (auto& p : v) p = p * Rational(lcm);
    UniPoly cont(v.back().variable());
    for (const auto& p : v) cont = poly_gcd_z(cont, p);
    for (auto& p : v) p = poly_exact_div(p, cont);
    if (v.back().leading().sign() < 0)
        for (auto& p : v) p = -p;
}

std::optional<BiPoly> try_exact_divide(const BiPoly& f, const BiPoly& g);

}  // namespace

BiPoly BiPoly::constant(std::string var1, std::string var2, Rational c) {
    BiPoly r(std::move(var1), std::move(var2));
    r.set(0, 0, std::move(c));
    return r;
}

BiPoly BiPoly::from_coeffs_var1(const std::string& var1, const std::string& var2,
                                const std::vector<UniPoly>& coeffs) {
    BiPoly r(var1, var2);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const UniPoly& p = coeffs[i];
        for (long j = 0; j <= p.degree(); ++j)
            if (!p.coeff(j).is_zero()) r.set(static_cast<long>(i), j, p.coeff(j));
    }
    return r;
}

BiPoly BiPoly::from_unipoly_var1(const UniPoly& p, const std::string& var2) {
    BiPoly r(p.variable(), var2);
    for (long i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) r.set(i, 0, p.coeff(i));
    return r;
}

BiPoly BiPoly::from_unipoly_var2(const UniPoly& p, const std::string& var1) {
    BiPoly r(var1, p.variable());
    for (long j = 0; j <= p.degree(); ++j)
        if (!p.coeff(j).is_zero()) r.set(0, j, p.coeff(j));
    return r;
}

BiPoly BiPoly::with_vars(std::string var1, std::string var2) const {
    BiPoly r = *this;
    r.v1_ = std::move(var1);
    r.v2_ = std::move(var2);
    return r;
}

long BiPoly::total_degree() const {
    long d = -1;
    for (const auto& [ij, c] : t_) d = std::max(d, ij.first + ij.second);
    return d;
}

const Rational& BiPoly::get(long i, long j) const {
    static const Rational zero;
    const auto it = t_.find({i, j});
    return it == t_.end() ? zero : it->second;
}

void BiPoly::set(long i, long j, Rational c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
    if (c.is_zero()) {
        t_.erase({i, j});
        recompute_degrees();
        return;
    }
    t_[{i, j}] = std::move(c);
    d1_ = std::max(d1_, i);
    d2_ = std::max(d2_, j);
}

void BiPoly::add_to(long i, long j, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        set(i, j, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        t_.erase(it);
        recompute_degrees();
    }
}

void BiPoly::recompute_degrees() {
    d1_ = d2_ = -1;
    for (const auto& [ij, c] : t_) {
        d1_ = std::max(d1_, ij.first);
        d2_ = std::max(d2_, ij.second);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [ij, c] : r.t_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [ij, c] : o.t_) add_to(ij.first, ij.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [ij, c] : o.t_) add_to(ij.first, ij.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same_vars(a, b);
    BiPoly r(a.var1(), a.var2());
    for (const auto& [ij, c] : a.t_)
        for (const auto& [kl, d] : b.t_) r.add_to(ij.first + kl.first, ij.second + kl.second, c * d);
    return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly r(v1_, v2_);
    if (s.is_zero()) return r;
    r = *this;
    for (auto& [ij, c] : r.t_) c *= s;
    return r;
}

BiPoly BiPoly::operator/(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("bivariate division by zero scalar");
    return *this * s.reciprocal();
}

std::vector<UniPoly> BiPoly::coeffs_in_var1() const {
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(std::max<long>(d1_, -1) + 1));
    for (const auto& [ij, c] : t_) {
        auto& row = acc[static_cast<std::size_t>(ij.first)];
        if (static_cast<long>(row.size()) <= ij.second)
            row.resize(static_cast<std::size_t>(ij.second) + 1);
        row[static_cast<std::size_t>(ij.second)] = c;
    }
    std::vector<UniPoly> r;
    r.reserve(acc.size());
    for (auto& row : acc) r.emplace_back(v2_, std::move(row));
    return r;
}

std::vector<UniPoly> BiPoly::coeffs_in_var2() const {
    std::vector<UniPoly> r;
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(std::max<long>(d2_, -1) + 1));
    for (const auto& [ij, c] : t_) {
        auto& row = acc[static_cast<std::size_t>(ij.second)];
        if (static_cast<long>(row.size()) <= ij.first)
            row.resize(static_cast<std::size_t>(ij.first) + 1);
        row[static_cast<std::size_t>(ij.first)] = c;
    }
    r.reserve(acc.size());
    for (auto& row : acc) r.emplace_back(v1_, std::move(row));
    return r;
}

UniPoly BiPoly::eval_var1(const Rational& x) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(d2_, -1) + 1));
    for (const auto& [ij, coef] : t_)
        c[static_cast<std::size_t>(ij.second)] += coef * x.pow(ij.first);
    return UniPoly(v2_, std::move(c));
}

UniPoly BiPoly::eval_var2(const Rational& y) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(d1_, -1) + 1));
    for (const auto& [ij, coef] : t_)
        c[static_cast<std::size_t>(ij.first)] += coef * y.pow(ij.second);
    return UniPoly(v1_, std::move(c));
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc;
    for (const auto& [ij, coef] : t_) acc += coef * x.pow(ij.first) * y.pow(ij.second);
    return acc;
}

UniPoly BiPoly::diagonal() const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(d1_ + d2_, -1) + 1));
    for (const auto& [ij, coef] : t_) c[static_cast<std::size_t>(ij.first + ij.second)] += coef;
    return UniPoly(v1_, std::move(c));
}

BiPoly BiPoly::derivative_var1() const {
    BiPoly r(v1_, v2_);
    for (const auto& [ij, c] : t_)
        if (ij.first > 0) r.add_to(ij.first - 1, ij.second, c * Rational(ij.first));
    return r;
}

BiPoly BiPoly::derivative_var2() const {
    BiPoly r(v1_, v2_);
    for (const auto& [ij, c] : t_)
        if (ij.second > 0) r.add_to(ij.first, ij.second - 1, c * Rational(ij.second));
    return r;
}

BiPoly BiPoly::transposed() const {
    BiPoly r(v1_, v2_);
    for (const auto& [ij, c] : t_) r.set(ij.second, ij.first, c);
    return r;
}

std::pair<long, long> BiPoly::leading_term_graded() const {
    if (is_zero()) throw std::domain_error("leading term of zero polynomial");
    std::pair<long, long> best{-1, -1};
    long best_total = -1;
    for (const auto& [ij, c] : t_) {
        const long total = ij.first + ij.second;
        if (total > best_total || (total == best_total && ij.first > best.first)) {
            best = ij;
            best_total = total;
        }
    }
    return best;
}

const Rational& BiPoly::leading_coeff_graded() const { return get(leading_term_graded().first, leading_term_graded().second); }

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending by (j, i) groups the var2 powers together, matching the
    // coefficient-of-y^j presentation used in logs.
    std::vector<std::pair<std::pair<long, long>, Rational>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    for (const auto& [ij, c] : terms) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one() && (ij.first > 0 || ij.second > 0);
        if (!unit) os << a.to_string();
        bool star = !unit;
        if (ij.first > 0) {
            if (star) os << "*";
            os << v1_;
            if (ij.first > 1) os << "^" << ij.first;
            star = true;
        }
        if (ij.second > 0) {
            if (star) os << "*";
            os << v2_;
            if (ij.second > 1) os << "^" << ij.second;
        }
    }
    return os.str();
}

bool is_integer_bipoly(const BiPoly& f) {
    for (const auto& [ij, c] : f.terms())
        if (!c.is_integer()) return false;
    return true;
}

Integer integer_content(const BiPoly& f) {
    Integer g = 0;
    for (const auto& [ij, c] : f.terms()) {
        if (!c.is_integer()) throw std::invalid_argument("integer_content on non-integer polynomial");
        g = int_gcd(g, c.num());
    }
    return g;
}

BiPrimitiveSplit primitive_split(const BiPoly& f) {
    if (f.is_zero()) return {Rational(0), f};
    Integer lcm = 1;
    for (const auto& [ij, c] : f.terms()) lcm = int_lcm(lcm, c.den());
    BiPoly z = f * Rational(lcm);
    const Integer cont = integer_content(z);
    z = z / Rational(cont);
    int sign = z.leading_coeff_graded().sign();
    if (sign < 0) z = -z;
    return {Rational(sign < 0 ? -cont : cont, lcm), z};
}

UniPoly content_var1(const BiPoly& f) {
    // gcd over Z[var1] of the coefficients of var2 powers.
    UniPoly cont(f.var1());
    for (const UniPoly& p : f.coeffs_in_var2()) cont = poly_gcd_z(cont, p);
    return cont;
}

UniPoly content_var2(const BiPoly& f) {
    UniPoly cont(f.var2());
    for (const UniPoly& p : f.coeffs_in_var1()) cont = poly_gcd_z(cont, p);
    return cont;
}

namespace {

std::optional<BiPoly> try_exact_divide(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw std::domain_error("bivariate division by zero polynomial");
    require_same_vars(f, g);
    if (f.is_zero()) return BiPoly(f.var1(), f.var2());
    if (f.deg1() < g.deg1() || f.deg2() < g.deg2()) return std::nullopt;

    if (g.deg1() == 0) {
        // Pure var2 divisor: divide each var1 coefficient.
        const UniPoly d = g.coeffs_in_var1().at(0);
        std::vector<UniPoly> out;
        for (const UniPoly& p : f.coeffs_in_var1()) {
            if (p.is_zero()) {
                out.push_back(p);
                continue;
            }
            auto [q, r] = poly_divrem(p, d);
            if (!r.is_zero()) return std::nullopt;
            out.push_back(q);
        }
        return BiPoly::from_coeffs_var1(f.var1(), f.var2(), out);
    }

    // Interpolate the quotient from univariate divisions at var2 nodes.
    const long qd1 = f.deg1() - g.deg1();
    const long qd2 = f.deg2() - g.deg2();
    const std::vector<UniPoly> g_x = g.coeffs_in_var1();
    const UniPoly& lc_g = g_x.back();
    std::vector<Rational> nodes;
    std::vector<std::vector<Rational>> qcoeffs(static_cast<std::size_t>(qd1) + 1);
    long candidate = 0;
    while (static_cast<long>(nodes.size()) < qd2 + 1) {
        const Rational y0(candidate);
        candidate = candidate > 0 ? -candidate : -candidate + 1;
        if (lc_g.eval(y0).is_zero()) continue;
        const UniPoly fy = f.eval_var2(y0);
        const UniPoly gy = g.eval_var2(y0);
        auto [q, r] = poly_divrem(fy, gy);
        if (!r.is_zero()) return std::nullopt;
        if (q.degree() > qd1) return std::nullopt;
        nodes.push_back(y0);
        for (long i = 0; i <= qd1; ++i) qcoeffs[static_cast<std::size_t>(i)].push_back(q.coeff(i));
    }
    std::vector<UniPoly> out;
    out.reserve(static_cast<std::size_t>(qd1) + 1);
    for (long i = 0; i <= qd1; ++i)
        out.push_back(interpolate(f.var2(), nodes, qcoeffs[static_cast<std::size_t>(i)]));
    BiPoly q = BiPoly::from_coeffs_var1(f.var1(), f.var2(), out);
    if (q * g != f) return std::nullopt;
    return q;
}

}  // namespace

BiPoly exact_divide(const BiPoly& f, const BiPoly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw std::domain_error("bivariate division is not exact");
    return *q;
}

bool bipoly_divides(const BiPoly& g, const BiPoly& f) {
    return try_exact_divide(f, g).has_value();
}

BiPoly gcd_var1(const BiPoly& f, const BiPoly& g) {
    require_same_vars(f, g);
    if (f.is_zero() && g.is_zero()) return f;
    if (f.is_zero() || g.is_zero()) {
        XVec v = (f.is_zero() ? g : f).coeffs_in_var1();
        xprimitive(v);
        return BiPoly::from_coeffs_var1(f.var1(), f.var2(), v);
    }
    XVec u = f.coeffs_in_var1();
    XVec v = g.coeffs_in_var1();
    xprimitive(u);
    xprimitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        xprem(u, v);
        xprimitive(u);
        std::swap(u, v);
    }
    return BiPoly::from_coeffs_var1(f.var1(), f.var2(), u);
}

std::vector<std::pair<BiPoly, int>> squarefree_decompose_var1(const BiPoly& f) {
    std::vector<std::pair<BiPoly, int>> parts;
    if (f.is_zero() || f.deg1() <= 0) return parts;
    // Fast path: a degree-preserving specialization with a squarefree image
    // certifies squarefreeness (the discriminant cannot vanish identically),
    // skipping the expensive bivariate PRS gcd.
    {
        const UniPoly lc = f.coeffs_in_var1().back();
        for (long i = 0; i < 8; ++i) {
            const long k = (i + 1) / 2;
            const Rational y0(i % 2 == 1 ? k : -k);
            if (lc.eval(y0).is_zero()) continue;
            const UniPoly spec = f.eval_var2(y0);
            if (poly_gcd(spec, spec.derivative()).degree() == 0) {
                parts.emplace_back(primitive_split(f).primitive, 1);
                return parts;
            }
        }
    }
    BiPoly cofactor = gcd_var1(f, f.derivative_var1());
    if (cofactor.deg1() == 0) {
        parts.emplace_back(primitive_split(f).primitive, 1);
        return parts;
    }
    BiPoly w = exact_divide(f, cofactor);
    int multiplicity = 1;
    while (w.deg1() > 0) {
        const BiPoly common = gcd_var1(w, cofactor);
        const BiPoly part = exact_divide(w, common);
        if (part.deg1() > 0) parts.emplace_back(primitive_split(part).primitive, multiplicity);
        w = common;
        cofactor = exact_divide(cofactor, common);
        ++multiplicity;
    }
    return parts;
}

}  // namespace modeq
