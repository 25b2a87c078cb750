#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "modeq/eliminate.hpp"

// Bivariate factorization over Z by specialization: factor f(x, y0) for a
// good integer y0, Hensel-lift the coprime monic factors in powers of
// s = y - y0 to precision deg_y f + 1, then recombine subsets against the
// true leading coefficient and confirm by exact trial division.

namespace modeq {

namespace {

// Polynomial in x whose coefficients are polynomials in s, truncated mod s^K.
using SPoly = std::vector<UniPoly>;  // ascending x powers, entries in "s"

UniPoly struncate(const UniPoly& p, long k) {
    if (p.degree() < k) return p;
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + k);
    return UniPoly(p.variable(), std::move(c));
}

SPoly smul(const SPoly& a, const SPoly& b, long k) {
    if (a.empty() || b.empty()) return {};
    SPoly r(a.size() + b.size() - 1, UniPoly("s"));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += struncate(a[i] * b[j], k);
    }
    for (auto& e : r) e = struncate(e, k);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

// 1/L mod s^k for L(0) != 0.
UniPoly sinverse(const UniPoly& l, long k) {
    std::vector<Rational> inv(static_cast<std::size_t>(k));
    const Rational c0_inv = l.coeff(0).reciprocal();
    inv[0] = c0_inv;
    for (long n = 1; n < k; ++n) {
        Rational acc;
        for (long i = 1; i <= n; ++i) acc += l.coeff(i) * inv[static_cast<std::size_t>(n - i)];
        inv[static_cast<std::size_t>(n)] = -acc * c0_inv;
    }
    return UniPoly(l.variable(), std::move(inv));
}

// Extended gcd over Q[x]: g = gcd monic, with s*a + t*b = g.
struct ExtGcd {
    UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
    const std::string var = a.is_zero() ? b.variable() : a.variable();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(var, Rational(1)), s1(var);
    UniPoly t0(var), t1 = UniPoly::constant(var, Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        const UniPoly s2 = s0 - q * s1;
        const UniPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = r0.leading().reciprocal();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// Substitutes s = y - y0 back and clears to a primitive integer polynomial;
// the var2-only content (the cofactor's leading coefficient introduced by the
// reconstruction) is stripped along with the integer content.
BiPoly unshift_candidate(const SPoly& cand, const std::string& var1, const std::string& var2,
                         const Rational& y0) {
    BiPoly out(var1, var2);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const UniPoly in_y = cand[i].shifted(-y0).with_variable(var2);
        for (long j = 0; j <= in_y.degree(); ++j)
            if (!in_y.coeff(j).is_zero()) out.set(static_cast<long>(i), j, in_y.coeff(j));
    }
    if (out.is_zero()) return out;
    BiPoly prim = primitive_split(out).primitive;
    const UniPoly ycont = content_var2(prim);
    if (ycont.degree() > 0) {
        const std::vector<UniPoly> cs = prim.coeffs_in_var1();
        BiPoly stripped(var1, var2);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].is_zero()) continue;
            const UniPoly q = poly_exact_div(cs[i], ycont);
            for (long j = 0; j <= q.degree(); ++j)
                if (!q.coeff(j).is_zero()) stripped.set(static_cast<long>(i), j, q.coeff(j));
        }
        prim = primitive_split(stripped).primitive;
    }
    return prim;
}

}  // namespace

std::vector<BiPoly> factor_bivariate(const BiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_bivariate: zero polynomial");
    if (!is_integer_bipoly(f))
        throw std::invalid_argument("factor_bivariate: input must have integer coefficients");
    if (f.deg1() < 1 || f.deg2() < 1)
        throw std::invalid_argument("factor_bivariate: input must involve both variables");
    if (integer_content(f) != 1 || content_var1(f).degree() > 0 || content_var2(f).degree() > 0)
        throw std::invalid_argument("factor_bivariate: input must be primitive (strip contents first)");

    const std::string& vx = f.var1();
    const std::string& vy = f.var2();
    const long dy = f.deg2();
    const std::vector<UniPoly> f_by_x = f.coeffs_in_var1();
    const UniPoly& lc_x = f_by_x.back();

    // Deterministic good-specialization search: var2 = 0, 1, -1, 2, -2, ...
    Rational y0;
    UniPoly u(vx);
    bool found = false;
    std::vector<std::string> tried;
    for (long i = 0; i < 100; ++i) {
        const long k = (i + 1) / 2;
        const Rational cand(i % 2 == 1 ? k : -k);
        tried.push_back(cand.to_string());
        if (lc_x.eval(cand).is_zero()) continue;
        const UniPoly spec = f.eval_var2(cand);
        if (poly_gcd(spec, spec.derivative()).degree() > 0) continue;
        y0 = cand;
        u = spec;
        found = true;
        break;
    }
    if (!found) {
        std::ostringstream os;
        os << "factor_bivariate: no valid specialization among";
        for (const auto& t : tried) os << " " << t;
        throw std::domain_error(os.str());
    }

    const FactorList<UniPoly> uf = factor_univariate(u);
    if (uf.factors.size() == 1) {
        // Degree-preserving squarefree specialization stays irreducible.
        return {primitive_split(f).primitive};
    }

    const long precision = dy + 1;  // lift modulo s^{precision}

    // F(x, s) = f(x, y0 + s); M = F / lc_x(F)(s) mod s^precision (monic in x).
    SPoly big_f;
    big_f.reserve(f_by_x.size());
    for (const UniPoly& c : f_by_x) big_f.push_back(c.shifted(y0).with_variable("s"));
    const UniPoly l_inv = sinverse(big_f.back(), precision);
    SPoly m(big_f.size());
    for (std::size_t i = 0; i < big_f.size(); ++i) m[i] = struncate(big_f[i] * l_inv, precision);

    // Monic images of the univariate factors and their Bezout basis.
    std::vector<UniPoly> base;  // monic, in x, over Q
    for (const auto& [g, mult] : uf.factors) base.push_back(g.monic());
    const std::size_t r = base.size();
    std::vector<UniPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly h = UniPoly::constant(vx, Rational(1));
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) h = h * base[j];
        const ExtGcd e = ext_gcd(h, base[i]);
        if (e.g.degree() != 0) throw std::logic_error("specialized factors are not coprime");
        sigma[i] = poly_divrem(e.s, base[i]).second;
    }

    // Linear Hensel lifting in s: after step m, prod G_i = M mod s^{m+1}.
    std::vector<SPoly> lifted(r);
    for (std::size_t i = 0; i < r; ++i) {
        SPoly g(static_cast<std::size_t>(base[i].degree()) + 1);
        for (long j = 0; j <= base[i].degree(); ++j)
            g[static_cast<std::size_t>(j)] = UniPoly::constant("s", base[i].coeff(j));
        lifted[i] = std::move(g);
    }
    for (long step = 1; step < precision; ++step) {
        SPoly prod{UniPoly::constant("s", Rational(1))};
        for (const SPoly& g : lifted) prod = smul(prod, g, precision);
        // E = s^step coefficient of (M - prod), a polynomial in x over Q.
        std::vector<Rational> e_coeffs(m.size());
        bool all_zero = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Rational mi = m[i].coeff(step);
            const Rational pi = i < prod.size() ? prod[i].coeff(step) : Rational(0);
            e_coeffs[i] = mi - pi;
            if (!e_coeffs[i].is_zero()) all_zero = false;
        }
        if (all_zero) continue;
        const UniPoly e(vx, std::move(e_coeffs));
        for (std::size_t i = 0; i < r; ++i) {
            const UniPoly delta = poly_divrem(sigma[i] * e, base[i]).second;
            for (long j = 0; j <= delta.degree(); ++j) {
                if (delta.coeff(j).is_zero()) continue;
                UniPoly& slot = lifted[i][static_cast<std::size_t>(j)];
                slot += UniPoly::monomial("s", step, delta.coeff(j));
            }
        }
    }

    // Subset recombination against the current leading coefficient.
    std::vector<BiPoly> result;
    BiPoly f_cur = f;
    std::vector<std::size_t> pool(r);
    for (std::size_t i = 0; i < r; ++i) pool[i] = i;

    std::size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found_factor = false;
        std::vector<std::size_t> pick(take);
        for (std::size_t i = 0; i < take; ++i) pick[i] = i;
        const UniPoly l_cur =
            f_cur.coeffs_in_var1().back().shifted(y0).with_variable("s");
        while (true) {
            SPoly cand{struncate(l_cur, precision)};
            for (std::size_t i = 0; i < take; ++i) cand = smul(cand, lifted[pool[pick[i]]], precision);
            const BiPoly candidate = unshift_candidate(cand, vx, vy, y0);
            if (candidate.deg1() > 0 && bipoly_divides(candidate, f_cur)) {
                f_cur = exact_divide(f_cur, candidate);
                result.push_back(candidate);
                std::vector<std::size_t> rest;
                for (std::size_t i = 0, p = 0; i < pool.size(); ++i) {
                    if (p < take && pick[p] == i) { ++p; continue; }
                    rest.push_back(pool[i]);
                }
                pool = std::move(rest);
                found_factor = true;
                break;
            }
            long pos = static_cast<long>(take) - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] ==
                                   pool.size() - take + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < take; ++i)
                pick[i] = pick[i - 1] + 1;
        }
        if (!found_factor) ++take;
    }
    if (f_cur.deg1() > 0) result.push_back(primitive_split(f_cur).primitive);

    std::sort(result.begin(), result.end(), [](const BiPoly& a, const BiPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.terms() < b.terms();
    });
    return result;
}

}  // namespace modeq
