#include <algorithm>
#include <stdexcept>
#include <vector>

#include "modeq/eliminate.hpp"

// Zassenhaus factorization over Z: squarefree decomposition, Berlekamp over
// a good prime F_q, multifactor linear Hensel lifting past twice the
// Landau-Mignotte coefficient bound, subset recombination with trial
// division.  References: Knuth TAOCP vol. 2, 4.6.2; Cohen, A Course in
// Computational Algebraic Number Theory, 3.5.

namespace modeq {

namespace {

// ---- arithmetic in F_q[x], coefficients as least non-negative residues ----

using ZPoly = std::vector<Integer>;  // ascending, trimmed

void qtrim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

ZPoly qreduce(const ZPoly& f, const Integer& q) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), q.get_mpz_t());
    }
    qtrim(r);
    return r;
}

ZPoly qmul(const ZPoly& a, const ZPoly& b, const Integer& q) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return qreduce(r, q);
}

Integer qinv(const Integer& a, const Integer& q) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible element mod q");
    return r;
}

// (quotient, remainder) of a by b over F_q; b != 0.
std::pair<ZPoly, ZPoly> qdivrem(const ZPoly& a, const ZPoly& b, const Integer& q) {
    if (b.empty()) throw std::logic_error("mod-q division by zero");
    ZPoly rem = a;
    if (rem.size() < b.size()) return {{}, rem};
    ZPoly quo(rem.size() - b.size() + 1, Integer(0));
    const Integer lb_inv = qinv(b.back(), q);
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        const std::size_t top = shift + b.size() - 1;
        const Integer c = (rem[top] * lb_inv) % q;
        if (sgn(c) == 0) continue;
        quo[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Integer& slot = rem[shift + j];
            slot = (slot - c * b[j]) % q;
            if (sgn(slot) < 0) slot += q;
        }
    }
    qtrim(rem);
    qtrim(quo);
    return {quo, rem};
}

ZPoly qmod(const ZPoly& a, const ZPoly& b, const Integer& q) { return qdivrem(a, b, q).second; }

ZPoly qmonic(const ZPoly& f, const Integer& q) {
    if (f.empty()) return f;
    const Integer inv = qinv(f.back(), q);
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = (f[i] * inv) % q;
    return r;
}

ZPoly qgcd(ZPoly a, ZPoly b, const Integer& q) {
    while (!b.empty()) {
        ZPoly r = qmod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(a, q);
}

ZPoly qderiv(const ZPoly& f, const Integer& q) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * Integer(static_cast<long>(i))) % q;
    qtrim(r);
    return r;
}

// x^e mod f over F_q by binary powering.
ZPoly qpow_x(const Integer& e, const ZPoly& f, const Integer& q) {
    ZPoly result{Integer(1)};
    ZPoly base{Integer(0), Integer(1)};  // x
    Integer n = e;
    while (sgn(n) > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = qmod(qmul(result, base, q), f, q);
        n >>= 1;
        if (sgn(n) > 0) base = qmod(qmul(base, base, q), f, q);
    }
    return result;
}

// Extended gcd over F_q[x]: returns (g, s) with s*a = g (mod b), g monic.
std::pair<ZPoly, ZPoly> qext_gcd_first(const ZPoly& a, const ZPoly& b, const Integer& q) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0{Integer(1)}, s1{};
    while (!r1.empty()) {
        auto [quo, rem] = qdivrem(r0, r1, q);
        // s2 = s0 - quo*s1
        ZPoly qs = qmul(quo, s1, q);
        ZPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Integer(0));
        for (std::size_t i = 0; i < qs.size(); ++i) {
            s2[i] = (s2[i] - qs[i]) % q;
            if (sgn(s2[i]) < 0) s2[i] += q;
        }
        qtrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.empty()) return {r0, s0};
    const Integer inv = qinv(r0.back(), q);
    ZPoly g(r0.size()), s(s0.size());
    for (std::size_t i = 0; i < r0.size(); ++i) g[i] = (r0[i] * inv) % q;
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] = (s0[i] * inv) % q;
    qtrim(s);
    return {g, s};
}

// ---- Berlekamp over F_q ----

// Irreducible monic factors of a monic squarefree f over F_q.
std::vector<ZPoly> berlekamp(const ZPoly& f, const Integer& q) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};

    // Petr-Berlekamp matrix: row i = x^{iq} mod f.
    std::vector<ZPoly> rows(n);
    const ZPoly xq = qpow_x(q, f, q);
    rows[0] = ZPoly{Integer(1)};
    for (std::size_t i = 1; i < n; ++i) rows[i] = qmod(qmul(rows[i - 1], xq, q), f, q);

    // Kernel of (Q^T - I): column vectors w with w^T Q = w^T.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j];
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] -= 1;
        if (sgn(m[i][i]) < 0) m[i][i] += q;
    }
    // Gaussian elimination mod q, tracking pivot columns.
    std::vector<long> pivot_of_row(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[rank], m[piv]);
        const Integer inv = qinv(m[rank][col], q);
        for (std::size_t j = 0; j < n; ++j) m[rank][j] = (m[rank][j] * inv) % q;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || sgn(m[i][col]) == 0) continue;
            const Integer factor = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = (m[i][j] - factor * m[rank][j]) % q;
                if (sgn(m[i][j]) < 0) m[i][j] += q;
            }
        }
        pivot_of_row[rank] = static_cast<long>(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_of_row[r])] = true;

    std::vector<ZPoly> kernel;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        ZPoly v(n, Integer(0));
        v[col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            const Integer& c = m[r][col];
            if (sgn(c) == 0) continue;
            Integer neg = (q - c) % q;
            v[static_cast<std::size_t>(pivot_of_row[r])] = neg;
        }
        qtrim(v);
        kernel.push_back(std::move(v));
    }
    const std::size_t r_factors = kernel.size();
    if (r_factors <= 1) return {f};

    // Split with gcd(h, v - c) over all kernel vectors and residues c.
    std::vector<ZPoly> factors{f};
    for (const ZPoly& v : kernel) {
        if (factors.size() == r_factors) break;
        if (v.size() <= 1) continue;  // constant vector gives no split
        for (Integer c = 0; c < q && factors.size() < r_factors; ++c) {
            ZPoly shifted = v;
            shifted[0] = (shifted[0] - c) % q;
            if (sgn(shifted[0]) < 0) shifted[0] += q;
            qtrim(shifted);
            std::vector<ZPoly> next;
            for (const ZPoly& h : factors) {
                if (h.size() <= 2) {
                    next.push_back(h);
                    continue;
                }
                const ZPoly g = qgcd(h, shifted, q);
                if (g.size() <= 1 || g.size() == h.size()) {
                    next.push_back(h);
                } else {
                    next.push_back(g);
                    next.push_back(qdivrem(h, g, q).first);
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---- Hensel lifting and recombination ----

ZPoly to_zpoly(const UniPoly& f) {
    ZPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(c.num());
    return r;
}

UniPoly from_zpoly(const std::string& var, const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& z : f) c.emplace_back(z);
    return UniPoly(var, std::move(c));
}

// Balanced residue in (-modulus/2, modulus/2].
Integer balance(const Integer& a, const Integer& modulus) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (r * 2 > modulus) r -= modulus;
    return r;
}

// Landau-Mignotte style bound: any monic divisor of monic F satisfies
// ||g||_inf <= 2^{deg F} ||F||_2.
Integer factor_coeff_bound(const ZPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    mpz_mul_2exp(root.get_mpz_t(), root.get_mpz_t(), f.size() - 1);
    return root;
}

// Lifts the pairwise coprime monic factorization of monic F from mod q to mod
// q^e with q^e > 2*bound; linear multifactor Hensel.
std::pair<std::vector<ZPoly>, Integer> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors,
                                                   const Integer& q, const Integer& bound) {
    const std::size_t r = factors.size();
    // Bezout basis: sigma_i * prod_{j != i} g_j = 1 (mod g_i, mod q).
    std::vector<ZPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ZPoly h{Integer(1)};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) h = qmul(h, factors[j], q);
        auto [g, s] = qext_gcd_first(h, factors[i], q);
        if (g.size() != 1) throw std::logic_error("modular factors are not coprime");
        sigma[i] = qmod(s, factors[i], q);
    }

    Integer modulus = q;
    while (modulus <= bound * 2) {
        // E = (F - prod G_i) / modulus mod q
        ZPoly prod{Integer(1)};
        const Integer next = modulus * q;
        for (const ZPoly& g : factors) {
            ZPoly p = qmul(prod, g, next);
            prod = std::move(p);
        }
        ZPoly e(f.size(), Integer(0));
        for (std::size_t i = 0; i < f.size(); ++i) {
            Integer diff = f[i] - (i < prod.size() ? prod[i] : Integer(0));
            mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), next.get_mpz_t());
            // diff is divisible by modulus since F = prod (mod modulus)
            if (!mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()))
                throw std::logic_error("Hensel invariant broken");
            diff /= modulus;
            mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), q.get_mpz_t());
            e[i] = diff;
        }
        qtrim(e);
        for (std::size_t i = 0; i < r; ++i) {
            const ZPoly delta = qmod(qmul(sigma[i], e, q), factors[i], q);
            if (factors[i].size() < delta.size() + 1)
                throw std::logic_error("Hensel correction too large");
            for (std::size_t j = 0; j < delta.size(); ++j)
                factors[i][j] += modulus * delta[j];
        }
        modulus = next;
    }
    return {std::move(factors), modulus};
}

// Subset recombination of lifted modular factors into true factors of the
// monic integer polynomial F.
std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& modulus,
                             const Integer& bound) {
    std::vector<ZPoly> result;
    std::vector<std::size_t> pool(lifted.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

    const auto balanced_product = [&](const std::vector<std::size_t>& subset) {
        ZPoly g{Integer(1)};
        for (const std::size_t idx : subset) g = qmul(g, lifted[idx], modulus);
        for (auto& c : g) c = balance(c, modulus);
        return g;
    };
    const auto divides_exactly = [](const ZPoly& g, const ZPoly& f_cur, ZPoly* quotient) {
        // both monic, so plain long division over Z stays integral
        ZPoly rem = f_cur;
        if (rem.size() < g.size()) return false;
        ZPoly quo(rem.size() - g.size() + 1, Integer(0));
        for (std::size_t shift = quo.size(); shift-- > 0;) {
            const Integer c = rem[shift + g.size() - 1];
            if (sgn(c) == 0) continue;
            quo[shift] = c;
            for (std::size_t j = 0; j < g.size(); ++j) rem[shift + j] -= c * g[j];
        }
        qtrim(rem);
        if (!rem.empty()) return false;
        *quotient = std::move(quo);
        return true;
    };

    std::size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> pick(take);
        for (std::size_t i = 0; i < take; ++i) pick[i] = i;
        while (true) {
            std::vector<std::size_t> subset(take);
            for (std::size_t i = 0; i < take; ++i) subset[i] = pool[pick[i]];
            ZPoly g = balanced_product(subset);
            ZPoly quotient;
            const bool const_ok = f.front() == 0 || g.front() == 0 ||
                                  mpz_divisible_p(f.front().get_mpz_t(), g.front().get_mpz_t());
            if (const_ok && divides_exactly(g, f, &quotient)) {
                for (const auto& c : g)
                    if (c > bound || -c > bound)
                        throw std::logic_error("factor exceeds the Landau-Mignotte bound");
                result.push_back(g);
                f = std::move(quotient);
                std::vector<std::size_t> rest;
                for (const std::size_t idx : pool)
                    if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                        rest.push_back(idx);
                pool = std::move(rest);
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(take) - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] ==
                                   pool.size() - take + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < take; ++i)
                pick[i] = pick[i - 1] + 1;
        }
        if (!found) ++take;
    }
    if (f.size() > 1) result.push_back(std::move(f));
    return result;
}

bool is_prime_ul(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducible factors of a monic squarefree integer polynomial.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    if (f.size() <= 2) return {f};
    // Deterministic good-prime search: ascending primes with squarefree image.
    Integer q = 0;
    std::vector<ZPoly> modular;
    for (unsigned long candidate = 2;; ++candidate) {
        if (!is_prime_ul(candidate)) continue;
        const Integer qq(static_cast<long>(candidate));
        const ZPoly fq = qreduce(f, qq);
        if (fq.size() != f.size()) continue;  // cannot happen for monic f, kept for clarity
        const ZPoly g = qgcd(fq, qderiv(fq, qq), qq);
        if (g.size() == 1) {
            q = qq;
            modular = berlekamp(qmonic(fq, qq), qq);
            break;
        }
    }
    if (modular.size() == 1) return {f};
    const Integer bound = factor_coeff_bound(f);
    auto [lifted, modulus] = hensel_lift(f, std::move(modular), q, bound);
    return recombine(f, std::move(lifted), modulus, bound);
}

// Irreducible primitive factors of a primitive squarefree integer polynomial
// with positive leading coefficient.
std::vector<UniPoly> factor_primitive_squarefree(const UniPoly& f) {
    if (f.degree() == 1) return {f};
    const Integer lead = f.leading().num();
    if (lead == 1) {
        std::vector<UniPoly> out;
        for (const ZPoly& g : factor_monic_squarefree(to_zpoly(f)))
            out.push_back(from_zpoly(f.variable(), g));
        return out;
    }
    // Monicize: F(y) = lead^{deg-1} f(y/lead) with y = lead*x, factor, map back.
    const long n = f.degree();
    ZPoly monic(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        monic[static_cast<std::size_t>(i)] =
            f.coeff(i).num() * int_pow(lead, static_cast<unsigned long>(n - 1 - i >= 0 ? n - 1 - i : 0));
    monic[static_cast<std::size_t>(n)] = 1;
    std::vector<UniPoly> out;
    for (const ZPoly& g : factor_monic_squarefree(monic)) {
        UniPoly mapped = from_zpoly(f.variable(), g).scaled_arg(Rational(lead));
        out.push_back(primitive_split(mapped).primitive);
    }
    return out;
}

}  // namespace

FactorList<UniPoly> factor_univariate(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
    if (!is_integer_poly(f))
        throw std::invalid_argument("factor_univariate: input must have integer coefficients");

    FactorList<UniPoly> out;
    const Integer cont = integer_content(f);
    out.content = f.leading().sign() < 0 ? -cont : cont;
    if (f.degree() == 0) return out;
    const UniPoly primitive = f / Rational(out.content);

    // Squarefree decomposition (char 0): repeated gcds with the derivative.
    std::vector<std::pair<UniPoly, int>> parts;
    {
        UniPoly cofactor = poly_gcd(primitive, primitive.derivative());
        if (cofactor.degree() == 0) {
            parts.emplace_back(primitive, 1);
        } else {
            UniPoly w = poly_exact_div(primitive, cofactor);
            int multiplicity = 1;
            while (w.degree() > 0) {
                const UniPoly common = poly_gcd(w, cofactor);
                const UniPoly part = poly_exact_div(w, common);
                if (part.degree() > 0)
                    parts.emplace_back(primitive_split(part).primitive, multiplicity);
                w = common;
                cofactor = poly_exact_div(cofactor, common);
                ++multiplicity;
            }
        }
    }

    for (const auto& [part, mult] : parts)
        for (const UniPoly& irr : factor_primitive_squarefree(part))
            out.factors.emplace_back(irr, mult);

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        const int c = UniPoly::compare(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

}  // namespace modeq
