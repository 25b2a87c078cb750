#include <stdexcept>
#include <vector>

#include "modeq/eliminate.hpp"

namespace modeq {

namespace {

// Bareiss fraction-free determinant; exact over Z, no rational arithmetic.
Integer det_bareiss(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

struct SylvesterShape {
    long n;  // deg_z a
    long m;  // deg_z b
    std::vector<UniPoly> a_coeffs;  // in x, ascending z power
    std::vector<UniPoly> b_coeffs;  // in y, ascending z power
};

SylvesterShape sylvester_shape(const BiPoly& a, const BiPoly& b) {
    if (a.deg1() <= 0 || b.deg1() <= 0)
        throw std::domain_error("resultant_z: both inputs must have positive z-degree");
    return {a.deg1(), b.deg1(), a.coeffs_in_var1(), b.coeffs_in_var1()};
}

// det of the (n+m) x (n+m) Sylvester matrix with entries evaluated at (x0, y0).
Rational specialized_det(const SylvesterShape& s, const Rational& x0, const Rational& y0) {
    const long size = s.n + s.m;
    std::vector<Rational> av(static_cast<std::size_t>(s.n) + 1), bv(static_cast<std::size_t>(s.m) + 1);
    for (long i = 0; i <= s.n; ++i) av[static_cast<std::size_t>(i)] = s.a_coeffs[static_cast<std::size_t>(i)].eval(x0);
    for (long i = 0; i <= s.m; ++i) bv[static_cast<std::size_t>(i)] = s.b_coeffs[static_cast<std::size_t>(i)].eval(y0);

    // Scale rows to integers; det = int det / prod(scales).
    std::vector<std::vector<Integer>> mat(static_cast<std::size_t>(size),
                                          std::vector<Integer>(static_cast<std::size_t>(size), Integer(0)));
    Integer denom = 1;
    auto fill_row = [&](long row, const std::vector<Rational>& coeffs, long shift, long deg) {
        Integer lcm = 1;
        for (long i = 0; i <= deg; ++i) lcm = int_lcm(lcm, coeffs[static_cast<std::size_t>(i)].den());
        denom *= lcm;
        // row holds coefficients of z^{deg}..z^0 at columns shift..shift+deg
        for (long i = 0; i <= deg; ++i) {
            const Rational& c = coeffs[static_cast<std::size_t>(deg - i)];
            mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(shift + i)] =
                c.num() * (lcm / c.den());
        }
    };
    for (long r = 0; r < s.m; ++r) fill_row(r, av, r, s.n);
    for (long r = 0; r < s.n; ++r) fill_row(s.m + r, bv, r, s.m);
    return Rational(det_bareiss(std::move(mat)), denom);
}

}  // namespace

Rational resultant_z_specialized(const BiPoly& a, const BiPoly& b, const Rational& x0,
                                 const Rational& y0) {
    return specialized_det(sylvester_shape(a, b), x0, y0);
}

BiPoly resultant_z(const BiPoly& a, const BiPoly& b) {
    const SylvesterShape s = sylvester_shape(a, b);
    // deg_x R <= m * max deg_x(a_i); deg_y R <= n * max deg_y(b_j).
    long adeg = 0, bdeg = 0;
    for (const auto& c : s.a_coeffs) adeg = std::max(adeg, c.degree());
    for (const auto& c : s.b_coeffs) bdeg = std::max(bdeg, c.degree());
    const long dx = s.m * adeg;
    const long dy = s.n * bdeg;

    const auto node = [](long i) {
        // 0, 1, -1, 2, -2, ...
        const long k = (i + 1) / 2;
        return Rational(i % 2 == 1 ? k : -k);
    };

    std::vector<Rational> ynodes(static_cast<std::size_t>(dy) + 1);
    for (long j = 0; j <= dy; ++j) ynodes[static_cast<std::size_t>(j)] = node(j);
    std::vector<Rational> xnodes(static_cast<std::size_t>(dx) + 1);
    for (long i = 0; i <= dx; ++i) xnodes[static_cast<std::size_t>(i)] = node(i);

    // Interpolate in x at each y node, then across y per x-coefficient.
    std::vector<std::vector<Rational>> coeff_by_x(static_cast<std::size_t>(dx) + 1);
    for (auto& v : coeff_by_x) v.resize(static_cast<std::size_t>(dy) + 1);
    for (long j = 0; j <= dy; ++j) {
        std::vector<Rational> values(static_cast<std::size_t>(dx) + 1);
        for (long i = 0; i <= dx; ++i)
            values[static_cast<std::size_t>(i)] =
                specialized_det(s, xnodes[static_cast<std::size_t>(i)], ynodes[static_cast<std::size_t>(j)]);
        const UniPoly px = interpolate(a.var2(), xnodes, values);
        for (long i = 0; i <= dx; ++i)
            coeff_by_x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = px.coeff(i);
    }
    BiPoly r(a.var2(), b.var2());
    for (long i = 0; i <= dx; ++i) {
        const UniPoly py = interpolate(b.var2(), ynodes, coeff_by_x[static_cast<std::size_t>(i)]);
        for (long j = 0; j <= py.degree(); ++j)
            if (!py.coeff(j).is_zero()) r.set(i, j, py.coeff(j));
    }
    return r;
}

}  // namespace modeq
