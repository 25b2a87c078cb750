#include <doctest.h>

#include <random>

#include "modeq/symmetric.hpp"

using namespace modeq;

namespace {

RationalFunction rf(long num, long den = 1) {
    return RationalFunction(UniPoly::constant("t", Rational(num, den)));
}

std::mt19937_64 rng(5150u);

}  // namespace

TEST_CASE("first Newton identities") {
    // p1 = s => e1 = s
    const std::vector<RationalFunction> p{rf(7)};
    const auto sym = newton_to_elementary(p);
    CHECK(sym.e[1] == rf(7));
    // p1 = 0, p2 = -2 => e2 = 1
    const auto sym2 = newton_to_elementary({rf(0), rf(-2)});
    CHECK(sym2.e[1] == rf(0));
    CHECK(sym2.e[2] == rf(1));
}

TEST_CASE("Newton roundtrip on randomized rational functions") {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> dd(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<RationalFunction> p;
        const int n = 1 + iter % 8;
        for (int i = 0; i < n; ++i) {
            const UniPoly num("t", {Rational(coeff(rng)), Rational(coeff(rng))});
            const UniPoly den = UniPoly::monomial("t", dd(rng) - 1, Rational(dd(rng)));
            p.push_back(den.is_zero() ? rf(1) : RationalFunction(num, den));
        }
        const auto sym = newton_to_elementary(p);
        const auto back = elementary_to_power_sums(sym.e, p.size());
        REQUIRE(back.size() == p.size());
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(back[i] == p[i]);
    }
}

TEST_CASE("monic product route agrees with build_psi") {
    // prod (z - r_i) expanded directly = Psi from the power sums of the r_i
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 2 + iter % 4;
        std::vector<Rational> roots;
        for (int i = 0; i < n; ++i) roots.emplace_back(coeff(rng), den(rng));
        // power sums of constants
        std::vector<RationalFunction> p;
        for (int m = 1; m <= n; ++m) {
            Rational sum;
            for (const auto& r : roots) sum += r.pow(m);
            p.push_back(rf(1) * sum);
        }
        SymmetricData sym = newton_to_elementary(p);
        sym.prime = n - 1;  // so that deg_z = n
        const PsiFunction psi = build_psi(sym);
        UniPoly direct = UniPoly::constant("z", Rational(1));
        for (const auto& r : roots) direct = direct * UniPoly::linear_root("z", r);
        // psi / den should equal direct (den is a constant here)
        const auto zc = psi.psi.coeffs_in_var1();
        REQUIRE(static_cast<long>(zc.size()) == n + 1);
        for (long i = 0; i <= n; ++i) {
            const UniPoly& c = zc[static_cast<std::size_t>(i)];
            CHECK(c.degree() <= 0);
            CHECK(c.coeff(0) / psi.den.coeff(0) == direct.coeff(i));
        }
    }
}

TEST_CASE("build_psi trivial shape") {
    // all e_m = 0 except e_0: Psi = z^{p+1}
    SymmetricData sym;
    sym.prime = 3;
    sym.e.push_back(rf(1));
    for (int i = 0; i < 4; ++i) sym.e.push_back(rf(0));
    const PsiFunction psi = build_psi(sym);
    CHECK(psi.den == UniPoly::constant("x", Rational(1)));
    CHECK(psi.psi.deg1() == 4);
    CHECK(psi.psi.terms().size() == 1);
    CHECK(psi.psi.get(4, 0) == Rational(1));
}

TEST_CASE("reverse_psi") {
    SUBCASE("z^2 + a z + b reverses to b z^2 + a z + 1") {
        SymmetricData sym;
        sym.prime = 1;
        sym.e.push_back(rf(1));
        sym.e.push_back(rf(-3));  // e1 => coefficient of z: -e1 = 3
        sym.e.push_back(rf(5));   // e2 => constant: +5
        const PsiFunction psi = build_psi(sym);
        const BiPoly rev = reverse_psi(psi);
        CHECK(rev.var2() == "y");
        CHECK(rev.get(2, 0) == Rational(5));
        CHECK(rev.get(1, 0) == Rational(3));
        CHECK(rev.get(0, 0) == Rational(1));
    }
    SUBCASE("degree guard: deg_z psi' < p+1 exactly when e_{p+1} = 0") {
        SymmetricData sym;
        sym.prime = 1;
        sym.e = {rf(1), rf(1), rf(0)};  // e_2 = 0
        const PsiFunction psi = build_psi(sym);
        CHECK(psi.psi.deg1() == 2);  // deg_z psi is always p+1
        CHECK(reverse_psi(psi).deg1() == 1);
        sym.e[2] = rf(3);
        CHECK(reverse_psi(build_psi(sym)).deg1() == 2);
    }
    SUBCASE("reversal is an involution (property)") {
        std::uniform_int_distribution<long> coeff(-9, 9);
        for (int iter = 0; iter < 100; ++iter) {
            PsiFunction psi;
            psi.prime = 2 + iter % 5;
            psi.psi = BiPoly("z", "x");
            for (long i = 0; i <= psi.prime + 1; ++i)
                for (long j = 0; j <= 2; ++j) psi.psi.add_to(i, j, Rational(coeff(rng)));
            if (psi.psi.is_zero()) continue;
            psi.den = UniPoly::constant("x", Rational(1));
            PsiFunction once;
            once.prime = psi.prime;
            once.psi = reverse_psi(psi).with_vars("z", "x");
            once.den = psi.den;
            const BiPoly twice = reverse_psi(once).with_vars("z", "x");
            CHECK(twice == psi.psi);
        }
    }
}
