#include <doctest.h>

#include <random>

#include "modeq/eliminate.hpp"
#include "modeq/errors.hpp"

using namespace modeq;

namespace {

std::mt19937_64 rng(60606u);

UniPoly zpoly(std::initializer_list<long> ascending, const char* var = "x") {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(var, std::move(c));
}

BiPoly z_minus(const char* other) {
    // z - <other variable>
    BiPoly f("z", other);
    f.set(1, 0, Rational(1));
    f.set(0, 1, Rational(-1));
    return f;
}

BiPoly random_zpoly(long dz, long dother, long span, const char* other) {
    std::uniform_int_distribution<long> coeff(-span, span);
    BiPoly f("z", other);
    for (long i = 0; i <= dz; ++i)
        for (long j = 0; j <= dother; ++j) f.add_to(i, j, Rational(coeff(rng)));
    if (f.deg1() < 1) f.set(dz, 0, Rational(1));
    return f;
}

UniPoly product_of(const FactorList<UniPoly>& fl) {
    UniPoly p = UniPoly::constant(fl.factors.empty() ? "x" : fl.factors[0].first.variable(),
                                  Rational(fl.content));
    for (const auto& [f, mult] : fl.factors)
        for (int i = 0; i < mult; ++i) p = p * f;
    return p;
}

std::mt19937_64 frng(777u);

UniPoly random_int_poly(long max_deg, long span) {
    std::uniform_int_distribution<long> deg(1, max_deg);
    std::uniform_int_distribution<long> coeff(-span, span);
    const long d = deg(frng);
    std::vector<Rational> c;
    for (long i = 0; i < d; ++i) c.emplace_back(coeff(frng));
    c.emplace_back(1 + (coeff(frng) + span) % (2 * span));  // nonzero lead
    return UniPoly("x", std::move(c));
}

}  // namespace

TEST_CASE("resultant trivial fixtures") {
    // Res_z(z - x, z - y) = x - y
    const BiPoly r1 = resultant_z(z_minus("x"), z_minus("y"));
    BiPoly expect1("x", "y");
    expect1.set(1, 0, Rational(1));
    expect1.set(0, 1, Rational(-1));
    CHECK(r1 == expect1);

    // Res_z(z^2 - x, z^2 - y) = (x - y)^2
    BiPoly a("z", "x"), b("z", "y");
    a.set(2, 0, Rational(1));
    a.set(0, 1, Rational(-1));
    b.set(2, 0, Rational(1));
    b.set(0, 1, Rational(-1));
    const BiPoly r2 = resultant_z(a, b);
    CHECK(r2 == expect1 * expect1);

    CHECK_THROWS_AS(resultant_z(BiPoly::constant("z", "x", Rational(3)), b), std::domain_error);
}

TEST_CASE("resultant multiplicativity (property)") {
    for (int iter = 0; iter < 100; ++iter) {
        const BiPoly f = random_zpoly(1 + iter % 2, 1, 3, "x");
        const BiPoly g = random_zpoly(1, 1, 3, "x");
        const BiPoly h = random_zpoly(1 + iter % 3, 1, 3, "y");
        const BiPoly lhs = resultant_z(f * g, h);
        const BiPoly rhs = resultant_z(f, h) * resultant_z(g, h);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant specialization consistency (property)") {
    std::uniform_int_distribution<long> point(-10, 10);
    const BiPoly a = random_zpoly(3, 2, 4, "x");
    const BiPoly b = random_zpoly(2, 2, 4, "y");
    const BiPoly r = resultant_z(a, b);
    for (int iter = 0; iter < 20; ++iter) {
        const Rational x0(point(rng)), y0(point(rng));
        CHECK(r.eval(x0, y0) == resultant_z_specialized(a, b, x0, y0));
    }
}

TEST_CASE("strip_content") {
    SUBCASE("x^2 (x - y)") {
        BiPoly f("x", "y");
        f.set(3, 0, Rational(1));
        f.set(2, 1, Rational(-1));
        const ContentSplit split = strip_content(f);
        CHECK(split.x_content == UniPoly::monomial("x", 2));
        CHECK(split.y_content == UniPoly::constant("y", Rational(1)));
        BiPoly core_expect("x", "y");
        core_expect.set(1, 0, Rational(1));
        core_expect.set(0, 1, Rational(-1));
        CHECK(split.core == core_expect);
    }
    SUBCASE("6(x - y): integer content in the x slot") {
        BiPoly f("x", "y");
        f.set(1, 0, Rational(6));
        f.set(0, 1, Rational(-6));
        const ContentSplit split = strip_content(f);
        CHECK(split.x_content == UniPoly::constant("x", Rational(6)));
        CHECK(split.y_content == UniPoly::constant("y", Rational(1)));
    }
    SUBCASE("reconstruction on random inputs") {
        for (int iter = 0; iter < 30; ++iter) {
            BiPoly f = random_zpoly(3, 3, 5, "y").with_vars("x", "y");
            if (f.is_zero()) continue;
            const ContentSplit split = strip_content(f);
            const BiPoly rebuilt = BiPoly::from_unipoly_var1(split.x_content, "y") *
                                   BiPoly::from_unipoly_var2(split.y_content, "x") * split.core;
            CHECK(rebuilt == f);
            CHECK(integer_content(split.core) == 1);
        }
    }
}

TEST_CASE("factor_univariate fixtures") {
    SUBCASE("x^2 - 1") {
        const auto fl = factor_univariate(zpoly({-1, 0, 1}));
        CHECK(fl.content == 1);
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].first == zpoly({-1, 1}));
        CHECK(fl.factors[1].first == zpoly({1, 1}));
    }
    SUBCASE("25x^2 - 164x + 500 is irreducible (singular modulus d=-68)") {
        const auto fl = factor_univariate(zpoly({500, -164, 25}));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].first == zpoly({500, -164, 25}));
        CHECK(fl.factors[0].second == 1);
    }
    SUBCASE("x^4 + 1 stays irreducible through recombination") {
        const auto fl = factor_univariate(zpoly({1, 0, 0, 0, 1}));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].first == zpoly({1, 0, 0, 0, 1}));
    }
    SUBCASE("multiplicities and content") {
        // -12 (x-1)^2 (x^2+x+1)
        const UniPoly f =
            zpoly({-12}) * zpoly({-1, 1}) * zpoly({-1, 1}) * zpoly({1, 1, 1});
        const auto fl = factor_univariate(f);
        CHECK(fl.content == -12);
        REQUIRE(fl.factors.size() == 2);
        CHECK(product_of(fl) == f);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(factor_univariate(UniPoly("x")), std::invalid_argument);
        CHECK_THROWS_AS(factor_univariate(UniPoly("x", {Rational(1, 2)})), std::invalid_argument);
    }
}

TEST_CASE("factor_univariate roundtrip on random products (property)") {
    for (int iter = 0; iter < 100; ++iter) {
        UniPoly f = random_int_poly(3, 6);
        const int extra = iter % 3;
        for (int i = 0; i < extra; ++i) f = f * random_int_poly(2, 4);
        if (f.is_zero()) continue;
        const auto fl = factor_univariate(f);
        CHECK(product_of(fl) == f);
        for (const auto& [g, mult] : fl.factors) {
            CHECK(integer_content(g) == 1);
            CHECK(g.leading() > Rational(0));
            CHECK(g.degree() >= 1);
        }
    }
}

TEST_CASE("factor_bivariate fixtures") {
    SUBCASE("(x - y)(x + y)") {
        BiPoly f("x", "y");
        f.set(2, 0, Rational(1));
        f.set(0, 2, Rational(-1));
        const auto factors = factor_bivariate(f);
        REQUIRE(factors.size() == 2);
        const BiPoly prod = factors[0] * factors[1];
        CHECK((prod == f || prod == -f));
        for (const auto& g : factors) CHECK(g.total_degree() == 1);
    }
    SUBCASE("non-constant leading coefficients: ((y+1)x + 2)((y-1)x + 3)") {
        BiPoly a("x", "y"), b("x", "y");
        a.set(1, 1, Rational(1));
        a.set(1, 0, Rational(1));
        a.set(0, 0, Rational(2));
        b.set(1, 1, Rational(1));
        b.set(1, 0, Rational(-1));
        b.set(0, 0, Rational(3));
        const BiPoly f = a * b;
        const auto factors = factor_bivariate(f);
        REQUIRE(factors.size() == 2);
        CHECK(((factors[0] == a && factors[1] == b) || (factors[0] == b && factors[1] == a)));
    }
    SUBCASE("x^2 - y is irreducible") {
        BiPoly f("x", "y");
        f.set(2, 0, Rational(1));
        f.set(0, 1, Rational(-1));
        const auto factors = factor_bivariate(f);
        REQUIRE(factors.size() == 1);
        CHECK(factors[0] == f);
    }
    SUBCASE("roundtrip on random products (property)") {
        std::uniform_int_distribution<long> coeff(-4, 4);
        int done = 0;
        for (int iter = 0; done < 40 && iter < 400; ++iter) {
            BiPoly a("x", "y"), b("x", "y");
            for (long i = 0; i <= 1; ++i)
                for (long j = 0; j <= 1; ++j) {
                    a.add_to(i, j, Rational(coeff(rng)));
                    b.add_to(i, j, Rational(coeff(rng)));
                }
            a.set(1, 0, Rational(1));
            b.set(1, 0, Rational(1));
            BiPoly f = a * b;
            // keep only primitive squarefree truly bivariate samples
            if (f.deg1() < 1 || f.deg2() < 1) continue;
            if (content_var1(f).degree() > 0 || content_var2(f).degree() > 0) continue;
            if (integer_content(f) != 1) continue;
            if (gcd_var1(f, f.derivative_var1()).deg1() > 0) continue;
            const auto factors = factor_bivariate(f);
            BiPoly prod = BiPoly::constant("x", "y", Rational(1));
            for (const auto& g : factors) prod = prod * g;
            CHECK((prod == f || prod == -f));
            ++done;
        }
        CHECK(done == 40);
    }
}

TEST_CASE("returned factors admit no split at a second specialization") {
    BiPoly f("x", "y");
    f.set(2, 0, Rational(1));
    f.set(0, 2, Rational(-1));  // (x-y)(x+y)
    for (const BiPoly& g : factor_bivariate(f)) {
        // find a degree-preserving node the internal search would not pick first
        const UniPoly lc = g.coeffs_in_var1().back();
        int skipped = 0;
        for (long i = 0;; ++i) {
            const long k = (i + 1) / 2;
            const Rational y1(i % 2 == 1 ? k : -k);
            if (lc.eval(y1).is_zero()) continue;
            if (++skipped < 2) continue;  // skip the first valid node
            const UniPoly spec = g.eval_var2(y1);
            const auto fl = factor_univariate(spec);
            CHECK(fl.factors.size() == 1);  // no nontrivial split at the new node
            break;
        }
    }
}

TEST_CASE("select_modular_factor") {
    // synthetic candidates of y-degree p + 1 = 2
    BiPoly pass("x", "y");  // y^2 - x: diagonal x^2 - x = x(x-1) splits
    pass.set(0, 2, Rational(1));
    pass.set(1, 0, Rational(-1));
    BiPoly fail("x", "y");  // x^2 y^2 + 1: diagonal x^4 + 1 is irreducible
    fail.set(2, 2, Rational(1));
    fail.set(0, 0, Rational(1));
    FactorList<BiPoly> candidates;
    candidates.factors.emplace_back(fail, 1);
    CHECK_THROWS_WITH_AS(select_modular_factor(candidates, 1, std::nullopt, "c"),
                         doctest::Contains("no factor satisfies CM criterion"), PipelineError);
    // a lone passing candidate is selected without hints
    FactorList<BiPoly> lone;
    lone.factors.emplace_back(pass, 1);
    CHECK(select_modular_factor(lone, 1, std::nullopt, "c").phi == pass);
    candidates.factors.emplace_back(pass, 1);
    const ModularPolynomial phi = select_modular_factor(candidates, 1, std::nullopt, "c");
    CHECK(phi.phi == pass);
    CHECK(phi.level == 1);
    // ambiguity: a second candidate whose diagonal -8x^2 also splits
    BiPoly pass2("x", "y");  // y^2 - 9x^2
    pass2.set(0, 2, Rational(1));
    pass2.set(2, 0, Rational(-9));
    candidates.factors.emplace_back(pass2, 1);
    CHECK_THROWS_AS(select_modular_factor(candidates, 1, std::nullopt, "c"), AmbiguityError);
    // cm hints break the tie: 1 is a root of pass's diagonal only
    const std::vector<Rational> hints{Rational(1)};
    const ModularPolynomial phi2 = select_modular_factor(candidates, 1, hints, "c");
    CHECK(phi2.phi == pass);
}

TEST_CASE("singular moduli") {
    // diagonal (x-2)(x-27): norms 2 and 27; deterministic order puts the
    // smaller constant term (-27) first
    const UniPoly diag = zpoly({-2, 1}) * zpoly({-27, 1});
    const auto report = singular_moduli_of_diagonal(diag);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].factor == zpoly({-27, 1}));
    CHECK(report.entries[0].norm == Rational(27));
    CHECK(report.entries[1].factor == zpoly({-2, 1}));
    CHECK(report.entries[1].norm == Rational(2));
}

TEST_CASE("Landau-Mignotte bound holds for factors of random products") {
    // exercised implicitly: recombination asserts the bound; a violation throws
    for (int iter = 0; iter < 20; ++iter) {
        const UniPoly f = random_int_poly(4, 20) * random_int_poly(4, 20);
        CHECK_NOTHROW(factor_univariate(f));
    }
}
