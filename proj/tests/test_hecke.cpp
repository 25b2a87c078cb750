#include <doctest.h>

#include "modeq/bipoly.hpp"
#include "modeq/eliminate.hpp"
#include "modeq/errors.hpp"
#include "modeq/hecke.hpp"

using namespace modeq;

namespace {

CurveData d10_curve() {
    CurveData c;
    c.name = "X0(10)/W10";
    c.discriminant = 10;
    c.points = {
        EllipticPoint{Rational(0), 3, Rational(20, 243), -3},
        EllipticPoint{Rational(2), 2, Rational(-29, 400), -20},
        EllipticPoint{Rational(27), 2, Rational(-953, 97200), -40},
        EllipticPoint{std::nullopt, 2, std::nullopt, -8},
    };
    return c;
}

RatMatrix mat2(long a, long b, long c, long d) {
    RatMatrix m(2);
    m.at(0, 0) = Rational(a);
    m.at(0, 1) = Rational(b);
    m.at(1, 0) = Rational(c);
    m.at(1, 1) = Rational(d);
    return m;
}

}  // namespace

TEST_CASE("dimension formula on the D=10 curve") {
    const auto curve = d10_curve();
    const long expected[] = {1, 1, 2, 2, 2, 3, 3, 3};
    for (int i = 0; i < 8; ++i) CHECK(dimension(curve, 4 * (i + 1)) == expected[i]);
    CHECK_THROWS_AS(dimension(curve, 5), std::domain_error);
    CHECK_THROWS_AS(dimension(curve, 2), std::domain_error);
    CHECK(smallest_positive_weight(curve) == 4);
}

TEST_CASE("basis exponents") {
    const auto curve = d10_curve();
    const auto b4 = basis_exponents(curve, 4);
    CHECK(b4.point_exponents == std::vector<long>{1, 1, 1});
    CHECK(b4.dim == 1);
    const auto b12 = basis_exponents(curve, 12);
    CHECK(b12.point_exponents == std::vector<long>{4, 3, 3});
    CHECK(b12.dim == 2);
}

TEST_CASE("power embedding: F^m = f_{4m, d_{4m}}") {
    const auto curve = d10_curve();
    CHECK(power_embedding(curve, 4, 1) == std::vector<Rational>{Rational(1)});
    CHECK(power_embedding(curve, 4, 3) == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(power_embedding(curve, 4, 6) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    for (long m = 1; m <= 8; ++m) {
        const auto beta = power_embedding(curve, 4, m);
        CHECK(static_cast<long>(beta.size()) == dimension(curve, 4 * m));
        CHECK(beta.back() == Rational(1));  // unit vector at the last slot
    }
}

TEST_CASE("charpoly") {
    const RatMatrix a = mat2(468, -98, -1728, 136);
    const UniPoly chi = a.charpoly("x");
    // x^2 - 604x - 105696
    CHECK(chi == UniPoly("x", {Rational(-105696), Rational(-604), Rational(1)}));
    CHECK(RatMatrix::identity(3).charpoly("x") ==
          UniPoly("x", {Rational(-1), Rational(3), Rational(-3), Rational(1)}));
}

TEST_CASE("hecke transfer weight 12 fixture") {
    const RatMatrix a12 = mat2(468, -98, -1728, 136);
    const UniPoly g("a", {Rational(60500), Rational(-177)});
    const RatMatrix b12 = hecke_transfer(a12, g);
    CHECK(b12 == mat2(-22336, 17346, 305856, 36428));
}

TEST_CASE("transfer with constant and identity maps") {
    RatMatrix a(1);
    a.at(0, 0) = Rational(-8);
    const RatMatrix b = hecke_transfer(a, UniPoly::constant("a", Rational(-4)));
    CHECK(b.at(0, 0) == Rational(-4));
    const RatMatrix same = hecke_transfer(mat2(1, 2, 3, 4), UniPoly("a", {Rational(0), Rational(1)}));
    CHECK(same == mat2(1, 2, 3, 4));
}

TEST_CASE("transfer refuses repeated eigenvalues") {
    CHECK_THROWS_WITH_AS(hecke_transfer(RatMatrix::identity(2), UniPoly::constant("a", Rational(1))),
                         doctest::Contains("repeated eigenvalues"), std::domain_error);
}

TEST_CASE("transfer commutes and maps eigenvalues (property)") {
    // charpoly(B) = prod (x - g(lambda_i)), checked via the resultant route
    const RatMatrix a = mat2(468, -98, -1728, 136);
    const UniPoly g("a", {Rational(60500), Rational(-177)});
    const RatMatrix b = hecke_transfer(a, g);
    CHECK(a * b == b * a);

    const UniPoly chi_a = a.charpoly("a");
    const UniPoly chi_b = b.charpoly("x");
    // Res_a(chi_A(a), x - g(a)) = +- chi_B(x)
    const BiPoly lhs = BiPoly::from_unipoly_var1(chi_a.with_variable("z"), "w");
    BiPoly rhs("z", "x");
    rhs.set(0, 1, Rational(1));  // x
    for (long i = 0; i <= g.degree(); ++i) rhs.add_to(i, 0, -g.coeff(i));
    const BiPoly res = resultant_z(lhs, rhs);
    const UniPoly res_x = res.coeffs_in_var1().at(0).with_variable("x");
    const bool plus = res_x == chi_b;
    const bool minus = res_x == -chi_b;
    CHECK((plus || minus));
}

TEST_CASE("table validation against the dimension formula") {
    const auto curve = d10_curve();
    HeckeTable t;
    t.prime = 3;
    t.by_weight.emplace(12, RatMatrix(3));  // wrong side: dim is 2
    CHECK_THROWS_WITH_AS(validate_table(curve, t), doctest::Contains("weight 12"), ValidationError);
    EigenTransferMap maps;
    maps.base_prime = 3;
    maps.target_prime = 7;
    maps.by_weight.emplace(4, UniPoly("a", {Rational(1), Rational(2)}));  // deg 1 >= dim 1
    CHECK_THROWS_AS(validate_eigenmap(curve, maps), ValidationError);
}

TEST_CASE("power sums need every weight") {
    const auto curve = d10_curve();
    HeckeTable b;
    b.prime = 7;
    RatMatrix m(1);
    m.at(0, 0) = Rational(-4);
    b.by_weight.emplace(4, m);
    CHECK_THROWS_WITH_AS(power_sums(curve, 7, 4, b), doctest::Contains("weight 8"),
                         ValidationError);
}
