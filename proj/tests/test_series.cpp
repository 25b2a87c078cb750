#include <doctest.h>

#include <random>

#include "modeq/series.hpp"

using namespace modeq;

namespace {

PuiseuxSeries make(Rational offset, std::initializer_list<Rational> coeffs) {
    return PuiseuxSeries(std::move(offset), std::vector<Rational>(coeffs), "t");
}

std::mt19937_64 rng(977u);

}  // namespace

TEST_CASE("offsets add under multiplication") {
    // t^{1/3}(1+t) * t^{2/3}(1-t) = t(1 - t^2)
    const auto a = make(Rational(1, 3), {Rational(1), Rational(1)});
    const auto b = make(Rational(2, 3), {Rational(1), Rational(-1)});
    const auto p = series_mul(a, b);
    CHECK(p.offset() == Rational(1));
    CHECK(p.coeffs() == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(p.order() == 1);  // min truncation of the operands
}

TEST_CASE("reciprocal of 1 - t") {
    const auto s = make(Rational(0), {Rational(1), Rational(-1), Rational(0), Rational(0)});
    const auto r = series_recip(s);
    CHECK(r.offset() == Rational(0));
    CHECK(r.coeffs() == std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK_THROWS_AS(series_recip(PuiseuxSeries::zero(Rational(3))), std::domain_error);
}

TEST_CASE("F1*F2 leading terms") {
    // F1 = t^{1/3}(1 - 10/81 t - ...), F2 = t^{2/3}(1 - 5/81 t - ...)
    const auto f1 = make(Rational(1, 3), {Rational(1), Rational(-10, 81)});
    const auto f2 = make(Rational(2, 3), {Rational(1), Rational(-5, 81)});
    const auto p = series_mul(f1, f2);
    CHECK(p.offset() == Rational(1));
    CHECK(p.coeffs()[0] == Rational(1));
    CHECK(p.coeffs()[1] == Rational(-15, 81));
}

TEST_CASE("normalization strips leading zeros without losing precision") {
    const auto s = make(Rational(2), {Rational(0), Rational(0), Rational(5), Rational(7)});
    CHECK(s.offset() == Rational(4));
    CHECK(s.order() == 1);
    CHECK(s.known_through() == Rational(5));

    const auto z = PuiseuxSeries(Rational(1), {Rational(0), Rational(0)}, "t");
    CHECK(z.is_zero());
    CHECK(z.known_through() == Rational(2));  // O(t^3)
}

TEST_CASE("addition aligns offsets and respects precision") {
    const auto a = make(Rational(-2), {Rational(2, 9), Rational(1)});
    const auto b = make(Rational(0), {Rational(3), Rational(4), Rational(5)});
    const auto sum = series_add(a, b);
    CHECK(sum.offset() == Rational(-2));
    CHECK(sum.known_through() == Rational(-1));  // a is only known through t^{-1}
    CHECK(sum.coeff_at(Rational(-2)) == Rational(2, 9));
    CHECK(sum.coeff_at(Rational(-1)) == Rational(1));
    CHECK_THROWS_AS(series_add(make(Rational(1, 3), {Rational(1)}), b), std::invalid_argument);

    const auto cancel = series_sub(a, a);
    CHECK(cancel.is_zero());
    CHECK(cancel.known_through() == Rational(-1));
}

TEST_CASE("derivative") {
    const auto s = make(Rational(1, 3), {Rational(1), Rational(3)});
    const auto d = series_derivative(s);
    CHECK(d.offset() == Rational(-2, 3));
    CHECK(d.coeffs()[0] == Rational(1, 3));
    CHECK(d.coeffs()[1] == Rational(4));
    // derivative of a constant loses its leading term but keeps the grid
    const auto c = make(Rational(0), {Rational(5), Rational(0)});
    CHECK(series_derivative(c).is_zero());
}

TEST_CASE("recip(s) * s = 1 within precision (property)") {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> len(1, 6);
    std::uniform_int_distribution<long> off(-3, 3);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Rational> c;
        const long n = len(rng);
        c.emplace_back(coeff(rng) * 2 + 1);  // nonzero leading
        for (long i = 1; i < n; ++i) c.emplace_back(coeff(rng));
        const PuiseuxSeries s(Rational(off(rng), 3), c, "t");
        const auto one = series_mul(s, series_recip(s));
        CHECK(one.offset() == Rational(0));
        CHECK(one.coeffs()[0] == Rational(1));
        for (long i = 1; i <= one.order(); ++i)
            CHECK(one.coeffs()[static_cast<std::size_t>(i)] == Rational(0));
    }
}

TEST_CASE("pow") {
    const auto s = make(Rational(1, 2), {Rational(1), Rational(1)});
    const auto sq = series_pow(s, 2);
    CHECK(sq.offset() == Rational(1));
    CHECK(sq.coeffs()[0] == Rational(1));
    CHECK(sq.coeffs()[1] == Rational(2));
    const auto one = series_pow(s, 0);
    CHECK(one.offset() == Rational(0));
    CHECK(one.coeffs()[0] == Rational(1));
}
