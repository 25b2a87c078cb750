#include "modeq/schwarzian.hpp"

#include <sstream>
#include <stdexcept>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

Rational double_pole_coeff(int e) {
    // 1/4 (1 - 1/e^2)
    const Rational ee(static_cast<long>(e) * e);
    return (Rational(1) - ee.reciprocal()) / Rational(4);
}

}  // namespace

std::vector<const EllipticPoint*> CurveData::finite_points() const {
    std::vector<const EllipticPoint*> r;
    for (const auto& p : points)
        if (p.finite()) r.push_back(&p);
    return r;
}

const EllipticPoint* CurveData::infinite_point() const {
    for (const auto& p : points)
        if (!p.finite()) return &p;
    return nullptr;
}

const EllipticPoint* CurveData::point_at(const Rational& a) const {
    for (const auto& p : points)
        if (p.finite() && *p.a == a) return &p;
    return nullptr;
}

void validate_curve_shape(const CurveData& curve) {
    if (curve.points.empty()) throw ValidationError("curve '" + curve.name + "' has no elliptic points");
    int infinite = 0;
    for (const auto& p : curve.points) {
        if (p.order < 2) throw ValidationError("curve '" + curve.name + "': elliptic point order must be >= 2");
        if (!p.finite()) {
            ++infinite;
            if (p.accessory)
                throw ValidationError("curve '" + curve.name + "': the infinite point carries no accessory parameter");
        } else if (!p.accessory) {
            throw ValidationError("curve '" + curve.name + "': finite point t=" + p.a->to_string() +
                                  " is missing its accessory parameter");
        }
    }
    if (infinite > 1) throw ValidationError("curve '" + curve.name + "': more than one infinite point");
    for (std::size_t i = 0; i < curve.points.size(); ++i)
        for (std::size_t j = i + 1; j < curve.points.size(); ++j) {
            const auto &p = curve.points[i], &q = curve.points[j];
            if (p.finite() != q.finite()) continue;
            if (!p.finite() || *p.a == *q.a)
                throw ValidationError("curve '" + curve.name + "': duplicate elliptic point values");
        }
}

bool AccessoryReport::valid() const {
    for (const auto& r : relations)
        if (!r.residual.is_zero()) return false;
    return true;
}

std::string AccessoryReport::to_string() const {
    std::ostringstream os;
    for (const auto& r : relations)
        os << r.description << ": residual " << r.residual.to_string() << "\n";
    return os.str();
}

AccessoryReport validate_accessory(const CurveData& curve) {
    AccessoryReport report;
    const auto finite = curve.finite_points();
    const EllipticPoint* inf = curve.infinite_point();

    Rational sum_b, sum_ab_c, sum_a2b_ac;
    for (const auto* p : finite) {
        const Rational& a = *p->a;
        const Rational b = p->accessory.value_or(Rational(0));
        const Rational c = double_pole_coeff(p->order);
        sum_b += b;
        sum_ab_c += a * b + c;
        sum_a2b_ac += a * a * b + Rational(2) * a * c;
    }

    if (inf == nullptr) {
        report.relations.push_back({"sum B_j", sum_b});
        report.relations.push_back({"sum (a_j B_j + (1 - 1/e_j^2)/4)", sum_ab_c});
        report.relations.push_back({"sum (a_j^2 B_j + a_j (1 - 1/e_j^2)/2)", sum_a2b_ac});
    } else {
        report.relations.push_back({"sum B_j", sum_b});
        report.relations.push_back({"sum (a_j B_j + (1 - 1/e_j^2)/4) - (1 - 1/e_r^2)/4",
                                    sum_ab_c - double_pole_coeff(inf->order)});
    }
    return report;
}

SchwarzianODE build_Q(const CurveData& curve) {
    validate_curve_shape(curve);
    const AccessoryReport report = validate_accessory(curve);
    if (!report.valid())
        throw ValidationError("curve '" + curve.name + "' violates the accessory relations:\n" +
                              report.to_string());

    const std::string var = "t";
    RationalFunction q(var);
    for (const auto* p : curve.finite_points()) {
        const UniPoly lin = UniPoly::linear_root(var, *p->a);
        const UniPoly lin2 = lin * lin;
        q = q + RationalFunction(UniPoly::constant(var, double_pole_coeff(p->order)), lin2);
        q = q + RationalFunction(UniPoly::constant(var, *p->accessory), lin);
    }
    return SchwarzianODE{q, curve};
}

std::vector<Rational> extract_accessory(const RationalFunction& Q,
                                        const std::vector<EllipticPoint>& points) {
    std::vector<Rational> out;
    for (const auto& p : points) {
        if (!p.finite()) continue;
        const PuiseuxSeries local = laurent_expand(Q, *p.a, 0);
        if (local.is_zero() || local.offset() != Rational(-2))
            throw std::domain_error("pole order mismatch at t=" + p.a->to_string() +
                                    ": expected a double pole");
        const Rational lead = local.coeff_at(Rational(-2));
        if (lead != double_pole_coeff(p.order))
            throw std::domain_error("double-pole coefficient mismatch at t=" + p.a->to_string() +
                                    ": got " + lead.to_string() + ", expected " +
                                    double_pole_coeff(p.order).to_string());
        out.push_back(local.coeff_at(Rational(-1)));
    }
    return out;
}

std::pair<Rational, Rational> indicial_exponents(int order) {
    if (order < 2) throw std::domain_error("elliptic point order must be >= 2");
    const Rational e(static_cast<long>(order));
    const Rational half(1, 2);
    const Rational delta = e.reciprocal() / Rational(2);
    return {half - delta, half + delta};
}

PuiseuxSeries laurent_expand(const RationalFunction& f, const Rational& center, long n) {
    if (f.is_zero()) return PuiseuxSeries::zero(Rational(n + 1), f.variable());
    const UniPoly num_s = f.num().shifted(center);
    UniPoly den_s = f.den().shifted(center);
    // Pole order = number of trailing zero coefficients of the shifted denominator.
    long pole = 0;
    while (den_s.coeff(pole).is_zero()) ++pole;
    if (pole > 0) {
        std::vector<Rational> reduced(den_s.coeffs().begin() + pole, den_s.coeffs().end());
        den_s = UniPoly(den_s.variable(), std::move(reduced));
    }
    if (den_s.is_zero()) throw std::domain_error("zero denominator after shift");
    const long series_len = n + pole;
    if (series_len < 0) return PuiseuxSeries::zero(Rational(n + 1), f.variable());
    const PuiseuxSeries unit =
        series_mul(series_from_poly(num_s, series_len), series_recip(series_from_poly(den_s, series_len)));
    return unit.shifted_exponent(Rational(-pole)).truncated_through(Rational(n));
}

PuiseuxSeries frobenius_series(const SchwarzianODE& ode, const EllipticPoint& point,
                               const Rational& rho, long n) {
    if (!point.finite()) throw std::domain_error("Frobenius expansion requires a finite point");
    if (n < 0) throw std::invalid_argument("negative truncation order");
    const auto [rho1, rho2] = indicial_exponents(point.order);
    if (rho != rho1 && rho != rho2)
        throw std::domain_error("branch exponent " + rho.to_string() +
                                " is not an indicial exponent of the order-" +
                                std::to_string(point.order) + " point");

    // Laurent coefficients q_{-2}..q_{n-2} of Q at the point.
    const PuiseuxSeries q_local = laurent_expand(ode.Q, *point.a, n - 2);
    const auto q = [&](long m) { return q_local.coeff_at(Rational(m)); };

    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[0] = Rational(1);
    for (long k = 1; k <= n; ++k) {
        const Rational idx = rho + Rational(k);
        const Rational multiplier = idx * (idx - Rational(1)) + q(-2);
        if (multiplier.is_zero())
            throw std::domain_error("resonant recurrence at index " + std::to_string(k));
        Rational rhs;
        for (long i = 1; i <= k; ++i) rhs += q(i - 2) * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = -rhs / multiplier;
    }
    return PuiseuxSeries(rho, std::move(c), ode.Q.variable());
}

PuiseuxSeries ode_residual(const SchwarzianODE& ode, const EllipticPoint& point,
                           const PuiseuxSeries& f) {
    if (!point.finite()) throw std::domain_error("residual requires a finite point");
    const long n = std::max<long>(f.order(), 0);
    const PuiseuxSeries q_local = laurent_expand(ode.Q, *point.a, n - 2);
    const PuiseuxSeries f2 = series_derivative(series_derivative(f));
    return series_add(f2, series_mul(q_local, f));
}

}  // namespace modeq
