#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modeq/ratfun.hpp"
#include "modeq/series.hpp"

namespace modeq {

/// Elliptic point of the curve: Hauptmodul value a (absent for infinity),
/// order e >= 2, accessory parameter B (present iff a is finite), and an
/// optional CM-discriminant label kept for documentation.
struct EllipticPoint {
    std::optional<Rational> a;
    int order = 2;
    std::optional<Rational> accessory;
    std::optional<long> disc;

    bool finite() const { return a.has_value(); }
};

struct CurveData {
    std::string name;
    std::vector<EllipticPoint> points;
    std::optional<long> discriminant;  // curve-level label, used for coprimality checks

    std::vector<const EllipticPoint*> finite_points() const;
    const EllipticPoint* infinite_point() const;  // nullptr when all points finite
    const EllipticPoint* point_at(const Rational& a) const;
};

// Structural checks: e >= 2 everywhere, pairwise distinct values, at most one
// infinite point, accessory present exactly at finite points.
// Throws ValidationError.
void validate_curve_shape(const CurveData& curve);

struct AccessoryRelation {
    std::string description;
    Rational residual;
};

struct AccessoryReport {
    std::vector<AccessoryRelation> relations;
    bool valid() const;
    std::string to_string() const;
};

// Exact residuals of the linear relations the accessory parameters must
// satisfy (one set when all points are finite, another when one is infinite).
AccessoryReport validate_accessory(const CurveData& curve);

struct SchwarzianODE {
    RationalFunction Q;  // in t
    CurveData source;
};

// Q(t) = 1/4 sum (1 - 1/e_j^2)/(t - a_j)^2 + sum B_j/(t - a_j) over finite points.
// Throws on duplicate points or orders < 2; requires the accessory relations
// to hold exactly.
SchwarzianODE build_Q(const CurveData& curve);

// Simple-pole coefficients B_j of Q at the given finite points. Verifies that
// each pole is exactly double with leading coefficient 1/4 (1 - 1/e_j^2).
std::vector<Rational> extract_accessory(const RationalFunction& Q,
                                        const std::vector<EllipticPoint>& points);

// Roots of rho(rho - 1) + 1/4 (1 - 1/e^2), ascending: ((1 - 1/e)/2, (1 + 1/e)/2).
std::pair<Rational, Rational> indicial_exponents(int order);

// Laurent expansion of f in s = t - center, truncated at absolute exponent n.
PuiseuxSeries laurent_expand(const RationalFunction& f, const Rational& center, long n);

// Frobenius solution t^rho (1 + c_1 t + ... + c_n t^n) of F'' + Q F = 0 at the
// given finite elliptic point (series in t - a); rho must be one of the two
// indicial exponents of the point.
PuiseuxSeries frobenius_series(const SchwarzianODE& ode, const EllipticPoint& point,
                               const Rational& rho, long n);

// F'' + Q F for a computed solution, truncated to its guaranteed precision;
// zero for genuine solutions. Exposed for tests and the series dump.
PuiseuxSeries ode_residual(const SchwarzianODE& ode, const EllipticPoint& point,
                           const PuiseuxSeries& f);

}  // namespace modeq
