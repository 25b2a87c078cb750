#include <algorithm>
#include <stdexcept>

#include "modeq/eliminate.hpp"
#include "modeq/errors.hpp"

namespace modeq {

namespace {

BiPoly divide_coeffs_var2(const BiPoly& f, const UniPoly& d) {
    // Divides every coefficient of a var2 power (a polynomial in var1) by d.
    BiPoly out(f.var1(), f.var2());
    const std::vector<UniPoly> cs = f.coeffs_in_var2();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].is_zero()) continue;
        const UniPoly q = poly_exact_div(cs[j], d);
        for (long i = 0; i <= q.degree(); ++i)
            if (!q.coeff(i).is_zero()) out.set(i, static_cast<long>(j), q.coeff(i));
    }
    return out;
}

BiPoly divide_coeffs_var1(const BiPoly& f, const UniPoly& d) {
    BiPoly out(f.var1(), f.var2());
    const std::vector<UniPoly> cs = f.coeffs_in_var1();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        const UniPoly q = poly_exact_div(cs[i], d);
        for (long j = 0; j <= q.degree(); ++j)
            if (!q.coeff(j).is_zero()) out.set(static_cast<long>(i), j, q.coeff(j));
    }
    return out;
}

}  // namespace

ContentSplit strip_content(const BiPoly& r) {
    if (r.is_zero()) throw std::invalid_argument("strip_content: zero polynomial");
    if (!is_integer_bipoly(r))
        throw std::invalid_argument("strip_content: input must have integer coefficients");

    UniPoly cx = content_var1(r);          // in var1, positive leading coefficient
    BiPoly rest = divide_coeffs_var2(r, cx);
    UniPoly cy = content_var2(rest);       // in var2
    rest = divide_coeffs_var1(rest, cy);

    BiPrimitiveSplit core_split = primitive_split(rest);
    // Whatever scalar is left (it can only be a sign) goes to the x-content.
    const Rational leftover = core_split.scale;
    if (!leftover.is_integer())
        throw std::logic_error("strip_content: non-integer leftover scale");
    cx = cx * leftover;
    return ContentSplit{cx, cy, core_split.primitive};
}

BivariateFactorization factor_bivariate_full(const BiPoly& f) {
    BivariateFactorization out;
    out.split = strip_content(f);
    out.x_content_factors = factor_univariate(out.split.x_content);
    out.y_content_factors = factor_univariate(out.split.y_content);
    out.core_factors.content = 1;
    for (const auto& [part, mult] : squarefree_decompose_var1(out.split.core)) {
        if (part.deg1() >= 1 && part.deg2() >= 1) {
            for (const BiPoly& irr : factor_bivariate(part))
                out.core_factors.factors.emplace_back(irr, mult);
        } else if (part.deg1() == 0 && part.deg2() == 0) {
            continue;  // unit
        } else {
            // Cannot appear: univariate factors live in the contents.
            throw std::logic_error("unexpected univariate factor in a stripped core");
        }
    }
    return out;
}

ModularPolynomial select_modular_factor(const FactorList<BiPoly>& factors, long p,
                                        const std::optional<std::vector<Rational>>& cm_hints,
                                        const std::string& curve_name) {
    struct Candidate {
        const BiPoly* poly;
        FactorList<UniPoly> diag_factors;
    };
    std::vector<Candidate> passing;
    for (const auto& [poly, mult] : factors.factors) {
        if (poly.deg2() != p + 1) continue;
        const UniPoly diag = poly.diagonal();
        FactorList<UniPoly> diag_factors = factor_univariate(diag);
        bool linear_split = true;
        for (const auto& [g, m] : diag_factors.factors)
            if (g.degree() > 1) linear_split = false;
        if (!linear_split) continue;
        if (cm_hints) {
            bool hints_ok = true;
            for (const Rational& hint : *cm_hints)
                if (!diag.eval(hint).is_zero()) hints_ok = false;
            if (!hints_ok) continue;
        }
        passing.push_back(Candidate{&poly, std::move(diag_factors)});
    }
    if (passing.empty())
        throw PipelineError("h", "no factor satisfies CM criterion: no candidate of y-degree " +
                                     std::to_string(p + 1) +
                                     " has a diagonal splitting into linear factors over Q");
    if (passing.size() > 1) throw AmbiguityError("h", "ambiguous; supply cm_hints");

    ModularPolynomial out;
    out.phi = primitive_split(*passing.front().poly).primitive;
    out.level = p;
    out.curve = curve_name;
    out.diagonal_factors = std::move(passing.front().diag_factors);
    return out;
}

SingularModuliReport singular_moduli_of_diagonal(const UniPoly& diagonal) {
    SingularModuliReport report;
    if (diagonal.is_zero()) return report;
    for (const auto& [g, mult] : factor_univariate(diagonal).factors) {
        SingularModulusEntry entry;
        entry.factor = g;
        entry.multiplicity = mult;
        const Rational ratio = g.constant_term() / g.leading();
        entry.norm = (g.degree() % 2 == 0) ? ratio : -ratio;
        report.entries.push_back(std::move(entry));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SingularModulusEntry& a, const SingularModulusEntry& b) {
                  const int c = UniPoly::compare(a.factor, b.factor);
                  return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
              });
    return report;
}

SingularModuliReport singular_moduli(const ModularPolynomial& phi) {
    return singular_moduli_of_diagonal(phi.phi.diagonal());
}

}  // namespace modeq
