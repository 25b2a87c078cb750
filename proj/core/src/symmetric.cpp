#include "modeq/symmetric.hpp"

#include <stdexcept>

namespace modeq {

SymmetricData newton_to_elementary(const std::vector<RationalFunction>& power_sums) {
    if (power_sums.empty()) throw std::invalid_argument("no power sums supplied");
    const std::string var = power_sums.front().variable();
    SymmetricData sym;
    sym.prime = static_cast<long>(power_sums.size()) - 1;
    sym.e.push_back(RationalFunction(var, Rational(1)));
    for (std::size_t m = 1; m <= power_sums.size(); ++m) {
        RationalFunction acc(var);
        int sign = 1;
        for (std::size_t i = 1; i <= m; ++i) {
            const RationalFunction term = sym.e[m - i] * power_sums[i - 1];
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        sym.e.push_back(acc * Rational(1, static_cast<long>(m)));
    }
    return sym;
}

std::vector<RationalFunction> elementary_to_power_sums(const std::vector<RationalFunction>& e,
                                                       std::size_t count) {
    if (e.empty() || !(e[0] == RationalFunction(e[0].variable(), Rational(1))))
        throw std::invalid_argument("elementary symmetric list must start with e_0 = 1");
    const std::string var = e[0].variable();
    const auto e_at = [&](std::size_t i) {
        return i < e.size() ? e[i] : RationalFunction(var);
    };
    // p_m = (-1)^{m-1} m e_m + sum_{i=1..m-1} (-1)^{i-1} e_i p_{m-i}
    std::vector<RationalFunction> p;
    for (std::size_t m = 1; m <= count; ++m) {
        RationalFunction acc = e_at(m) * Rational(m % 2 == 1 ? static_cast<long>(m)
                                                            : -static_cast<long>(m));
        for (std::size_t i = 1; i < m; ++i) {
            const RationalFunction term = e_at(i) * p[m - i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        p.push_back(acc);
    }
    return p;
}

PsiFunction build_psi(const SymmetricData& sym) {
    const long p = sym.prime;
    UniPoly lcd = UniPoly::constant("x", Rational(1));
    std::vector<UniPoly> dens, nums;
    for (const auto& em : sym.e) {
        nums.push_back(em.num().with_variable("x"));
        dens.push_back(em.den().with_variable("x"));
        lcd = poly_lcm_z(lcd, dens.back());
    }
    BiPoly psi("z", "x");
    for (std::size_t m = 0; m < sym.e.size(); ++m) {
        const long zdeg = p + 1 - static_cast<long>(m);
        const UniPoly coeff = poly_exact_div(lcd, dens[m]) * nums[m];
        const UniPoly signed_coeff = (m % 2 == 0) ? coeff : -coeff;
        for (long j = 0; j <= signed_coeff.degree(); ++j)
            if (!signed_coeff.coeff(j).is_zero()) psi.set(zdeg, j, signed_coeff.coeff(j));
    }
    // Joint normalization: strip the common integer content, keep den's
    // leading coefficient positive so that the z^{p+1} coefficient stays den.
    Integer common = int_gcd(integer_content(psi), integer_content(lcd));
    if (lcd.leading().sign() < 0) common = -common;
    if (common != 1 && common != 0) {
        psi = psi / Rational(common);
        lcd = lcd / Rational(common);
    }
    return PsiFunction{psi, lcd, p};
}

BiPoly reverse_psi(const PsiFunction& psi) {
    BiPoly out("z", "y");
    const long top = psi.prime + 1;
    for (const auto& [ij, c] : psi.psi.terms()) out.set(top - ij.first, ij.second, c);
    return out;
}

}  // namespace modeq
