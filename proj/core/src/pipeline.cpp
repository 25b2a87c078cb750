#include "modeq/pipeline.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

struct Log {
    std::ostream* out;
    template <class... Args>
    void line(const Args&... args) {
        if (!out) return;
        ((*out << args), ...);
        *out << "\n";
    }
};

void log_matrix(Log& log, const RatMatrix& m, const std::string& indent) {
    for (long i = 0; i < m.size(); ++i) {
        std::ostringstream row;
        for (long j = 0; j < m.size(); ++j) row << (j ? " " : "") << m.at(i, j).to_string();
        log.line(indent, row.str());
    }
}

void log_psi(Log& log, const PsiFunction& psi) {
    log.line("  denominator D(x) = ", psi.den.to_string());
    const auto z_coeffs = psi.psi.coeffs_in_var1();
    for (long i = static_cast<long>(z_coeffs.size()) - 1; i >= 0; --i)
        log.line("  z^", i, ": ", z_coeffs[static_cast<std::size_t>(i)].to_string());
}

[[noreturn]] void rethrow_as_pipeline(const std::string& step, const std::exception& e) {
    throw PipelineError(step, e.what());
}

}  // namespace

Mode parse_mode(const std::string& name) {
    if (name == "modeq") return Mode::modeq;
    if (name == "transfer") return Mode::transfer;
    if (name == "series") return Mode::series;
    if (name == "verify") return Mode::verify;
    if (name == "singular-moduli") return Mode::singular_moduli;
    throw ValidationError("unknown mode '" + name + "'");
}

ParsedInputs parse_inputs(const JobConfig& config) {
    if (config.curve_path.empty()) throw ValidationError("a curve file is required");
    ParsedInputs in{load_curve(config.curve_path), {}, {}};

    if (config.prime != 0 && config.base_prime != 0 && config.prime == config.base_prime)
        throw ValidationError("prime and base prime must differ");
    if (config.prime != 0 && in.curve.discriminant &&
        std::gcd(config.prime, *in.curve.discriminant) != 1)
        throw ValidationError("prime " + std::to_string(config.prime) +
                              " is not coprime to the curve discriminant " +
                              std::to_string(*in.curve.discriminant));

    const AccessoryReport accessory = validate_accessory(in.curve);
    if (!accessory.valid())
        throw ValidationError(config.curve_path + ": accessory relations fail:\n" +
                              accessory.to_string());

    if (!config.hecke_paths.empty()) {
        for (const auto& path : config.hecke_paths) {
            HeckeTable t = load_hecke(path);
            if (in.hecke.by_weight.empty()) {
                in.hecke = std::move(t);
            } else {
                if (t.prime != in.hecke.prime)
                    throw ValidationError(path + ": table prime differs from earlier tables");
                for (auto& [k, m] : t.by_weight) {
                    if (in.hecke.by_weight.count(k))
                        throw ValidationError(path + ": duplicate weight " + std::to_string(k));
                    in.hecke.by_weight.emplace(k, std::move(m));
                }
            }
        }
        validate_table(in.curve, in.hecke);
        if (config.base_prime != 0 && in.hecke.prime != config.base_prime)
            throw ValidationError("Hecke table prime " + std::to_string(in.hecke.prime) +
                                  " does not match --base-prime " +
                                  std::to_string(config.base_prime));
    }

    if (!config.eigenmap_path.empty()) {
        in.eigenmap = load_eigenmap(config.eigenmap_path);
        validate_eigenmap(in.curve, in.eigenmap);
        if (config.base_prime != 0 && in.eigenmap.base_prime != config.base_prime)
            throw ValidationError("eigen-map base prime mismatch");
        if (config.prime != 0 && in.eigenmap.target_prime != config.prime)
            throw ValidationError("eigen-map target prime " +
                                  std::to_string(in.eigenmap.target_prime) +
                                  " does not match --prime " + std::to_string(config.prime));
    }
    return in;
}

ModeqResult run_modeq(const JobConfig& config, std::ostream* log_stream) {
    Log log{log_stream};
    if (config.prime < 2) throw ValidationError("--prime is required for mode modeq");
    if (config.hecke_paths.empty()) throw ValidationError("a Hecke table file is required");
    if (config.eigenmap_path.empty()) throw ValidationError("an eigen-map file is required");
    const ParsedInputs in = parse_inputs(config);
    const long p = config.prime;

    log.line("# modeq run");
    log.line("curve ", in.curve.name);
    log.line("prime ", p, " base ", in.hecke.prime);

    ModeqResult result;

    // (a) seed form of smallest positive weight (or the explicit override)
    long k = 0;
    try {
        k = config.seed_weight ? *config.seed_weight : smallest_positive_weight(in.curve);
        const long d = dimension(in.curve, k);
        if (d < 1)
            throw ValidationError("seed weight " + std::to_string(k) + " has dimension " +
                                  std::to_string(d));
        log.line("(a) seed weight ", k, ", dim ", d);
    } catch (const std::exception& e) {
        rethrow_as_pipeline("a", e);
    }

    // (b) T_{p0} matrices must cover the weights k, 2k, ..., (p+1)k
    try {
        for (long m = 1; m <= p + 1; ++m) {
            const long km = k * m;
            if (!in.hecke.by_weight.count(km))
                throw ValidationError("Hecke table is missing weight " + std::to_string(km));
            if (!in.eigenmap.by_weight.count(km))
                throw ValidationError("eigen-map is missing weight " + std::to_string(km));
        }
        std::ostringstream os;
        for (const auto& [w, m] : in.hecke.by_weight) os << " " << w;
        log.line("(b) T_", in.hecke.prime, " table weights:", os.str());
    } catch (const std::exception& e) {
        rethrow_as_pipeline("b", e);
    }

    // (c) eigen-maps (ingested; the Fourier data is upstream of this tool)
    log.line("(c) eigen-maps for T_", in.hecke.prime, " -> T_", p, " ingested");

    // (d) transfer to T_p and read off the power sums
    try {
        result.transferred = hecke_transfer_table(in.hecke, in.eigenmap);
        for (const auto& [w, m] : result.transferred.by_weight) {
            log.line("(d) T_", p, " at weight ", w, ":");
            log_matrix(log, m, "  ");
        }
        result.sums = power_sums(in.curve, p, k, result.transferred);
        for (std::size_t m = 0; m < result.sums.sums.size(); ++m)
            log.line("(d) power sum m=", m + 1, ": ", result.sums.sums[m].to_string());
    } catch (const std::exception& e) {
        rethrow_as_pipeline("d", e);
    }

    // (e) Newton's identities and Psi assembly
    try {
        const SymmetricData sym = newton_to_elementary(result.sums.sums);
        for (std::size_t m = 0; m < sym.e.size(); ++m)
            log.line("(e) e_", m, " = ", sym.e[m].to_string());
        result.psi = build_psi(sym);
        log.line("(e) Psi(z,x) cleared numerator / denominator:");
        log_psi(log, result.psi);
    } catch (const std::exception& e) {
        rethrow_as_pipeline("e", e);
    }

    // (f) reversal, resultant, content strip, squarefree, factorization
    try {
        const BiPoly reversed = reverse_psi(result.psi);
        log.line("(f) Psi'(z,y) = z^", p + 1, " Psi(1/z,y):");
        {
            const auto z_coeffs = reversed.coeffs_in_var1();
            for (long i = static_cast<long>(z_coeffs.size()) - 1; i >= 0; --i)
                log.line("  z^", i, ": ", z_coeffs[static_cast<std::size_t>(i)].to_string());
        }
        const BiPoly resultant = resultant_z(result.psi.psi, reversed);
        log.line("(f) resultant R(x,y): ", resultant.terms().size(), " terms, degx ",
                 resultant.deg1(), ", degy ", resultant.deg2());
        log.line("  R = ", resultant.to_string());
        result.factorization = factor_bivariate_full(resultant);
        log.line("(f) x-content: ", result.factorization.split.x_content.to_string());
        log.line("(f) y-content: ", result.factorization.split.y_content.to_string());
        log.line("(f) core has ", result.factorization.core_factors.factors.size(),
                 " irreducible bivariate factor(s):");
        for (const auto& [factor, mult] : result.factorization.core_factors.factors)
            log.line("  mult ", mult, ": ", factor.to_string());
    } catch (const std::exception& e) {
        rethrow_as_pipeline("f", e);
    }

    // (h) CM selection and singular moduli
    try {
        result.phi = select_modular_factor(result.factorization.core_factors, p, config.cm_hints,
                                           in.curve.name);
        for (const auto& [factor, mult] : result.factorization.core_factors.factors) {
            const UniPoly diag = factor.diagonal();
            const auto diag_factors = factor_univariate(diag);
            bool linear = true;
            for (const auto& [g, m] : diag_factors.factors)
                if (g.degree() > 1) linear = false;
            log.line("(h) candidate degy=", factor.deg2(), " diagonal splits linear: ",
                     linear ? "yes" : "no", (factor == result.phi.phi ? "  [selected]" : ""));
            for (const auto& [g, m] : diag_factors.factors)
                log.line("    deg ", g.degree(), " mult ", m, ": ", g.to_string());
        }
        log.line("(h) Phi(x,y) equals Phi(y,x): ",
                 result.phi.phi == result.phi.phi.transposed() ? "yes" : "no");
        result.moduli = singular_moduli(result.phi);
    } catch (const AmbiguityError&) {
        throw;
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        rethrow_as_pipeline("h", e);
    }
    return result;
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    os << "phi level p=" << p << " curve=" << curve << "\n";
    os << "degx " << degx << ", degy " << degy << "\n";
    os << "primitive: " << (primitive ? "yes" : "no") << "\n";
    os << "irreducible: " << (irreducible ? "yes" : "no") << "\n";
    if (!irreducible)
        for (const auto& f : proper_factors) os << "  factor: " << f.to_string() << "\n";
    os << "y^" << degy << " coefficient: " << top_coeff.to_string() << "\n";
    os << "symmetric under swapping x and y: " << (symmetric_in_xy ? "yes" : "no") << "\n";
    os << "diagonal splits into linear factors over Q: "
       << (diagonal_splits_linear ? "yes" : "no") << "\n";
    std::ostringstream entries;
    write_singular_report(entries, diagonal);
    os << entries.str();
    return os.str();
}

VerifyReport run_verify(const JobConfig& config, std::ostream* log_stream) {
    Log log{log_stream};
    if (config.phi_path.empty()) throw ValidationError("a candidate Phi file is required (--phi)");
    const PhiFile file = load_phi(config.phi_path);
    VerifyReport report;
    report.p = file.p;
    report.curve = file.curve;
    report.degx = file.phi.deg1();
    report.degy = file.phi.deg2();
    if (!is_integer_bipoly(file.phi))
        throw ValidationError(config.phi_path + ": Phi must have integer coefficients");
    report.primitive = integer_content(file.phi) == 1;

    const BivariateFactorization fact = factor_bivariate_full(file.phi);
    const bool trivial_contents =
        fact.split.x_content.is_constant() && fact.split.y_content.is_constant();
    report.irreducible = trivial_contents && fact.core_factors.factors.size() == 1 &&
                         fact.core_factors.factors.front().second == 1;
    if (!report.irreducible)
        for (const auto& [f, mult] : fact.core_factors.factors)
            for (int i = 0; i < mult; ++i) report.proper_factors.push_back(f);

    const auto by_y = file.phi.coeffs_in_var2();
    report.top_coeff = by_y.back();
    report.symmetric_in_xy = file.phi == file.phi.transposed();

    const UniPoly diag = file.phi.diagonal();
    report.diagonal = singular_moduli_of_diagonal(diag);
    report.diagonal_splits_linear = true;
    for (const auto& e : report.diagonal.entries)
        if (e.factor.degree() > 1) report.diagonal_splits_linear = false;

    log.line("# verify run");
    log.line(report.to_string());
    return report;
}

std::string run_series(const JobConfig& config) {
    if (config.curve_path.empty()) throw ValidationError("a curve file is required");
    const CurveData curve = load_curve(config.curve_path);
    const AccessoryReport accessory = validate_accessory(curve);
    if (!accessory.valid())
        throw ValidationError(config.curve_path + ": accessory relations fail:\n" +
                              accessory.to_string());
    const SchwarzianODE ode = build_Q(curve);

    const EllipticPoint* point = nullptr;
    if (config.series_point) {
        point = curve.point_at(*config.series_point);
        if (!point)
            throw ValidationError("t=" + config.series_point->to_string() +
                                  " is not an elliptic point of curve '" + curve.name + "'");
    } else {
        for (const auto& q : curve.points)
            if (q.finite()) {
                point = &q;
                break;
            }
        if (!point) throw ValidationError("curve has no finite elliptic point");
    }

    std::ostringstream os;
    os << "curve " << curve.name << "\n";
    os << "Q(t) = " << ode.Q.to_string() << "\n";
    os << "point t=" << point->a->to_string() << " order " << point->order << "\n";
    const auto [rho1, rho2] = indicial_exponents(point->order);
    const auto dump = [&](int branch, const Rational& rho) {
        const PuiseuxSeries f = frobenius_series(ode, *point, rho, config.series_order);
        os << "F" << branch << " (rho=" << rho.to_string() << ") = " << f.to_string() << "\n";
    };
    if (!config.series_branch || *config.series_branch == 1) dump(1, rho1);
    if (!config.series_branch || *config.series_branch == 2) dump(2, rho2);
    return os.str();
}

HeckeTable run_transfer(const JobConfig& config, std::ostream* log_stream) {
    Log log{log_stream};
    if (config.hecke_paths.empty()) throw ValidationError("a Hecke table file is required");
    if (config.eigenmap_path.empty()) throw ValidationError("an eigen-map file is required");
    const ParsedInputs in = parse_inputs(config);
    HeckeTable out = hecke_transfer_table(in.hecke, in.eigenmap);
    log.line("# transfer run: T_", in.hecke.prime, " -> T_", out.prime);
    for (const auto& [w, m] : out.by_weight) {
        log.line("weight ", w, ":");
        log_matrix(log, m, "  ");
    }
    return out;
}

SingularModuliReport run_singular_moduli(const JobConfig& config, std::ostream* log_stream) {
    Log log{log_stream};
    if (config.phi_path.empty()) throw ValidationError("a Phi file is required (--phi)");
    const PhiFile file = load_phi(config.phi_path);
    const SingularModuliReport report = singular_moduli_of_diagonal(file.phi.diagonal());
    log.line("# singular-moduli run for level ", file.p, " on ", file.curve);
    std::ostringstream os;
    write_singular_report(os, report);
    log.line(os.str());
    return report;
}

}  // namespace modeq
