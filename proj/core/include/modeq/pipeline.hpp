#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modeq/eliminate.hpp"
#include "modeq/hecke.hpp"
#include "modeq/io.hpp"
#include "modeq/symmetric.hpp"

namespace modeq {

enum class Mode { modeq, transfer, series, verify, singular_moduli };

Mode parse_mode(const std::string& name);

struct JobConfig {
    Mode mode = Mode::modeq;
    std::string curve_path;
    std::vector<std::string> hecke_paths;
    std::string eigenmap_path;
    std::string phi_path;  // candidate for verify / singular-moduli
    long prime = 0;
    long base_prime = 0;
    std::optional<long> seed_weight;
    std::optional<std::vector<Rational>> cm_hints;
    std::optional<Rational> series_point;
    std::optional<int> series_branch;  // 1 or 2; both when absent
    long series_order = 8;
    std::string out_path;
};

struct ParsedInputs {
    CurveData curve;
    HeckeTable hecke;
    EigenTransferMap eigenmap;
};

// Loads and cross-validates the input files for the given job: grammar,
// dimension/matrix-size checks, accessory relations, config invariants
// (p != p0, p coprime to a declared curve discriminant).
ParsedInputs parse_inputs(const JobConfig& config);

struct ModeqResult {
    ModularPolynomial phi;
    SingularModuliReport moduli;
    HeckeTable transferred;
    PowerSums sums;
    PsiFunction psi;
    BivariateFactorization factorization;
};

// Steps (a)-(h): seed selection, transfer, power sums, Newton conversion,
// Psi assembly and reversal, resultant, content strip + squarefree +
// factorization, CM selection. Logs every intermediate in exact form.
ModeqResult run_modeq(const JobConfig& config, std::ostream* log);

struct VerifyReport {
    long p = 0;
    std::string curve;
    long degx = 0;
    long degy = 0;
    bool primitive = false;
    bool irreducible = false;
    std::vector<BiPoly> proper_factors;  // when reducible
    UniPoly top_coeff;                   // coefficient of y^degy
    bool symmetric_in_xy = false;        // reported, never asserted
    bool diagonal_splits_linear = false;
    SingularModuliReport diagonal;
    std::string to_string() const;
};
VerifyReport run_verify(const JobConfig& config, std::ostream* log);

std::string run_series(const JobConfig& config);
HeckeTable run_transfer(const JobConfig& config, std::ostream* log);
SingularModuliReport run_singular_moduli(const JobConfig& config, std::ostream* log);

}  // namespace modeq
