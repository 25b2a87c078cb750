#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "modeq/errors.hpp"
#include "modeq/pipeline.hpp"

// Exit codes: 0 success, 2 validation failure, 3 pipeline failure,
// 4 ambiguity requiring cm_hints.

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw modeq::ValidationError(path + ": cannot open for writing");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular equations for genus-zero Shimura curves"};

    std::string mode_name = "modeq";
    modeq::JobConfig config;
    std::string cm_hints_arg;
    std::string point_arg;
    std::string log_path;
    int branch = 0;

    app.add_option("--mode", mode_name,
                   "modeq | transfer | series | verify | singular-moduli")
        ->capture_default_str();
    app.add_option("--curve", config.curve_path, "curve data file");
    app.add_option("--hecke", config.hecke_paths, "Hecke table file(s) for the base prime");
    app.add_option("--eigenmap", config.eigenmap_path, "eigenvalue transfer map file");
    app.add_option("--phi", config.phi_path, "candidate Phi file (verify / singular-moduli)");
    app.add_option("--prime", config.prime, "target prime p");
    app.add_option("--base-prime", config.base_prime, "base prime p0 of the ingested tables");
    long seed_weight = 0;
    app.add_option("--seed-weight", seed_weight, "override the seed form weight");
    app.add_option("--cm-hints", cm_hints_arg,
                   "comma-separated rational CM coordinates for factor selection");
    app.add_option("--order", config.series_order, "series truncation order")->capture_default_str();
    app.add_option("--point", point_arg, "elliptic point t-value for mode series (default: first finite)");
    app.add_option("--branch", branch, "series branch 1 or 2 (default: both)");
    app.add_option("--out", config.out_path, "output path (Phi file / table / report)");
    app.add_option("--log", log_path, "run log path (default: <out>.log or stderr)");

    CLI11_PARSE(app, argc, argv);

    try {
        config.mode = modeq::parse_mode(mode_name);
        if (seed_weight > 0) config.seed_weight = seed_weight;
        if (branch != 0) {
            if (branch != 1 && branch != 2) throw modeq::ValidationError("--branch must be 1 or 2");
            config.series_branch = branch;
        }
        if (!point_arg.empty()) config.series_point = modeq::parse_rational(point_arg);
        if (!cm_hints_arg.empty()) {
            std::vector<modeq::Rational> hints;
            std::stringstream ss(cm_hints_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) hints.push_back(modeq::parse_rational(tok));
            config.cm_hints = std::move(hints);
        }

        std::ofstream log_file;
        std::ostream* log = &std::cerr;
        if (!log_path.empty()) {
            log_file = open_out(log_path);
            log = &log_file;
        } else if (!config.out_path.empty()) {
            log_file = open_out(config.out_path + ".log");
            log = &log_file;
        }

        switch (config.mode) {
            case modeq::Mode::modeq: {
                if (config.out_path.empty())
                    throw modeq::ValidationError("--out is required for mode modeq");
                const modeq::ModeqResult result = modeq::run_modeq(config, log);
                auto out = open_out(config.out_path);
                modeq::write_phi(out, result.phi.phi, result.phi.level, result.phi.curve);
                auto moduli = open_out(config.out_path + ".moduli");
                modeq::write_singular_report(moduli, result.moduli);
                std::cout << "wrote " << config.out_path << " and " << config.out_path
                          << ".moduli\n";
                break;
            }
            case modeq::Mode::transfer: {
                const modeq::HeckeTable table = modeq::run_transfer(config, log);
                if (config.out_path.empty()) {
                    modeq::write_hecke(std::cout, table);
                } else {
                    auto out = open_out(config.out_path);
                    modeq::write_hecke(out, table);
                    std::cout << "wrote " << config.out_path << "\n";
                }
                break;
            }
            case modeq::Mode::series: {
                const std::string dump = modeq::run_series(config);
                if (config.out_path.empty()) {
                    std::cout << dump;
                } else {
                    auto out = open_out(config.out_path);
                    out << dump;
                    std::cout << "wrote " << config.out_path << "\n";
                }
                break;
            }
            case modeq::Mode::verify: {
                const modeq::VerifyReport report = modeq::run_verify(config, log);
                if (config.out_path.empty()) {
                    std::cout << report.to_string();
                } else {
                    auto out = open_out(config.out_path);
                    out << report.to_string();
                    std::cout << "wrote " << config.out_path << "\n";
                }
                break;
            }
            case modeq::Mode::singular_moduli: {
                const modeq::SingularModuliReport report =
                    modeq::run_singular_moduli(config, log);
                if (config.out_path.empty()) {
                    modeq::write_singular_report(std::cout, report);
                } else {
                    auto out = open_out(config.out_path);
                    modeq::write_singular_report(out, report);
                    std::cout << "wrote " << config.out_path << "\n";
                }
                break;
            }
        }
    } catch (const modeq::AmbiguityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const modeq::PipelineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const modeq::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
