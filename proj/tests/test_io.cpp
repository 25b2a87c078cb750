#include <doctest.h>

#include <fstream>
#include <sstream>

#include "modeq/errors.hpp"
#include "modeq/io.hpp"
#include "modeq/pipeline.hpp"

using namespace modeq;

namespace {
const std::string kData = MODEQ_DATA_DIR;
}

TEST_CASE("parse the shipped D=10 fixtures") {
    const CurveData curve = load_curve(kData + "/d10/curve.txt");
    CHECK(curve.name == "X0(10)/W10");
    CHECK(curve.discriminant == 10);
    REQUIRE(curve.points.size() == 4);
    CHECK(curve.points[0].a == Rational(0));
    CHECK(curve.points[0].order == 3);
    CHECK(curve.points[0].accessory == Rational(20, 243));
    CHECK_FALSE(curve.points[3].finite());

    const HeckeTable t3 = load_hecke(kData + "/d10/hecke_t3.txt");
    CHECK(t3.prime == 3);
    CHECK(t3.by_weight.size() == 8);
    CHECK(t3.by_weight.at(4).at(0, 0) == Rational(-8));
    CHECK(t3.by_weight.at(32).at(2, 0) == Rational(Integer("1803534336")));
    validate_table(curve, t3);

    const EigenTransferMap maps = load_eigenmap(kData + "/d10/eigenmap_t3_t7.txt");
    CHECK(maps.base_prime == 3);
    CHECK(maps.target_prime == 7);
    CHECK(maps.by_weight.size() == 8);
    CHECK(maps.by_weight.at(24) ==
          UniPoly("a", {Rational(Integer("145233723936"), Integer(24)), Rational(156628, 24),
                        Rational(-1, 24)}));
    validate_eigenmap(curve, maps);

    const PhiFile phi = load_phi(kData + "/d10/phi7_known.txt");
    CHECK(phi.p == 7);
    CHECK(phi.curve == "X0(10)/W10");
    CHECK(phi.phi.deg1() == 8);
    CHECK(phi.phi.deg2() == 8);
}

TEST_CASE("serialization round-trips") {
    const CurveData curve = load_curve(kData + "/d10/curve.txt");
    std::istringstream cin2(serialize_curve(curve));
    const CurveData curve2 = parse_curve(cin2, "mem");
    CHECK(serialize_curve(curve2) == serialize_curve(curve));

    const HeckeTable t3 = load_hecke(kData + "/d10/hecke_t3.txt");
    std::istringstream hin(serialize_hecke(t3));
    const HeckeTable t3b = parse_hecke(hin, "mem");
    CHECK(serialize_hecke(t3b) == serialize_hecke(t3));

    const EigenTransferMap maps = load_eigenmap(kData + "/d10/eigenmap_t3_t7.txt");
    std::istringstream ein(serialize_eigenmap(maps));
    const EigenTransferMap maps2 = parse_eigenmap(ein, "mem");
    CHECK(serialize_eigenmap(maps2) == serialize_eigenmap(maps));
    CHECK(maps2.by_weight == maps.by_weight);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("curve syntax") {
        std::istringstream in("[curve]\nname=c\npoint a=0\n");
        CHECK_THROWS_WITH_AS(parse_curve(in, "f"), doctest::Contains("f:3"), ValidationError);
    }
    SUBCASE("missing section") {
        std::istringstream in("name=c\n");
        CHECK_THROWS_WITH_AS(parse_curve(in, "f"), doctest::Contains("f:1"), ValidationError);
    }
    SUBCASE("ragged matrix") {
        std::istringstream in("prime 3\nweight 12\n1 2\n3\n");
        CHECK_THROWS_WITH_AS(parse_hecke(in, "f"), doctest::Contains("ragged"), ValidationError);
    }
    SUBCASE("rational token 305856/1 is canonicalized") {
        std::istringstream in("prime 3\nweight 4\n305856/1\n");
        const HeckeTable t = parse_hecke(in, "f");
        CHECK(t.by_weight.at(4).at(0, 0) == Rational(305856));
        std::ostringstream os;
        write_hecke(os, t);
        CHECK(os.str() == "prime 3\nweight 4\n305856\n");
    }
    SUBCASE("phi degree cross-check") {
        std::istringstream in("PHI p=7 curve=c degx=2 degy=2\n1 1 5\n");
        CHECK_THROWS_WITH_AS(parse_phi(in, "f"), doctest::Contains("declared degrees"),
                             ValidationError);
    }
}

TEST_CASE("dimension mismatch is reported at ingestion") {
    JobConfig config;
    config.curve_path = kData + "/d10/curve.txt";
    // weight-12 matrix of side 3 (dim is 2)
    std::ostringstream bad;
    bad << "prime 3\nweight 12\n1 2 3\n4 5 6\n7 8 9\n";
    const std::string path = "/tmp/modeq_bad_hecke.txt";
    {
        std::ofstream out(path);
        out << bad.str();
    }
    config.hecke_paths = {path};
    CHECK_THROWS_WITH_AS(parse_inputs(config), doctest::Contains("weight 12"), ValidationError);
}

TEST_CASE("config invariants") {
    JobConfig config;
    config.curve_path = kData + "/d10/curve.txt";
    config.prime = 3;
    config.base_prime = 3;
    CHECK_THROWS_WITH_AS(parse_inputs(config), doctest::Contains("must differ"), ValidationError);
    config.base_prime = 7;
    config.prime = 5;  // 5 divides the declared discriminant 10
    CHECK_THROWS_WITH_AS(parse_inputs(config), doctest::Contains("coprime"), ValidationError);
}

TEST_CASE("run_modeq reports a missing weight with its step label") {
    const HeckeTable full = load_hecke(kData + "/d10/hecke_t3.txt");
    HeckeTable trimmed = full;
    trimmed.by_weight.erase(28);
    const std::string path = "/tmp/modeq_hecke_no28.txt";
    {
        std::ofstream out(path);
        write_hecke(out, trimmed);
    }
    JobConfig config;
    config.mode = Mode::modeq;
    config.curve_path = kData + "/d10/curve.txt";
    config.hecke_paths = {path};
    config.eigenmap_path = kData + "/d10/eigenmap_t3_t7.txt";
    config.prime = 7;
    config.base_prime = 3;
    try {
        run_modeq(config, nullptr);
        FAIL("expected a pipeline error");
    } catch (const PipelineError& e) {
        CHECK(e.step == "b");
        CHECK(std::string(e.what()).find("28") != std::string::npos);
    }
}

TEST_CASE("run_verify lists the factors of a reducible candidate") {
    const std::string path = "/tmp/modeq_reducible_phi.txt";
    {
        std::ofstream out(path);
        out << "PHI p=1 curve=c degx=2 degy=2\n2 0 1\n0 2 -1\n";  // x^2 - y^2
    }
    JobConfig config;
    config.mode = Mode::verify;
    config.phi_path = path;
    const VerifyReport report = run_verify(config, nullptr);
    CHECK(report.primitive);
    CHECK_FALSE(report.irreducible);
    CHECK(report.proper_factors.size() == 2);
    CHECK(report.to_string().find("factor:") != std::string::npos);
}

TEST_CASE("run_series") {
    JobConfig config;
    config.curve_path = kData + "/d10/curve.txt";
    SUBCASE("order 0 prints just the leading branch term") {
        config.series_order = 0;
        config.series_branch = 1;
        const std::string dump = run_series(config);
        CHECK(dump.find("F1 (rho=1/3) = t^(1/3) + O(t^(4/3))") != std::string::npos);
    }
    SUBCASE("non-elliptic point is rejected") {
        config.series_point = Rational(5);
        CHECK_THROWS_WITH_AS(run_series(config), doctest::Contains("not an elliptic point"),
                             ValidationError);
    }
    SUBCASE("byte-identical reruns") {
        config.series_order = 6;
        CHECK(run_series(config) == run_series(config));
    }
}

TEST_CASE("accessory failure is reported with residuals") {
    const std::string path = "/tmp/modeq_bad_curve.txt";
    {
        std::ofstream out(path);
        out << "[curve]\nname=bad\npoint a=0 e=3 B=1/3 disc=-3\npoint a=inf e=2\n";
    }
    JobConfig config;
    config.curve_path = path;
    CHECK_THROWS_WITH_AS(parse_inputs(config), doctest::Contains("accessory relations fail"),
                         ValidationError);
}
