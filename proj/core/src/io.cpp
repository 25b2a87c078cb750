#include "modeq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "modeq/errors.hpp"

namespace modeq {

namespace {

struct LineReader {
    std::istream& in;
    std::string source;
    long line_no = 0;

    // Next significant line (comments and blanks skipped); false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const auto begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            const auto end = raw.find_last_not_of(" \t\r");
            out = raw.substr(begin, end - begin + 1);
            if (out.empty() || out[0] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError(source + ":" + std::to_string(line_no) + ": " + msg);
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long to_long(const LineReader& r, const std::string& tok) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected an integer, got '" + tok + "'");
    }
}

Rational to_rational(const LineReader& r, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
}

}  // namespace

CurveData parse_curve(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::string line;
    if (!r.next(line) || line != "[curve]") r.fail("expected '[curve]' section header");
    CurveData curve;
    bool have_name = false;
    while (r.next(line)) {
        if (line.rfind("name=", 0) == 0) {
            curve.name = line.substr(5);
            have_name = true;
            continue;
        }
        if (line.rfind("disc=", 0) == 0) {
            curve.discriminant = to_long(r, line.substr(5));
            continue;
        }
        const auto toks = split_ws(line);
        if (toks.empty() || toks[0] != "point")
            r.fail("expected a 'point' line, got '" + line + "'");
        EllipticPoint p;
        bool have_a = false, have_e = false;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto eq = toks[i].find('=');
            if (eq == std::string::npos) r.fail("expected key=value, got '" + toks[i] + "'");
            const std::string key = toks[i].substr(0, eq);
            const std::string val = toks[i].substr(eq + 1);
            if (key == "a") {
                if (val != "inf") p.a = to_rational(r, val);
                have_a = true;
            } else if (key == "e") {
                p.order = static_cast<int>(to_long(r, val));
                have_e = true;
            } else if (key == "B") {
                p.accessory = to_rational(r, val);
            } else if (key == "disc") {
                p.disc = to_long(r, val);
            } else {
                r.fail("unknown point attribute '" + key + "'");
            }
        }
        if (!have_a || !have_e) r.fail("point line needs both a= and e=");
        curve.points.push_back(std::move(p));
    }
    if (!have_name) throw ValidationError(source + ": missing 'name=' line");
    validate_curve_shape(curve);
    return curve;
}

HeckeTable parse_hecke(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::string line;
    if (!r.next(line)) r.fail("empty Hecke table file");
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "prime") r.fail("expected 'prime <p>' header");
    HeckeTable table;
    table.prime = to_long(r, toks[1]);
    while (r.next(line)) {
        toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != "weight") r.fail("expected 'weight <k>' line");
        const long k = to_long(r, toks[1]);
        if (table.by_weight.count(k)) r.fail("duplicate weight " + std::to_string(k));
        if (!r.next(line)) r.fail("missing matrix rows for weight " + std::to_string(k));
        auto row = split_ws(line);
        const long side = static_cast<long>(row.size());
        RatMatrix m(side);
        for (long i = 0; i < side; ++i) {
            if (i > 0) {
                if (!r.next(line)) r.fail("matrix at weight " + std::to_string(k) + " is missing rows");
                row = split_ws(line);
                if (static_cast<long>(row.size()) != side)
                    r.fail("matrix at weight " + std::to_string(k) + " has a ragged row");
            }
            for (long j = 0; j < side; ++j) m.at(i, j) = to_rational(r, row[static_cast<std::size_t>(j)]);
        }
        table.by_weight.emplace(k, std::move(m));
    }
    if (table.by_weight.empty()) r.fail("Hecke table has no weights");
    return table;
}

EigenTransferMap parse_eigenmap(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::string line;
    if (!r.next(line)) r.fail("empty eigen-map file");
    auto toks = split_ws(line);
    if (toks.size() != 4 || toks[0] != "base" || toks[2] != "target")
        r.fail("expected 'base <p0> target <p>' header");
    EigenTransferMap maps;
    maps.base_prime = to_long(r, toks[1]);
    maps.target_prime = to_long(r, toks[3]);
    while (r.next(line)) {
        toks = split_ws(line);
        if (toks.size() < 6 || toks[0] != "weight" || toks[2] != "den" || toks[4] != "coeffs")
            r.fail("expected 'weight <k> den <d> coeffs <c0 c1 ...>'");
        const long k = to_long(r, toks[1]);
        if (maps.by_weight.count(k)) r.fail("duplicate weight " + std::to_string(k));
        const Rational den = to_rational(r, toks[3]);
        if (den.is_zero()) r.fail("zero denominator at weight " + std::to_string(k));
        std::vector<Rational> coeffs;
        for (std::size_t i = 5; i < toks.size(); ++i)
            coeffs.push_back(to_rational(r, toks[i]) / den);
        maps.by_weight.emplace(k, UniPoly("a", std::move(coeffs)));
    }
    if (maps.by_weight.empty()) r.fail("eigen-map file has no weights");
    return maps;
}

PhiFile parse_phi(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::string line;
    if (!r.next(line)) r.fail("empty Phi file");
    auto toks = split_ws(line);
    if (toks.size() != 5 || toks[0] != "PHI")
        r.fail("expected 'PHI p=<p> curve=<name> degx=<dx> degy=<dy>' header");
    const auto keyed = [&](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0) r.fail("expected '" + key + "=...' in header");
        return tok.substr(key.size() + 1);
    };
    PhiFile out;
    out.p = to_long(r, keyed(toks[1], "p"));
    out.curve = keyed(toks[2], "curve");
    const long degx = to_long(r, keyed(toks[3], "degx"));
    const long degy = to_long(r, keyed(toks[4], "degy"));
    while (r.next(line)) {
        toks = split_ws(line);
        if (toks.size() != 3) r.fail("expected '<i> <j> <coefficient>'");
        const long i = to_long(r, toks[0]);
        const long j = to_long(r, toks[1]);
        const Rational c = to_rational(r, toks[2]);
        if (i < 0 || j < 0) r.fail("negative exponent");
        if (!out.phi.get(i, j).is_zero()) r.fail("duplicate term x^" + std::to_string(i) + " y^" + std::to_string(j));
        out.phi.set(i, j, c);
    }
    if (out.phi.deg1() != degx || out.phi.deg2() != degy)
        throw ValidationError(source + ": declared degrees (" + std::to_string(degx) + "," +
                              std::to_string(degy) + ") do not match terms (" +
                              std::to_string(out.phi.deg1()) + "," + std::to_string(out.phi.deg2()) +
                              ")");
    return out;
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    return in;
}

}  // namespace

CurveData load_curve(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_curve(in, path);
}
HeckeTable load_hecke(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_hecke(in, path);
}
EigenTransferMap load_eigenmap(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_eigenmap(in, path);
}
PhiFile load_phi(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_phi(in, path);
}

void write_curve(std::ostream& out, const CurveData& curve) {
    out << "[curve]\n";
    out << "name=" << curve.name << "\n";
    if (curve.discriminant) out << "disc=" << *curve.discriminant << "\n";
    for (const auto& p : curve.points) {
        out << "point a=" << (p.finite() ? p.a->to_string() : "inf") << " e=" << p.order;
        if (p.accessory) out << " B=" << p.accessory->to_string();
        if (p.disc) out << " disc=" << *p.disc;
        out << "\n";
    }
}

void write_hecke(std::ostream& out, const HeckeTable& table) {
    out << "prime " << table.prime << "\n";
    for (const auto& [k, m] : table.by_weight) {
        out << "weight " << k << "\n";
        for (long i = 0; i < m.size(); ++i) {
            for (long j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j).to_string();
            out << "\n";
        }
    }
}

void write_eigenmap(std::ostream& out, const EigenTransferMap& maps) {
    out << "base " << maps.base_prime << " target " << maps.target_prime << "\n";
    for (const auto& [k, g] : maps.by_weight) {
        Integer den = 1;
        for (const auto& c : g.coeffs()) den = int_lcm(den, c.den());
        out << "weight " << k << " den " << den.get_str() << " coeffs";
        for (const auto& c : g.coeffs()) out << " " << Integer(c.num() * (den / c.den())).get_str();
        out << "\n";
    }
}

void write_phi(std::ostream& out, const BiPoly& phi, long p, const std::string& curve) {
    out << "PHI p=" << p << " curve=" << curve << " degx=" << phi.deg1() << " degy=" << phi.deg2()
        << "\n";
    // ascending (j, i)
    std::vector<std::pair<std::pair<long, long>, Rational>> terms(phi.terms().begin(),
                                                                  phi.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return a.first.first < b.first.first;
    });
    for (const auto& [ij, c] : terms)
        out << ij.first << " " << ij.second << " " << c.to_string() << "\n";
}

void write_singular_report(std::ostream& out, const SingularModuliReport& report) {
    for (const auto& e : report.entries) {
        out << "factor deg=" << e.factor.degree() << " mult=" << e.multiplicity
            << " norm=" << e.norm.to_string() << " coeffs=";
        for (long i = 0; i <= e.factor.degree(); ++i)
            out << (i ? " " : "") << e.factor.coeff(i).to_string();
        out << "\n";
    }
}

std::string serialize_curve(const CurveData& curve) {
    std::ostringstream os;
    write_curve(os, curve);
    return os.str();
}
std::string serialize_hecke(const HeckeTable& table) {
    std::ostringstream os;
    write_hecke(os, table);
    return os.str();
}
std::string serialize_eigenmap(const EigenTransferMap& maps) {
    std::ostringstream os;
    write_eigenmap(os, maps);
    return os.str();
}

}  // namespace modeq
