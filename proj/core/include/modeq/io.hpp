#pragma once

#include <iosfwd>
#include <string>

#include "modeq/eliminate.hpp"
#include "modeq/hecke.hpp"
#include "modeq/schwarzian.hpp"

namespace modeq {

// All parsers throw ValidationError with "<source>:<line>: message" on bad
// input. Lines starting with '#' and blank lines are ignored everywhere.

CurveData parse_curve(std::istream& in, const std::string& source);
HeckeTable parse_hecke(std::istream& in, const std::string& source);
EigenTransferMap parse_eigenmap(std::istream& in, const std::string& source);

struct PhiFile {
    BiPoly phi{"x", "y"};
    long p = 0;
    std::string curve;
};
PhiFile parse_phi(std::istream& in, const std::string& source);

CurveData load_curve(const std::string& path);
HeckeTable load_hecke(const std::string& path);
EigenTransferMap load_eigenmap(const std::string& path);
PhiFile load_phi(const std::string& path);

void write_curve(std::ostream& out, const CurveData& curve);
void write_hecke(std::ostream& out, const HeckeTable& table);
void write_eigenmap(std::ostream& out, const EigenTransferMap& maps);
void write_phi(std::ostream& out, const BiPoly& phi, long p, const std::string& curve);
void write_singular_report(std::ostream& out, const SingularModuliReport& report);

std::string serialize_curve(const CurveData& curve);
std::string serialize_hecke(const HeckeTable& table);
std::string serialize_eigenmap(const EigenTransferMap& maps);

}  // namespace modeq
