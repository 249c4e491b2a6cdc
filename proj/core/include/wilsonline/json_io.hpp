#pragma once

#include "wilsonline/cluster.hpp"
#include "wilsonline/conf.hpp"
#include "wilsonline/matrix.hpp"
#include "wilsonline/surface.hpp"

#include <string>

namespace wilsonline {

// JSON wire formats. Rationals travel as "p/q" strings, Laurent polynomials
// in their canonical text form; serialization is deterministic so round trips
// are byte-identical.

std::string seed_to_json(const Seed& seed);
Seed seed_from_json(const std::string& text);

std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);

std::string config_to_json(const QuadConfig& cfg);
QuadConfig config_from_json(const std::string& text);

std::string surface_to_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const std::string& text);

std::string triangulation_to_json(const IdealTriangulation& t);
IdealTriangulation triangulation_from_json(const std::string& text);

} // namespace wilsonline
