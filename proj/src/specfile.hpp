#pragma once

#include <string>

#include "formulas.hpp"
#include "quotient.hpp"

namespace hp0 {

// Structured file formats (JSON). Dumps are canonical: parsing a dump and
// dumping again is byte-identical.

SurfaceSpec parse_surface_json(const std::string& text);
std::string dump_surface_json(const SurfaceSpec& spec);

GroupActionSpec parse_group_json(const std::string& text);
std::string dump_group_json(const GroupActionSpec& spec);

StratumData parse_strata_json(const std::string& text);
std::string dump_strata_json(const StratumData& data);

}  // namespace hp0
