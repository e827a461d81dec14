#pragma once

#include <string>

#include "cmf/analysis.hpp"

namespace cmf {

// Stable-key JSON form of a Report.  Timings are deliberately excluded so
// reruns with the same seed are byte-identical.
std::string report_to_json(const Report& rep);

std::string report_to_text(const Report& rep);

}  // namespace cmf
