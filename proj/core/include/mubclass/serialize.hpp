#pragma once

#include <string>

#include "mubclass/bounds.hpp"
#include "mubclass/entropy.hpp"
#include "mubclass/orbits.hpp"
#include "mubclass/prime_power.hpp"
#include "mubclass/transform_table.hpp"

namespace mubclass {

// Canonical compact-JSON encodings of the result types.  Keys sorted,
// floating-point fields rendered as fixed 6-decimal strings, so the same
// result always serializes to the same bytes — digests hash these strings.
std::string to_json_string(const TransformTable& table);
std::string to_json_string(const OrbitPartition& partition);
std::string to_json_string(const ComplexityEstimate& estimate);
std::string to_json_string(const EntropyReport& report);
std::string to_json_string(const PermSet& perms, int d);

// CSV bodies (header line included, no meta comments).
std::string to_csv_string(const TransformTable& table);
std::string to_csv_string(std::span<const ComplexityCurveRow> rows);

// Fixed-point helper used by every serializer ("%.6f").
std::string format_fixed6(double v);

}  // namespace mubclass
