#pragma once

#include <string>

#include "betalab/instances.hpp"
#include "betalab/measure.hpp"

namespace betalab {

// Instance file schema (JSON, UTF-8):
//   {
//     "points": ["label", ...],
//     "metric": [["p/q", ...], ...],
//     "group":  {"kind": "cyclic"|"integers"|"free_abelian"|"free",
//                "n"/"rank": integer},
//     "action": {"s1": [image indices], ...},
//     "provenance": {...}            // optional, generated instances only
//   }
// Permutations are 0-indexed image arrays; rationals are "p/q" strings.
// Loading validates everything and reports schema problems, metric-axiom
// failures and relation failures as distinct errors with precise locations.

Instance load_instance(const std::string& path);
Instance parse_instance(const std::string& json_text);
void save_instance(const Instance& instance, const std::string& path);
std::string serialize_instance(const Instance& instance);

// Canonical serialization hash used as the report fingerprint.
std::string instance_fingerprint(const Instance& instance);

// Measure literal: { "<point index>": "p/q", ... }; omitted points weigh 0.
RationalMeasure parse_measure(const std::string& json_text, int space_size);
std::string serialize_measure(const RationalMeasure& mu);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace betalab
