#pragma once

#include <string>

#include "json.hpp"
#include "oplus/filter.hpp"
#include "oplus/folkman.hpp"
#include "oplus/fs.hpp"
#include "oplus/gallery.hpp"
#include "oplus/semigroup.hpp"

namespace oplus {

inline constexpr const char* kVersion = "0.1.0";

// Cayley table file: {"n": int, "table": [[int,...],...], "label": string?}
nlohmann::json semigroup_to_json(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_json(const nlohmann::json& j);

// Window set: {"horizon": int, "members": [int,...]} or the generator
// shorthand {"horizon": int, "fs_of": [int,...]}.
nlohmann::json window_to_json(const WindowSet& w);
WindowSet window_from_json(const nlohmann::json& j);

// Witness: {"elements": [...], "sums_checked": int}
nlohmann::json witness_to_json(const FSWitness& w);

nlohmann::json trace_to_json(const std::vector<ExtensionStep>& steps);

nlohmann::json coloring_to_json(const Coloring& c);
nlohmann::json certificate_to_json(const FolkmanCertificate& cert);

nlohmann::json triple_scan_to_json(const TripleScan& scan);
nlohmann::json shift_witness_to_json(const ShiftWitnessReport& report);
nlohmann::json probe_to_json(const ProbeReport& report);

}  // namespace oplus
