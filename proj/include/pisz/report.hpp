#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pisz/enumerate.hpp"
#include "pisz/invariants.hpp"
#include "pisz/theorems.hpp"

namespace pisz {

/// Version of the JSON field layout documented in docs/json-schema.md.
inline constexpr int kJsonSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json invariants_json(std::size_t line, std::string_view graph6, const InvariantVector& iv, int n, std::size_t m);
Json error_json(std::size_t line, std::string_view input, std::string_view error);
Json verdict_json(std::size_t line, std::string_view graph6, const TheoremVerdict& v);

/// Excludes elapsed time so that equal runs serialize identically.
Json summary_json(const EnumerationSummary& s);

std::string invariants_csv_header();
std::string invariants_csv_row(std::size_t line, std::string_view graph6, const InvariantVector& iv, int n,
                               std::size_t m);
std::string verdict_csv_header();
std::string verdict_csv_row(std::size_t line, std::string_view graph6, const TheoremVerdict& v);

}  // namespace pisz
