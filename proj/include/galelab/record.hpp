#pragma once

// JSON run records emitted by the command-line front end.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "galelab/simulate.hpp"
#include "galelab/types.hpp"

namespace galelab {

using Json = nlohmann::ordered_json;

#ifndef GALELAB_VERSION
#define GALELAB_VERSION "0.0.0"
#endif

inline constexpr const char* kVersion = GALELAB_VERSION;

struct RunRecord {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();  // the deterministic payload
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  std::int64_t wallclock_ms = 0;
  std::string version = kVersion;

  Json to_json() const;
  static RunRecord from_json(const Json& j);
  /// Single-line JSON.
  std::string dump() const { return to_json().dump(); }

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// {"num": "...", "den": "...", "decimal": "..."}; num/den make it lossless.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json estimate_json(const MCEstimate& est);
MCEstimate estimate_from_json(const Json& j);

/// Exact value of a decimal literal such as "0.75", "-2", "1.5e-3".
Rational parse_decimal(const std::string& text);

}  // namespace galelab
