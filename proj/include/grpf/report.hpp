#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grpf/bwb.hpp"
#include "grpf/geometry.hpp"
#include "grpf/hodge.hpp"
#include "grpf/sections.hpp"

namespace grpf {

using nlohmann::json;

/// Integers that fit in 64 bits render as JSON numbers, larger ones as decimal strings.
json to_json(const BigInt& x);
json to_json(const Weight& w);
json to_json(const WindowLabel& l);
json to_json(const WindowSet& s);
json to_json(const BwbResult& r);
json to_json(const CohomologyTable& t);
json to_json(const HodgeDiamond& h);
json to_json(const Classification& c);
json to_json(const CohomologyResult& r);

struct Report {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::vector<std::string> provenance;
  std::optional<double> timing_ms;

  json to_json() const;
};

}  // namespace grpf
