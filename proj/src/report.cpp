#include "grpf/report.hpp"

#include <limits>

namespace grpf {

json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json to_json(const Weight& w) { return json(w); }

json to_json(const WindowLabel& l) { return json::array({l.l, l.m}); }

json to_json(const WindowSet& s) {
  auto arr = json::array();
  for (const auto& l : s) arr.push_back(to_json(l));
  return arr;
}

json to_json(const BwbResult& r) {
  if (r.vanishes()) return {{"outcome", "Vanishes"}};
  const auto& h = *r.cohomology;
  return {{"outcome", "Cohomology"}, {"degree", h.degree}, {"weight", h.representation},
          {"dimension", to_json(h.dimension)}};
}

json to_json(const CohomologyTable& t) {
  json j = json::object();
  for (const auto& [deg, d] : t.entries) j[std::to_string(deg)] = to_json(d);
  return j;
}

json to_json(const HodgeDiamond& h) {
  auto rows = json::array();
  for (int p = 0; p <= h.dim(); ++p) {
    auto row = json::array();
    for (int q = 0; q <= h.dim(); ++q) row.push_back(to_json(h(p, q)));
    rows.push_back(std::move(row));
  }
  auto middle = json::array();
  for (const auto& x : h.middle_row()) middle.push_back(to_json(x));
  return {{"dim", h.dim()}, {"h", rows}, {"middle_row", middle}};
}

json to_json(const Classification& c) {
  return {{"dim_y1", c.dim_y1},
          {"dim_y2", c.dim_y2},
          {"y1_type", to_string(c.y1_type)},
          {"y2_type", to_string(c.y2_type)},
          {"y1_empty", c.y1_empty},
          {"y2_empty", c.y2_empty},
          {"y2_smoothable", c.y2_smoothable},
          {"theorem_applies", c.theorem_applies},
          {"window_inclusion", c.window_inclusion}};
}

json to_json(const CohomologyResult& r) {
  json degrees = json::object();
  for (const auto& [deg, b] : r.degrees)
    degrees[std::to_string(deg)] = b.exact() ? to_json(b.lower) : json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
  auto page = json::array();
  for (const auto& e : r.page)
    page.push_back({{"a", e.a}, {"b", e.b}, {"dimension", to_json(e.dimension)}, {"total_degree", e.total_degree()}});
  return {{"mode", to_string(r.mode)}, {"degrees", degrees}, {"page_one", page}, {"reasoning", r.reasoning}};
}

json Report::to_json() const {
  json j{{"command", command}, {"params", params}, {"result", result}, {"provenance", provenance}};
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

}  // namespace grpf
