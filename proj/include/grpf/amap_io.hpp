#pragma once

#include <filesystem>

#include "json.hpp"

#include "grpf/pfaffian.hpp"

namespace grpf {

/// {"n": int, "k": int, "field": "Q" | {"p": prime}, "matrix": [[...], ...]}
/// Columns are the pairs (i, j), i < j, 1-indexed, in lexicographic order.
AMap amap_from_json(const nlohmann::json& j);
nlohmann::json amap_to_json(const AMap& a);
AMap load_amap(const std::filesystem::path& path);

}  // namespace grpf
