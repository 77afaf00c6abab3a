#include "grpf/amap_io.hpp"

#include <fstream>

namespace grpf {

namespace {

BigInt parse_entry(const nlohmann::json& x) {
  if (x.is_number_integer()) return BigInt(x.get<long long>());
  if (x.is_number_unsigned()) return BigInt(x.get<unsigned long long>());
  if (x.is_string()) {
    const auto s = x.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(ErrorKind::Parse, "matrix entry \"" + s + "\" is not an integer");
    return BigInt(s);
  }
  throw Error(ErrorKind::Parse, "matrix entries must be integers");
}

int parse_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw Error(ErrorKind::Parse, std::string("missing or non-integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

AMap amap_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "AMap must be a JSON object");
  AMap a{parse_int(j, "n"), parse_int(j, "k"), RationalScalars{}, {}};

  if (!j.contains("field")) throw Error(ErrorKind::Parse, "missing field \"field\"");
  const auto& f = j.at("field");
  if (f.is_string() && f.get<std::string>() == "Q") {
    a.field = RationalScalars{};
  } else if (f.is_object() && f.contains("p") && f.at("p").is_number_unsigned()) {
    a.field = PrimeScalars{f.at("p").get<std::uint64_t>()};
  } else {
    throw Error(ErrorKind::Parse, "\"field\" must be \"Q\" or {\"p\": prime}");
  }

  if (!j.contains("matrix") || !j.at("matrix").is_array())
    throw Error(ErrorKind::Parse, "missing array field \"matrix\"");
  for (const auto& row : j.at("matrix")) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "matrix rows must be arrays");
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(parse_entry(x));
    a.matrix.push_back(std::move(r));
  }
  try {
    a.validate_shape();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return a;
}

nlohmann::json amap_to_json(const AMap& a) {
  nlohmann::json j;
  j["n"] = a.n;
  j["k"] = a.k;
  if (const auto* ps = std::get_if<PrimeScalars>(&a.field))
    j["field"] = {{"p", ps->p}};
  else
    j["field"] = "Q";
  auto rows = nlohmann::json::array();
  for (const auto& row : a.matrix) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) {
      if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        r.push_back(static_cast<long long>(x));
      else
        r.push_back(x.str());
    }
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j;
}

AMap load_amap(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return amap_from_json(j);
}

}  // namespace grpf
