#pragma once

#include <stdexcept>
#include <string>

// single-header nlohmann/json from vendor/
#include "json.hpp"

#include "twocat/nps.hpp"

namespace twocat {

using json = nlohmann::ordered_json;

// Schema errors carry the offending location.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

json fincategory_to_json(const FinCategory& c);
FinCategory fincategory_from_json(const json& j, const std::string& where = "");

json fin2category_to_json(const Fin2Category& d);
Fin2Category fin2category_from_json(const json& j, const std::string& where = "");

// A normal pseudofunctor with embedded domain and codomain.
json nps_to_json(const Fin2Category& a, const Fin2Category& b, const Nps& f);
// Returns (domain, codomain, tables); throws SchemaError on malformed input.
struct NpsFile {
  Fin2Category domain, codomain;
  Nps map;
};
NpsFile nps_from_json(const json& j, const std::string& where = "");

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace twocat
