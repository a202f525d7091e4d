#include "leafcut/json_schema.hpp"

#include <string>

#include "leafcut/errors.hpp"

namespace leafcut {

void check_keys(const nlohmann::json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : required) known = known || k == key;
    for (const char* key : optional) known = known || k == key;
    if (!known) throw SchemaError(std::string(what) + ": unknown field '" + k + "'");
  }
  for (const char* key : required)
    if (!j.contains(key)) throw SchemaError(std::string(what) + ": missing field '" + key + "'");
}

}  // namespace leafcut
