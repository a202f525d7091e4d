#pragma once

#include <initializer_list>

#include "json.hpp"

namespace leafcut {

/// Object with exactly the required keys plus any of the optional ones;
/// SchemaError naming `what` otherwise.
void check_keys(const nlohmann::json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* what);

}  // namespace leafcut
