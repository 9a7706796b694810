#pragma once

#include "json.hpp"

#include <string>

namespace besselbound::cli {

using Json = nlohmann::ordered_json;

/// Indented JSON with every floating-point number printed to 17 significant
/// digits; non-finite numbers become null.
std::string to_text(const Json& value);

} // namespace besselbound::cli
