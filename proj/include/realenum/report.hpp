#pragma once

#include <string>

#include "json.hpp"

#include "realenum/numeric.hpp"

namespace realenum {

// Reports are built as ordered JSON so the two renderings carry the same
// content in the same order; neither embeds timestamps, so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

// JSON number when it fits 64 bits, decimal string otherwise.
Json json_integer(const Integer& value);

std::string render_text(const Json& report);

// format is "text" or "json"; throws std::invalid_argument otherwise.
std::string render_report(const Json& report, const std::string& format);

}  // namespace realenum
