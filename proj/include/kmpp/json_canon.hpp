#pragma once

#include <string>

#include "json.hpp"

namespace kmpp {

/// Serializes with keys in insertion order, integers as integers and every
/// floating-point number at 17 significant digits, so that parsing the output
/// and dumping it again reproduces the bytes exactly.
std::string dump_canonical(const nlohmann::ordered_json& value);

}  // namespace kmpp
