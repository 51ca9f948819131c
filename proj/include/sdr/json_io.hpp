#pragma once

#include <string>

#include <json.hpp>

#include "sdr/triangle.hpp"

namespace sdr {

/// Triangle window as JSON: {"name": ..., "rows": [["1"], ["1","1"], ...]}.
/// Entries are written as rational literals in strings so that consumers
/// never round them.
nlohmann::ordered_json window_to_json(const Window& w);

/// Inverse of window_to_json. Entries may be JSON integers or literal
/// strings ("p/q"); anything else (floats in particular) is rejected.
Window window_from_json(const nlohmann::ordered_json& j);

Window load_window_file(const std::string& path);

void save_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace sdr
