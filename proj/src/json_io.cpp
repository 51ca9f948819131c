#include "sdr/json_io.hpp"

#include <fstream>

namespace sdr {

using nlohmann::ordered_json;

ordered_json window_to_json(const Window& w) {
  ordered_json j;
  j["name"] = w.label();
  ordered_json rows = ordered_json::array();
  for (const auto& row : w.data()) {
    ordered_json jrow = ordered_json::array();
    for (const auto& v : row) jrow.push_back(v.str());
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

Rat entry_from_json(const ordered_json& e, Index n, Index k) {
  auto where = [&] { return " at row " + std::to_string(n) + ", column " + std::to_string(k); };
  if (e.is_number_integer()) return Rat(mpz_class(std::to_string(e.get<long long>())));
  if (e.is_string()) return Rat::parse(e.get<std::string>());
  throw Error("triangle JSON: entry" + where() +
              " must be an integer or a rational literal string");
}

}  // namespace

Window window_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error("triangle JSON: top level must be an object");
  if (!j.contains("name") || !j.at("name").is_string())
    throw Error("triangle JSON: missing string field \"name\"");
  if (!j.contains("rows") || !j.at("rows").is_array())
    throw Error("triangle JSON: missing array field \"rows\"");

  const auto& jrows = j.at("rows");
  if (jrows.empty()) throw Error("triangle JSON: \"rows\" must hold at least one row");

  std::vector<std::vector<Rat>> rows;
  rows.reserve(jrows.size());
  for (std::size_t n = 0; n < jrows.size(); ++n) {
    const auto& jrow = jrows[n];
    if (!jrow.is_array() || jrow.size() != n + 1)
      throw Error("triangle JSON: row " + std::to_string(n) + " must be an array of " +
                  std::to_string(n + 1) + " entries");
    std::vector<Rat> row;
    row.reserve(n + 1);
    for (std::size_t k = 0; k < jrow.size(); ++k)
      row.push_back(entry_from_json(jrow[k], static_cast<Index>(n), static_cast<Index>(k)));
    rows.push_back(std::move(row));
  }
  return Window(std::move(rows), j.at("name").get<std::string>());
}

Window load_window_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open triangle file \"" + path + "\"");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("triangle file \"" + path + "\": invalid JSON: " + e.what());
  }
  try {
    return window_from_json(j);
  } catch (const Error& e) {
    throw Error("triangle file \"" + path + "\": " + e.what());
  }
}

void save_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed while writing \"" + path + "\"");
}

}  // namespace sdr
