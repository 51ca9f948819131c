#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sdr/rational.hpp"
#include "sdr/triangle.hpp"

namespace sdr::testing {

/// Window literal from rational strings: wnd({{"1"}, {"-1","1"}}).
inline Window wnd(std::initializer_list<std::initializer_list<const char*>> rows,
                  std::string label = "literal") {
  std::vector<std::vector<Rat>> data;
  for (const auto& row : rows) {
    std::vector<Rat> r;
    for (const char* cell : row) r.push_back(Rat::parse(cell));
    data.push_back(std::move(r));
  }
  return Window(std::move(data), std::move(label));
}

/// Equality against a row literal, with a useful failure rendering.
inline bool rows_equal(const Window& w,
                       std::initializer_list<std::initializer_list<const char*>> expected) {
  return w == wnd(expected);
}

inline std::string render(const Window& w) {
  std::string out;
  for (Index n = 0; n < w.rows(); ++n) {
    for (Index k = 0; k <= n; ++k) {
      if (k) out += ' ';
      out += w(n, k).str();
    }
    out += '\n';
  }
  return out;
}

inline std::vector<Rat> rats(std::initializer_list<const char*> items) {
  std::vector<Rat> out;
  for (const char* s : items) out.push_back(Rat::parse(s));
  return out;
}

}  // namespace sdr::testing
