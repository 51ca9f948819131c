#include "sdr/minor.hpp"

namespace sdr {

SquareMatrix SquareMatrix::identity(Index n) {
  SquareMatrix m(n);
  for (Index i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Rat det(SquareMatrix m) {
  const Index n = m.size;
  Rat result(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (Index c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      result = -result;
    }
    const Rat& p = m.at(col, col);
    result *= p;
    const Rat pinv = p.reciprocal();
    for (Index r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rat f = m.at(r, col) * pinv;
      for (Index c = col + 1; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
      m.at(r, col) = Rat(0);
    }
  }
  return result;
}

Window minor_triangle(const Window& w, Index j) {
  if (j < 1) throw Error("minor transform: block size must be >= 1");
  if (j > w.rows())
    throw Error("minor transform: block size " + std::to_string(j) + " exceeds the " +
                std::to_string(w.rows()) + "-row window");
  const Index out_rows = w.rows() - j + 1;
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(out_rows));
  for (Index n = 0; n < out_rows; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n + 1));
    for (Index k = 0; k <= n; ++k) {
      SquareMatrix block(j);
      for (Index r = 0; r < j; ++r)
        for (Index c = 0; c < j; ++c) block.at(r, c) = w.at(n + r, k + c);
      row.push_back(det(std::move(block)));
    }
  }
  return Window(std::move(rows), "minor" + std::to_string(j) + "(" + w.label() + ")");
}

Window toeplitz_minor_closed(const SequenceSpec& a, const SequenceSpec& b, const SequenceSpec& c,
                             Index j, Index n_rows) {
  if (j < 1) throw Error("closed-form minor: block size must be >= 1");
  if (j > n_rows)
    throw Error("closed-form minor: block size " + std::to_string(j) + " exceeds the " +
                std::to_string(n_rows) + "-row window");
  const std::vector<Rat> av = sequence_prefix(a, n_rows);
  const std::vector<Rat> bv = sequence_prefix(b, n_rows);
  const std::vector<Rat> cv = sequence_prefix(c, n_rows);
  if (bv[0] != Rat(1))
    throw Error("closed-form minor: b_0 must be 1, got " + bv[0].str());

  const Index out_rows = n_rows - j + 1;
  // Toeplitz determinants B_m, one per diagonal offset of the output.
  std::vector<Rat> B(static_cast<std::size_t>(out_rows));
  for (Index m = 0; m < out_rows; ++m) {
    SquareMatrix t(j);
    for (Index r = 0; r < j; ++r) {
      for (Index col = 0; col < j; ++col) {
        const Index idx = m - col + r;
        t.at(r, col) = idx < 0 ? Rat(0) : bv[static_cast<std::size_t>(idx)];
      }
    }
    B[static_cast<std::size_t>(m)] = det(std::move(t));
  }

  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(out_rows));
  for (Index n = 0; n < out_rows; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n + 1));
    for (Index k = 0; k <= n; ++k) {
      Rat v = B[static_cast<std::size_t>(n - k)];
      for (Index i = 0; i < j; ++i)
        v *= av[static_cast<std::size_t>(k + i)] * cv[static_cast<std::size_t>(n + i)];
      row.push_back(std::move(v));
    }
  }
  return Window(std::move(rows), "toeplitz_minor_closed");
}

}  // namespace sdr
