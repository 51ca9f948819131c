#include "sdr/algebra.hpp"

#include <algorithm>

namespace sdr {

namespace {

std::optional<Index> min_limit(const std::optional<Index>& a, const std::optional<Index>& b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

std::vector<Rat> nonzero_prefix(const SequenceSpec& s, Index count, const char* which) {
  std::vector<Rat> v = sequence_prefix(s, count);
  for (Index n = 0; n < count; ++n)
    if (v[static_cast<std::size_t>(n)].is_zero())
      throw Error(std::string(which) + " sequence \"" + s.text + "\": term " + std::to_string(n) +
                  " is zero but must be invertible");
  return v;
}

std::vector<Rat> unit_prefix(const SequenceSpec& s, Index count) {
  std::vector<Rat> v = sequence_prefix(s, count);
  if (v.empty() || v[0] != Rat(1))
    throw Error("sequence \"" + s.text + "\": b_0 must be 1, got " +
                (v.empty() ? std::string("nothing") : v[0].str()));
  return v;
}

// Cauchy product truncated to the shorter prefix.
std::vector<Rat> convolve(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += x[i] * y[j];
  return out;
}

}  // namespace

Triangle hadamard_product(const Triangle& a, const Triangle& b) {
  return Triangle("hadamard(" + a.name() + "," + b.name() + ")",
                  [a, b](Index n, Index k) { return a.entry(n, k) * b.entry(n, k); },
                  min_limit(a.row_limit(), b.row_limit()));
}

Triangle hadamard_inverse(const Triangle& a) {
  return Triangle("hadamard_inv(" + a.name() + ")",
                  [a](Index n, Index k) {
                    Rat v = a.entry(n, k);
                    if (v.is_zero())
                      throw Error("hadamard inverse of \"" + a.name() + "\": entry (" +
                                  std::to_string(n) + "," + std::to_string(k) + ") is zero");
                    return v.reciprocal();
                  },
                  a.row_limit());
}

Window matmul(const Window& a, const Window& b) {
  if (a.rows() != b.rows())
    throw Error("matmul: windows have " + std::to_string(a.rows()) + " and " +
                std::to_string(b.rows()) + " rows");
  const Index N = a.rows();
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(N));
  for (Index n = 0; n < N; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n + 1), Rat(0));
    for (Index k = 0; k <= n; ++k) {
      Rat acc(0);
      for (Index j = k; j <= n; ++j) acc += a(n, j) * b(j, k);
      row[static_cast<std::size_t>(k)] = std::move(acc);
    }
  }
  return Window(std::move(rows), a.label() + "*" + b.label());
}

Window tri_inverse(const Window& w) {
  const Index N = w.rows();
  for (Index n = 0; n < N; ++n)
    if (w(n, n).is_zero())
      throw Error("inverse of \"" + w.label() + "\": diagonal entry at row " + std::to_string(n) +
                  " is zero");
  std::vector<std::vector<Rat>> inv(static_cast<std::size_t>(N));
  for (Index n = 0; n < N; ++n) {
    auto& row = inv[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n + 1), Rat(0));
    const Rat diag_inv = w(n, n).reciprocal();
    row[static_cast<std::size_t>(n)] = diag_inv;
    for (Index k = n - 1; k >= 0; --k) {
      Rat acc(0);
      for (Index j = k; j < n; ++j) acc += w(n, j) * inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = -acc * diag_inv;
    }
  }
  return Window(std::move(inv), "inverse(" + w.label() + ")");
}

Window matrix_power(const Window& w, Index j) {
  if (j == 0) return Window::identity(w.rows());
  Window base = j > 0 ? w : tri_inverse(w);
  Window acc = base;
  for (Index e = 1; e < (j > 0 ? j : -j); ++e) acc = matmul(acc, base);
  acc.set_label("power" + std::to_string(j) + "(" + w.label() + ")");
  return acc;
}

std::vector<Rat> invert_unit_series(const std::vector<Rat>& b) {
  if (b.empty()) throw Error("series inverse: empty prefix");
  if (b[0] != Rat(1)) throw Error("series inverse: b_0 must be 1, got " + b[0].str());
  std::vector<Rat> B(b.size(), Rat(0));
  B[0] = Rat(1);
  for (std::size_t n = 1; n < b.size(); ++n) {
    Rat acc(0);
    for (std::size_t i = 1; i <= n; ++i) acc += b[i] * B[n - i];
    B[n] = -acc;
  }
  return B;
}

std::vector<Rat> invert_unit_series_by_compositions(const std::vector<Rat>& b) {
  if (b.empty()) throw Error("series inverse: empty prefix");
  if (b[0] != Rat(1)) throw Error("series inverse: b_0 must be 1, got " + b[0].str());
  if (b.size() > 14)
    throw Error("series inverse by compositions: prefix longer than 14 (exponential oracle)");
  std::vector<Rat> B(b.size(), Rat(0));
  B[0] = Rat(1);
  for (std::size_t n = 1; n < b.size(); ++n) {
    Rat acc(0);
    // Walk every ordered composition n = i_1 + ... + i_j with i_t >= 1.
    auto rec = [&](auto&& self, std::size_t rem, std::size_t parts, const Rat& prod) -> void {
      if (rem == 0) {
        if (parts % 2 == 1)
          acc -= prod;
        else
          acc += prod;
        return;
      }
      for (std::size_t i = 1; i <= rem; ++i) self(self, rem - i, parts + 1, prod * b[i]);
    };
    rec(rec, n, 0, Rat(1));
    B[n] = acc;
  }
  return B;
}

std::vector<Rat> unit_series_power(const std::vector<Rat>& b, Index j) {
  if (j < 1) throw Error("series power: exponent must be >= 1");
  if (b.empty()) throw Error("series power: empty prefix");
  if (b[0] != Rat(1)) throw Error("series power: b_0 must be 1, got " + b[0].str());
  std::vector<Rat> acc = b;
  for (Index e = 1; e < j; ++e) acc = convolve(acc, b);
  return acc;
}

Window product_inverse_closed(const SequenceSpec& a, const SequenceSpec& b, const SequenceSpec& c,
                              Index n_rows) {
  if (n_rows < 1) throw Error("closed-form inverse: needs at least one row");
  const std::vector<Rat> av = nonzero_prefix(a, n_rows, "a");
  const std::vector<Rat> cv = nonzero_prefix(c, n_rows, "c");
  const std::vector<Rat> B = invert_unit_series(unit_prefix(b, n_rows));
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n_rows));
  for (Index n = 0; n < n_rows; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n + 1));
    const Rat an_inv = av[static_cast<std::size_t>(n)].reciprocal();
    for (Index k = 0; k <= n; ++k)
      row.push_back(an_inv * B[static_cast<std::size_t>(n - k)] *
                    cv[static_cast<std::size_t>(k)].reciprocal());
  }
  return Window(std::move(rows), "product_inverse_closed");
}

Window product_power_closed(const SequenceSpec& a, const SequenceSpec& b, Index j, Index n_rows) {
  if (n_rows < 1) throw Error("closed-form power: needs at least one row");
  if (j == 0) return Window::identity(n_rows);
  const std::vector<Rat> av = nonzero_prefix(a, n_rows, "a");
  const std::vector<Rat> bv = unit_prefix(b, n_rows);
  // For j < 0 the coefficient series is the |j|-th convolution power of the
  // series inverse of b — exactly how the matrix route factors through the
  // closed-form inverse.
  const std::vector<Rat> C =
      j > 0 ? unit_series_power(bv, j) : unit_series_power(invert_unit_series(bv), -j);
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n_rows));
  for (Index n = 0; n < n_rows; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n + 1));
    for (Index k = 0; k <= n; ++k)
      row.push_back(av[static_cast<std::size_t>(n)] * C[static_cast<std::size_t>(n - k)] *
                    av[static_cast<std::size_t>(k)].reciprocal());
  }
  return Window(std::move(rows), "product_power_closed");
}

}  // namespace sdr
