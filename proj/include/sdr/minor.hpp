#pragma once

#include <vector>

#include "sdr/specs.hpp"
#include "sdr/triangle.hpp"

namespace sdr {

/// Dense square matrix of exact rationals, row-major.
struct SquareMatrix {
  Index size = 0;
  std::vector<Rat> cells;

  explicit SquareMatrix(Index n) : size(n), cells(static_cast<std::size_t>(n * n), Rat(0)) {
    if (n < 1) throw Error("square matrix: size must be >= 1");
  }

  Rat& at(Index r, Index c) { return cells[static_cast<std::size_t>(r * size + c)]; }
  const Rat& at(Index r, Index c) const { return cells[static_cast<std::size_t>(r * size + c)]; }

  static SquareMatrix identity(Index n);
};

/// Exact determinant by Gaussian elimination with pivoting on nonzero rows.
/// Singular matrices return 0.
Rat det(SquareMatrix m);

/// The contiguous-minor transform: entry (n,k) of the result is the
/// determinant of the j x j block of w whose top-left corner sits at (n,k),
/// with columns past the diagonal zero-extended. Rows past the window are an
/// error (row truncation is a windowing artifact, not a property of the
/// matrix), so the result has rows() - j + 1 rows. Requires 1 <= j <= rows().
Window minor_triangle(const Window& w, Index j);

/// Closed form of the same transform for the product triangle
/// a_k * b_{n-k} * c_n: entry (n,k) = B_{n-k} * prod_{i=0..j-1} a_{k+i} c_{n+i},
/// where B_m is the j x j Toeplitz determinant with (r,c) entry b_{m-c+r}
/// (negative indices read 0). Requires b_0 = 1 and 1 <= j <= n_rows; n_rows
/// counts the rows of the window being transformed, so the result has
/// n_rows - j + 1 rows.
Window toeplitz_minor_closed(const SequenceSpec& a, const SequenceSpec& b, const SequenceSpec& c,
                             Index j, Index n_rows);

}  // namespace sdr
