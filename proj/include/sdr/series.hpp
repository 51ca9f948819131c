#pragma once

#include <string_view>
#include <vector>

#include "sdr/triangle.hpp"

namespace sdr {

/// Truncated formal power series over exact rationals. A series of
/// truncation N carries coefficients 0..N-1; reading past that is an error,
/// never silent garbage, and operations propagate the minimum truncation of
/// their inputs.
class Series {
 public:
  explicit Series(std::vector<Rat> coeffs);

  /// The constant series 1, to the given truncation.
  static Series one(Index truncation);
  /// The series t.
  static Series t(Index truncation);

  Index truncation() const { return static_cast<Index>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](Index i) const;

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
};

/// Cauchy product, truncated to the shorter input.
Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse: series_mul(a, result) = 1 up to truncation.
/// Requires a[0] != 0.
Series series_reciprocal(const Series& a);

/// a(h(t)) by Horner accumulation. Requires h[0] = 0.
Series series_compose(const Series& a, const Series& h);

/// Compositional inverse: the g with h(g(t)) = g(h(t)) = t up to truncation,
/// solved coefficient by coefficient. Requires h[0] = 0 and h[1] != 0.
Series series_comp_inverse(const Series& h);

/// A lower-triangular array presented by two series: entry (n,k) is
/// coefficient n of d(t) * h(t)^k. Valid pairs have d[0] != 0, h[0] = 0,
/// h[1] != 0, which is exactly what makes the array invertible with the
/// same shape.
struct RiordanPair {
  Series d, h;
  RiordanPair(Series d_series, Series h_series);
};

Window riordan_window(const RiordanPair& r, Index n_rows);

/// Group product: (x.d * y.d(x.h), y.h(x.h)). The window of the product is
/// the matrix product of the windows.
RiordanPair riordan_mul(const RiordanPair& x, const RiordanPair& y);

/// Group inverse: (1 / d(hbar), hbar) with hbar the compositional inverse.
RiordanPair riordan_inverse(const RiordanPair& r);

/// Series literal: comma-separated rational coefficients (truncation = the
/// count given), or one of the named forms, spelled out to `truncation`
/// coefficients: geomrec:c = 1/(1-ct), tgeomrec:c = t/(1-ct),
/// geomrec2 = 1/(1-t^2), tgeomrec2 = t/(1-t^2).
Series parse_series(std::string_view text, Index truncation);

}  // namespace sdr
