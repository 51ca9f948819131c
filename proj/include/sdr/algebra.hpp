#pragma once

#include <vector>

#include "sdr/specs.hpp"
#include "sdr/triangle.hpp"

namespace sdr {

/// Entrywise product, as a lazy triangle. Stored-row limits intersect.
Triangle hadamard_product(const Triangle& a, const Triangle& b);

/// Entrywise reciprocal; evaluating a zero entry is an error.
Triangle hadamard_inverse(const Triangle& a);

/// Lower-triangular matrix product of two windows of equal size.
Window matmul(const Window& a, const Window& b);

/// Matrix inverse of a window by forward substitution. Every diagonal entry
/// must be nonzero.
Window tri_inverse(const Window& w);

/// w^j for any integer j: j = 0 gives the identity, negative j inverts once
/// and multiplies |j| times.
Window matrix_power(const Window& w, Index j);

/// Coefficients of 1/b(t) given a prefix of b with b[0] = 1, via the
/// convolution recurrence B[n] = -sum_{i=1..n} b[i] * B[n-i].
std::vector<Rat> invert_unit_series(const std::vector<Rat>& b);

/// Same value, computed independently as the inclusion-exclusion sum over
/// ordered compositions of n:
///   B[n] = sum_{j>=1} (-1)^j sum_{i_1+...+i_j = n, i_t >= 1} b[i_1]...b[i_j].
/// Exponential in n — the reference implementation for cross-checks, capped
/// at prefixes of length 14.
std::vector<Rat> invert_unit_series_by_compositions(const std::vector<Rat>& b);

/// Coefficients of b(t)^j for j >= 1, prefix length preserved.
std::vector<Rat> unit_series_power(const std::vector<Rat>& b, Index j);

/// Inverse of the product-form triangle a_k * b_{n-k} * c_n in closed form:
/// entry (n,k) = (1/a_n) * B[n-k] * (1/c_k) with B the series inverse of b.
/// Requires b_0 = 1 and a_n, c_n nonzero on the window.
Window product_inverse_closed(const SequenceSpec& a, const SequenceSpec& b, const SequenceSpec& c,
                              Index n_rows);

/// j-th power of the conjugated Toeplitz triangle a_n * b_{n-k} / a_k in
/// closed form: entry (n,k) = a_n * C[n-k] / a_k with C = b^j (or (1/b)^|j|
/// for negative j). Requires b_0 = 1 and a_n nonzero on the window.
Window product_power_closed(const SequenceSpec& a, const SequenceSpec& b, Index j, Index n_rows);

}  // namespace sdr
