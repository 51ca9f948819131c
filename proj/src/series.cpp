#include "sdr/series.hpp"

#include <algorithm>

namespace sdr {

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("series: needs at least the constant coefficient");
}

Series Series::one(Index truncation) {
  if (truncation < 1) throw Error("series: truncation must be >= 1");
  std::vector<Rat> c(static_cast<std::size_t>(truncation), Rat(0));
  c[0] = Rat(1);
  return Series(std::move(c));
}

Series Series::t(Index truncation) {
  if (truncation < 2) throw Error("series: the series t needs truncation >= 2");
  std::vector<Rat> c(static_cast<std::size_t>(truncation), Rat(0));
  c[1] = Rat(1);
  return Series(std::move(c));
}

const Rat& Series::operator[](Index i) const {
  if (i < 0 || i >= truncation())
    throw Error("series: coefficient " + std::to_string(i) + " is beyond truncation " +
                std::to_string(truncation()));
  return coeffs_[static_cast<std::size_t>(i)];
}

Series series_mul(const Series& a, const Series& b) {
  const Index n = std::min(a.truncation(), b.truncation());
  std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; i + j < n; ++j)
      out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return Series(std::move(out));
}

Series series_reciprocal(const Series& a) {
  if (a[0].is_zero()) throw Error("series reciprocal: constant coefficient is zero");
  const Index n = a.truncation();
  std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
  const Rat a0_inv = a[0].reciprocal();
  out[0] = a0_inv;
  for (Index m = 1; m < n; ++m) {
    Rat acc(0);
    for (Index i = 1; i <= m; ++i) acc += a[i] * out[static_cast<std::size_t>(m - i)];
    out[static_cast<std::size_t>(m)] = -acc * a0_inv;
  }
  return Series(std::move(out));
}

Series series_compose(const Series& a, const Series& h) {
  if (h[0] != Rat(0)) throw Error("series composition: inner series must have zero constant term");
  const Index n = std::min(a.truncation(), h.truncation());
  // Horner: result = a_0 + h*(a_1 + h*(a_2 + ...)). Since h has valuation
  // >= 1, truncating every intermediate product at n keeps all coefficients
  // below n exact.
  std::vector<Rat> res(static_cast<std::size_t>(n), Rat(0));
  for (Index i = n - 1; i >= 0; --i) {
    std::vector<Rat> next(static_cast<std::size_t>(n), Rat(0));
    for (Index x = 0; x < n; ++x) {
      if (res[static_cast<std::size_t>(x)].is_zero()) continue;
      for (Index y = 0; x + y < n && y < h.truncation(); ++y)
        next[static_cast<std::size_t>(x + y)] += res[static_cast<std::size_t>(x)] * h[y];
    }
    next[0] += a[i];
    res = std::move(next);
  }
  return Series(std::move(res));
}

Series series_comp_inverse(const Series& h) {
  if (h[0] != Rat(0))
    throw Error("compositional inverse: series must have zero constant term");
  if (h.truncation() < 2 || h[1].is_zero())
    throw Error("compositional inverse: series needs a nonzero linear coefficient");
  const Index n = h.truncation();
  const Rat h1_inv = h[1].reciprocal();
  std::vector<Rat> g(static_cast<std::size_t>(n), Rat(0));
  g[1] = h1_inv;
  // Coefficient m of h(g) is linear in g_m (through the h_1*g term, with
  // everything else depending on g_1..g_{m-1}), so solve one coefficient at
  // a time: with g_m = 0 the residue is what h_1*g_m must cancel.
  for (Index m = 2; m < n; ++m) {
    const Series partial(std::vector<Rat>(g.begin(), g.end()));
    const Rat residue = series_compose(h, partial)[m];
    g[static_cast<std::size_t>(m)] = -residue * h1_inv;
  }
  return Series(std::move(g));
}

RiordanPair::RiordanPair(Series d_series, Series h_series)
    : d(std::move(d_series)), h(std::move(h_series)) {
  if (d[0].is_zero()) throw Error("riordan pair: d must have a nonzero constant term");
  if (h[0] != Rat(0)) throw Error("riordan pair: h must have a zero constant term");
  if (h.truncation() < 2 || h[1].is_zero())
    throw Error("riordan pair: h must have a nonzero linear coefficient");
}

Window riordan_window(const RiordanPair& r, Index n_rows) {
  if (n_rows < 1) throw Error("riordan window: needs at least one row");
  if (r.d.truncation() < n_rows || r.h.truncation() < n_rows)
    throw Error("riordan window: truncation " +
                std::to_string(std::min(r.d.truncation(), r.h.truncation())) +
                " is insufficient for " + std::to_string(n_rows) + " rows");
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n_rows));
  for (Index n = 0; n < n_rows; ++n)
    rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), Rat(0));
  // Column k holds the coefficients of d * h^k.
  std::vector<Rat> col(r.d.coeffs().begin(), r.d.coeffs().begin() + n_rows);
  for (Index k = 0; k < n_rows; ++k) {
    for (Index n = k; n < n_rows; ++n)
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          col[static_cast<std::size_t>(n)];
    if (k + 1 < n_rows) {
      std::vector<Rat> next(static_cast<std::size_t>(n_rows), Rat(0));
      for (Index x = 0; x < n_rows; ++x) {
        if (col[static_cast<std::size_t>(x)].is_zero()) continue;
        for (Index y = 0; x + y < n_rows && y < r.h.truncation(); ++y)
          next[static_cast<std::size_t>(x + y)] += col[static_cast<std::size_t>(x)] * r.h[y];
      }
      col = std::move(next);
    }
  }
  return Window(std::move(rows), "riordan");
}

RiordanPair riordan_mul(const RiordanPair& x, const RiordanPair& y) {
  return RiordanPair(series_mul(x.d, series_compose(y.d, x.h)), series_compose(y.h, x.h));
}

RiordanPair riordan_inverse(const RiordanPair& r) {
  const Series hbar = series_comp_inverse(r.h);
  return RiordanPair(series_reciprocal(series_compose(r.d, hbar)), hbar);
}

Series parse_series(std::string_view text, Index truncation) {
  auto geometric = [&](const Rat& c, bool shifted) {
    if (truncation < 1) throw Error("series literal: truncation must be >= 1");
    std::vector<Rat> v(static_cast<std::size_t>(truncation), Rat(0));
    for (Index i = shifted ? 1 : 0; i < truncation; ++i)
      v[static_cast<std::size_t>(i)] = c.pow(shifted ? i - 1 : i);
    return Series(std::move(v));
  };
  auto even_geometric = [&](bool shifted) {
    if (truncation < 1) throw Error("series literal: truncation must be >= 1");
    std::vector<Rat> v(static_cast<std::size_t>(truncation), Rat(0));
    for (Index i = shifted ? 1 : 0; i < truncation; i += 2) v[static_cast<std::size_t>(i)] = Rat(1);
    return Series(std::move(v));
  };

  if (text == "geomrec2") return even_geometric(false);
  if (text == "tgeomrec2") return even_geometric(true);
  if (text.substr(0, 8) == "geomrec:") return geometric(Rat::parse(text.substr(8)), false);
  if (text.substr(0, 9) == "tgeomrec:") return geometric(Rat::parse(text.substr(9)), true);

  // Plain coefficient list; its length is its truncation.
  std::vector<Rat> v;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      v.push_back(Rat::parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return Series(std::move(v));
}

}  // namespace sdr
