#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sdr/algebra.hpp"
#include "sdr/checker.hpp"
#include "sdr/series.hpp"

using namespace sdr;
using sdr::testing::rats;
using sdr::testing::rows_equal;

namespace {

Series ser(std::initializer_list<const char*> coeffs) { return Series(rats(coeffs)); }

// Independent route to the compositional inverse for the tests:
// coefficient n of the inverse is [t^(n-1)] (t/h)^n / n.
Series lagrange_comp_inverse(const Series& h) {
  const Index n_coeffs = h.truncation();
  std::vector<Rat> shifted;
  for (Index i = 1; i < n_coeffs; ++i) shifted.push_back(h[i]);
  const Series t_over_h = series_reciprocal(Series(shifted));
  std::vector<Rat> g(static_cast<std::size_t>(n_coeffs), Rat(0));
  Series pw = Series::one(n_coeffs - 1);
  for (Index n = 1; n < n_coeffs; ++n) {
    pw = series_mul(pw, t_over_h);
    g[static_cast<std::size_t>(n)] = pw[n - 1] / Rat(n);
  }
  return Series(g);
}

Rat small_rat(std::mt19937_64& rng) {
  return Rat(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
}

RiordanPair random_pair(std::mt19937_64& rng, Index truncation) {
  std::vector<Rat> d{small_rat(rng)};
  std::vector<Rat> h{Rat(0), small_rat(rng)};
  while (static_cast<Index>(d.size()) < truncation)
    d.push_back(rng() % 3 == 0 ? Rat(0) : small_rat(rng));
  while (static_cast<Index>(h.size()) < truncation)
    h.push_back(rng() % 3 == 0 ? Rat(0) : small_rat(rng));
  return RiordanPair(Series(d), Series(h));
}

}  // namespace

TEST_CASE("series construction and coefficient access") {
  CHECK_THROWS_AS(Series({}), Error);
  CHECK(Series::one(4).coeffs() == rats({"1", "0", "0", "0"}));
  CHECK(Series::t(4).coeffs() == rats({"0", "1", "0", "0"}));
  CHECK_THROWS_AS(Series::t(1), Error);
  const Series s = ser({"1", "2"});
  CHECK(s[1] == Rat(2));
  CHECK_THROWS_AS(s[2], Error);
  CHECK_THROWS_AS(s[-1], Error);
}

TEST_CASE("series multiplication truncates to the shorter input") {
  CHECK(series_mul(ser({"1", "-1", "0", "0", "0"}), ser({"1", "1", "1", "1", "1"})) ==
        Series::one(5));
  const Series one_plus_t = ser({"1", "1", "0", "0"});
  CHECK(series_mul(series_mul(one_plus_t, one_plus_t), one_plus_t) == ser({"1", "3", "3", "1"}));
  CHECK(series_mul(ser({"1", "1", "1"}), Series::one(5)).truncation() == 3);
}

TEST_CASE("series reciprocal") {
  CHECK(series_reciprocal(ser({"1", "-1", "0", "0", "0"})) == ser({"1", "1", "1", "1", "1"}));
  CHECK(series_reciprocal(ser({"1", "1", "1", "1"})) == ser({"1", "-1", "0", "0"}));
  CHECK(series_reciprocal(ser({"2", "0", "0"})) == ser({"1/2", "0", "0"}));
  CHECK(series_reciprocal(ser({"2/3", "1/5"}))[0] == Rat(3, 2));
  CHECK_THROWS_AS(series_reciprocal(ser({"0", "1"})), Error);
}

TEST_CASE("series composition") {
  const Series geo = ser({"1", "1", "1", "1", "1", "1"});
  const Series tgeo = ser({"0", "1", "1", "1", "1", "1"});
  CHECK(series_compose(geo, tgeo) == ser({"1", "1", "2", "4", "8", "16"}));
  CHECK(series_compose(geo, Series::t(6)) == geo);
  CHECK_THROWS_AS(series_compose(geo, geo), Error);
}

TEST_CASE("compositional inverse, with an independent oracle") {
  CHECK(series_comp_inverse(ser({"0", "1", "1", "1", "1", "1"})) ==
        ser({"0", "1", "-1", "1", "-1", "1"}));
  CHECK(series_comp_inverse(Series::t(6)) == Series::t(6));
  CHECK(series_comp_inverse(parse_series("tgeomrec2", 10)) ==
        ser({"0", "1", "0", "-1", "0", "2", "0", "-5", "0", "14"}));

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rat> h{Rat(0), small_rat(rng)};
    while (h.size() < 9) h.push_back(rng() % 3 == 0 ? Rat(0) : small_rat(rng));
    const Series hs{h};
    const Series g = series_comp_inverse(hs);
    CHECK(g == lagrange_comp_inverse(hs));
    CHECK(series_compose(hs, g) == Series::t(9));
    CHECK(series_compose(g, hs) == Series::t(9));
  }

  CHECK_THROWS_AS(series_comp_inverse(ser({"1", "1"})), Error);
  CHECK_THROWS_AS(series_comp_inverse(ser({"0", "0", "1"})), Error);
  CHECK_THROWS_AS(series_comp_inverse(ser({"0"})), Error);
}

TEST_CASE("pair invariants are enforced") {
  CHECK_THROWS_AS(RiordanPair(ser({"0", "1"}), Series::t(2)), Error);
  CHECK_THROWS_AS(RiordanPair(Series::one(3), ser({"1", "1", "0"})), Error);
  CHECK_THROWS_AS(RiordanPair(Series::one(3), ser({"0", "0", "1"})), Error);
}

TEST_CASE("windows of classic pairs") {
  const RiordanPair pascal_pair(parse_series("geomrec:1", 6), parse_series("tgeomrec:1", 6));
  CHECK(riordan_window(pascal_pair, 6) == materialize(build_triangle("builtin:pascal"), 6));

  const RiordanPair aerated_pair(parse_series("geomrec2", 6), parse_series("tgeomrec2", 6));
  CHECK(riordan_window(aerated_pair, 6) == materialize(build_triangle("builtin:aerated"), 6));

  const RiordanPair ones_t(parse_series("geomrec:1", 5), Series::t(5));
  CHECK(riordan_window(ones_t, 5) == materialize(build_triangle("builtin:allones"), 5));

  CHECK_THROWS_AS(riordan_window(ones_t, 6), Error);
}

TEST_CASE("pair multiplication matches window multiplication") {
  const RiordanPair pascal_pair(parse_series("geomrec:1", 6), parse_series("tgeomrec:1", 6));
  const RiordanPair squared = riordan_mul(pascal_pair, pascal_pair);
  CHECK(squared.d.coeffs() == rats({"1", "2", "4", "8", "16", "32"}));
  CHECK(squared.h.coeffs() == rats({"0", "1", "2", "4", "8", "16"}));

  const RiordanPair id(Series::one(8), Series::t(8));
  const RiordanPair left = riordan_mul(id, pascal_pair);
  CHECK(left.d.coeffs() == pascal_pair.d.coeffs());
  CHECK(left.h.coeffs() == pascal_pair.h.coeffs());

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const RiordanPair x = random_pair(rng, 8);
    const RiordanPair y = random_pair(rng, 8);
    CHECK(riordan_window(riordan_mul(x, y), 8) ==
          matmul(riordan_window(x, 8), riordan_window(y, 8)));
  }
}

TEST_CASE("pair inverse") {
  const RiordanPair pascal_pair(parse_series("geomrec:1", 6), parse_series("tgeomrec:1", 6));
  const RiordanPair pinv = riordan_inverse(pascal_pair);
  CHECK(pinv.d.coeffs() == rats({"1", "-1", "1", "-1", "1", "-1"}));
  CHECK(pinv.h.coeffs() == rats({"0", "1", "-1", "1", "-1", "1"}));

  const RiordanPair aerated_pair(parse_series("geomrec2", 10), parse_series("tgeomrec2", 10));
  const RiordanPair ainv = riordan_inverse(aerated_pair);
  CHECK(ainv.d.coeffs() == rats({"1", "0", "-1", "0", "2", "0", "-5", "0", "14", "0"}));
  CHECK(ainv.h.coeffs() == rats({"0", "1", "0", "-1", "0", "2", "0", "-5", "0", "14"}));
  const Window ainv_window = riordan_window(ainv, 6);
  CHECK(ainv_window == tri_inverse(materialize(build_triangle("builtin:aerated"), 6)));
  CHECK(check_order(ainv_window, 3).pass);

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const RiordanPair r = random_pair(rng, 12);
    const RiordanPair prod = riordan_mul(r, riordan_inverse(r));
    CHECK(prod.d == Series::one(12));
    CHECK(prod.h == Series::t(12));
  }
}

TEST_CASE("series literals") {
  CHECK(parse_series("geomrec:2", 5) == ser({"1", "2", "4", "8", "16"}));
  CHECK(parse_series("tgeomrec:3", 5) == ser({"0", "1", "3", "9", "27"}));
  CHECK(parse_series("geomrec2", 6) == ser({"1", "0", "1", "0", "1", "0"}));
  CHECK(parse_series("tgeomrec2", 6) == ser({"0", "1", "0", "1", "0", "1"}));
  CHECK(parse_series("geomrec:1/2", 4) == ser({"1", "1/2", "1/4", "1/8"}));
  CHECK(parse_series("1,1/2,3", 99) == ser({"1", "1/2", "3"}));
  CHECK_THROWS_AS(parse_series("1,oops", 4), Error);
  CHECK_THROWS_AS(parse_series("geomrec:", 4), Error);
}
