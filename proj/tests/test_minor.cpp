#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sdr/checker.hpp"
#include "sdr/minor.hpp"

using namespace sdr;
using sdr::testing::rows_equal;
using sdr::testing::wnd;

namespace {

SquareMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  SquareMatrix m(static_cast<Index>(rows.size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (const char* cell : row) m.at(r, c++) = Rat::parse(cell);
    ++r;
  }
  return m;
}

std::string random_list_text(std::mt19937_64& rng, Index count, bool leading_one) {
  std::string text = "list:";
  for (Index i = 0; i < count; ++i) {
    if (i) text += ',';
    if (i == 0 && leading_one)
      text += '1';
    else
      text += std::to_string(1 + rng() % 9) + "/" + std::to_string(1 + rng() % 9);
  }
  return text;
}

}  // namespace

TEST_CASE("exact determinants") {
  CHECK(det(SquareMatrix::identity(3)) == Rat(1));
  CHECK(det(mat({{"1", "2"}, {"2", "4"}})) == Rat(0));
  CHECK(det(mat({{"0", "1"}, {"1", "0"}})) == Rat(-1));  // needs a row swap
  CHECK(det(mat({{"1", "0", "1"}, {"0", "2", "0"}, {"1", "0", "3"}})) == Rat(4));
  CHECK(det(mat({{"1/2", "1/3"}, {"1/4", "1/5"}})) == Rat(1, 10) - Rat(1, 12));
  CHECK_THROWS_AS(SquareMatrix(0), Error);
}

TEST_CASE("minor transform basics") {
  const Window pas = materialize(build_triangle("builtin:pascal"), 7);
  CHECK(minor_triangle(pas, 1) == pas);

  // 2x2 contiguous minors of Pascal give the Narayana numbers.
  const Window nara = minor_triangle(pas, 2);
  CHECK(nara == materialize(build_triangle("builtin:narayana"), 6));
  CHECK(nara(4, 1) == Rat(10));
  CHECK(nara(4, 2) == Rat(20));

  CHECK_THROWS_AS(minor_triangle(pas, 0), Error);
  CHECK_THROWS_AS(minor_triangle(pas, 8), Error);
  CHECK(minor_triangle(pas, 3).rows() == 5);
}

TEST_CASE("2x2 minors of the aerated triangle break the order-3 identities") {
  const Window m2 = minor_triangle(materialize(build_triangle("builtin:aerated"), 7), 2);
  CHECK(rows_equal(m2, {{"1"},
                        {"-1", "1"},
                        {"2", "-2", "1"},
                        {"-2", "6", "-3", "1"},
                        {"3", "-9", "12", "-4", "1"},
                        {"-3", "18", "-24", "20", "-5", "1"}}));
  const SdrReport rep = check_order(m2, 3);
  CHECK_FALSE(rep.pass);
  REQUIRE(!rep.violations.empty());
  const IdentityInstance& v = rep.violations.front();
  CHECK(v.p == 2);
  CHECK(v.r == 0);
  CHECK(v.n == 2);
  CHECK(v.k == 0);
  CHECK(v.lhs == Rat(54));
  CHECK(v.rhs == Rat(48));
}

TEST_CASE("3x3 minors of the aerated triangle satisfy order 3") {
  const Window m3 = minor_triangle(materialize(build_triangle("builtin:aerated"), 8), 3);
  CHECK(rows_equal(m3, {{"1"},
                        {"0", "1"},
                        {"4", "0", "1"},
                        {"0", "15", "0", "1"},
                        {"9", "0", "36", "0", "1"},
                        {"0", "84", "0", "70", "0", "1"}}));
  CHECK(check_order(m3, 3).pass);
}

TEST_CASE("Toeplitz closed form matches the determinant route") {
  // Pascal as a product triangle; its 2x2 minor triangle is Narayana.
  const auto ifac = parse_sequence_spec("inv(fact)");
  const auto fac = parse_sequence_spec("fact");
  CHECK(toeplitz_minor_closed(ifac, ifac, fac, 2, 7) ==
        materialize(build_triangle("builtin:narayana"), 6));

  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 8; ++trial) {
    const std::string at = random_list_text(rng, 10, false);
    const std::string bt = random_list_text(rng, 10, true);
    const std::string ct = random_list_text(rng, 10, false);
    const Window base =
        materialize(build_triangle("product:a=" + at + ",b=" + bt + ",c=" + ct), 10);
    for (Index j : {1, 2, 3, 4}) {
      CHECK(toeplitz_minor_closed(parse_sequence_spec(at), parse_sequence_spec(bt),
                                  parse_sequence_spec(ct), j, 10) == minor_triangle(base, j));
    }
  }

  CHECK_THROWS_AS(toeplitz_minor_closed(ifac, ifac, fac, 0, 5), Error);
  CHECK_THROWS_AS(toeplitz_minor_closed(ifac, ifac, fac, 6, 5), Error);
  CHECK_THROWS_AS(toeplitz_minor_closed(ifac, parse_sequence_spec("list:2,1,1"), fac, 2, 3), Error);
}
