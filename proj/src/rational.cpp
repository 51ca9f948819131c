#include "sdr/rational.hpp"

#include <cctype>

namespace sdr {

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw Error("rational: zero denominator");
  v_.canonicalize();  // mpq_class(num, den) does not reduce on its own
}

Rat Rat::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&](const char* why) -> Rat {
    throw Error("bad rational literal \"" + std::string(original) + "\": " + why);
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) fail("missing digits");

  auto take_digits = [&](std::string_view s) -> std::size_t {
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i;
  };

  const std::size_t np = take_digits(text);
  if (np == 0) fail("expected a digit");
  mpz_class num(std::string(text.substr(0, np)), 10);
  text.remove_prefix(np);

  mpz_class den(1);
  if (!text.empty()) {
    if (text.front() != '/') fail("unexpected character after numerator");
    text.remove_prefix(1);
    const std::size_t dp = take_digits(text);
    if (dp == 0 || dp != text.size()) fail("denominator must be plain digits");
    den = mpz_class(std::string(text.substr(0, dp)), 10);
    if (sgn(den) == 0) fail("zero denominator");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw Error("rational: reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rat(std::move(r));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error("rational: division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::pow(Index e) const {
  if (e < 0) throw Error("rational: pow wants a non-negative exponent");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r;
  r.v_ = mpq_class(n, d);  // coprime bases stay coprime under powering
  return r;
}

}  // namespace sdr
