#include "sdr/specs.hpp"

#include <array>
#include <cctype>

#include "sdr/json_io.hpp"

namespace sdr {

namespace {

bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::vector<Rat> parse_rat_list(std::string_view s, std::string_view what) {
  if (s.empty()) throw Error(std::string(what) + ": empty value list");
  std::vector<Rat> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(Rat::parse(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// "inv(" has been consumed; `s` must be "<inner>)" with balanced parens.
std::string_view strip_closing_paren(std::string_view s, std::string_view whole) {
  if (s.empty() || s.back() != ')')
    throw Error("bad sequence spec \"" + std::string(whole) + "\": missing closing ')'");
  return s.substr(0, s.size() - 1);
}

Index parse_small_nonneg(std::string_view s, std::string_view what) {
  if (s.empty()) throw Error(std::string(what) + ": missing number");
  Index v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(std::string(what) + ": \"" + std::string(s) + "\" is not a non-negative integer");
    v = v * 10 + (ch - '0');
    if (v > 1'000'000) throw Error(std::string(what) + ": value out of range");
  }
  return v;
}

constexpr std::array<std::string_view, 5> kBuiltins = {"pascal", "narayana", "lah", "aerated",
                                                       "allones"};

bool is_builtin_name(std::string_view s) {
  for (auto b : kBuiltins)
    if (s == b) return true;
  return false;
}

}  // namespace

SequenceSpec SequenceSpec::ones() { return {Kind::Ones, {}, {}, nullptr, "ones"}; }
SequenceSpec SequenceSpec::fact() { return {Kind::Fact, {}, {}, nullptr, "fact"}; }
SequenceSpec SequenceSpec::sfact() { return {Kind::SFact, {}, {}, nullptr, "sfact"}; }

SequenceSpec SequenceSpec::geo(const Rat& c) {
  return {Kind::Geo, c, {}, nullptr, "geo:" + c.str()};
}

SequenceSpec SequenceSpec::list(std::vector<Rat> items) {
  if (items.empty()) throw Error("list sequence: needs at least one term");
  std::string text = "list:";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) text += ',';
    text += items[i].str();
  }
  return {Kind::List, {}, std::move(items), nullptr, std::move(text)};
}

SequenceSpec SequenceSpec::inv(SequenceSpec inner) {
  std::string text = "inv(" + inner.text + ")";
  return {Kind::Inv, {}, {}, std::make_shared<SequenceSpec>(std::move(inner)), std::move(text)};
}

SequenceSpec parse_sequence_spec(std::string_view text) {
  std::string_view s = text;
  if (s == "ones") return SequenceSpec::ones();
  if (s == "fact") return SequenceSpec::fact();
  if (s == "sfact") return SequenceSpec::sfact();
  if (consume_prefix(s, "geo:")) return SequenceSpec::geo(Rat::parse(s));
  if (consume_prefix(s, "list:")) return SequenceSpec::list(parse_rat_list(s, "list sequence"));
  if (consume_prefix(s, "inv(")) {
    return SequenceSpec::inv(parse_sequence_spec(strip_closing_paren(s, text)));
  }
  throw Error("unrecognized sequence spec \"" + std::string(text) + "\"");
}

Rat sequence_eval(const SequenceSpec& s, Index n) {
  if (n < 0) throw Error("sequence \"" + s.text + "\": negative index");
  switch (s.kind) {
    case SequenceSpec::Kind::Ones:
      return Rat(1);
    case SequenceSpec::Kind::Fact:
      return Rat(factorial(n));
    case SequenceSpec::Kind::SFact:
      return Rat(mpz_class(factorial(n) * factorial(n + 1)));
    case SequenceSpec::Kind::Geo:
      return s.ratio.pow(n);
    case SequenceSpec::Kind::List:
      if (n >= static_cast<Index>(s.items.size()))
        throw Error("sequence \"" + s.text + "\": term " + std::to_string(n) +
                    " requested but only " + std::to_string(s.items.size()) + " terms are listed");
      return s.items[static_cast<std::size_t>(n)];
    case SequenceSpec::Kind::Inv: {
      Rat v = sequence_eval(*s.inner, n);
      if (v.is_zero())
        throw Error("sequence \"" + s.text + "\": term " + std::to_string(n) +
                    " of the inner sequence is zero");
      return v.reciprocal();
    }
  }
  throw Error("sequence \"" + s.text + "\": corrupt spec");
}

std::vector<Rat> sequence_prefix(const SequenceSpec& s, Index count) {
  if (count < 0) throw Error("sequence prefix: negative length");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index n = 0; n < count; ++n) out.push_back(sequence_eval(s, n));
  return out;
}

TriangleSpec parse_triangle_spec(std::string_view text) {
  std::string_view s = text;
  TriangleSpec spec;
  spec.text = std::string(text);

  if (consume_prefix(s, "builtin:") || is_builtin_name(s)) {
    if (!is_builtin_name(s))
      throw Error("unknown builtin triangle \"" + std::string(s) + "\"");
    spec.kind = TriangleSpec::Kind::Builtin;
    spec.builtin = std::string(s);
    return spec;
  }
  if (consume_prefix(s, "product:")) {
    if (!consume_prefix(s, "a="))
      throw Error("bad product spec \"" + std::string(text) + "\": expected a=");
    const std::size_t bpos = s.find(",b=");
    if (bpos == std::string_view::npos)
      throw Error("bad product spec \"" + std::string(text) + "\": expected ,b=");
    const std::size_t cpos = s.find(",c=", bpos + 3);
    if (cpos == std::string_view::npos)
      throw Error("bad product spec \"" + std::string(text) + "\": expected ,c=");
    spec.kind = TriangleSpec::Kind::Product;
    spec.a = parse_sequence_spec(s.substr(0, bpos));
    spec.b = parse_sequence_spec(s.substr(bpos + 3, cpos - bpos - 3));
    spec.c = parse_sequence_spec(s.substr(cpos + 3));
    return spec;
  }
  if (consume_prefix(s, "rowseq:")) {
    spec.kind = TriangleSpec::Kind::RowSeq;
    spec.a = parse_sequence_spec(s);
    return spec;
  }
  if (consume_prefix(s, "colseq:")) {
    spec.kind = TriangleSpec::Kind::ColSeq;
    spec.a = parse_sequence_spec(s);
    return spec;
  }
  if (consume_prefix(s, "diagseq:")) {
    spec.kind = TriangleSpec::Kind::DiagSeq;
    spec.a = parse_sequence_spec(s);
    return spec;
  }
  if (consume_prefix(s, "shift:")) {
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos)
      throw Error("bad shift spec \"" + std::string(text) + "\": expected shift:i,j(...)");
    const std::size_t paren = s.find('(', comma + 1);
    if (paren == std::string_view::npos || s.empty() || s.back() != ')')
      throw Error("bad shift spec \"" + std::string(text) + "\": expected shift:i,j(...)");
    spec.kind = TriangleSpec::Kind::Shift;
    spec.shift_i = parse_small_nonneg(s.substr(0, comma), "shift row offset");
    spec.shift_j = parse_small_nonneg(s.substr(comma + 1, paren - comma - 1), "shift column offset");
    spec.inner = std::make_shared<TriangleSpec>(
        parse_triangle_spec(s.substr(paren + 1, s.size() - paren - 2)));
    return spec;
  }
  if (consume_prefix(s, "file:")) {
    if (s.empty()) throw Error("bad file spec: empty path");
    spec.kind = TriangleSpec::Kind::File;
    spec.path = std::string(s);
    return spec;
  }
  throw Error("unrecognized triangle spec \"" + std::string(text) + "\"");
}

namespace {

Triangle build_builtin(const std::string& which) {
  if (which == "pascal")
    return Triangle("pascal", [](Index n, Index k) { return Rat(binomial(n, k)); });
  if (which == "narayana")
    // Shifted so row 0 exists: entry (n,k) = C(n+1,k+1)*C(n+1,k)/(n+1).
    return Triangle("narayana", [](Index n, Index k) {
      return Rat(binomial(n + 1, k + 1) * binomial(n + 1, k), mpz_class(n + 1));
    });
  if (which == "lah")
    return Triangle("lah", [](Index n, Index k) {
      return Rat(binomial(n, k) * factorial(n + 1), factorial(k + 1));
    });
  if (which == "aerated")
    // Pascal with every second diagonal zeroed: nonzero only for n == k (mod 2).
    return Triangle("aerated", [](Index n, Index k) {
      if ((n - k) % 2 != 0) return Rat(0);
      return Rat(binomial((n + k) / 2, (n - k) / 2));
    });
  if (which == "allones")
    return Triangle("allones", [](Index, Index) { return Rat(1); });
  throw Error("unknown builtin triangle \"" + which + "\"");
}

}  // namespace

Triangle build_triangle(const TriangleSpec& spec) {
  switch (spec.kind) {
    case TriangleSpec::Kind::Builtin:
      return build_builtin(spec.builtin);
    case TriangleSpec::Kind::Product: {
      // b_0 multiplies every diagonal entry; require it nonzero up front.
      if (sequence_eval(spec.b, 0).is_zero())
        throw Error("product triangle \"" + spec.text + "\": b_0 must be nonzero");
      SequenceSpec a = spec.a, b = spec.b, c = spec.c;
      return Triangle(spec.text, [a, b, c](Index n, Index k) {
        return sequence_eval(a, k) * sequence_eval(b, n - k) * sequence_eval(c, n);
      });
    }
    case TriangleSpec::Kind::RowSeq: {
      SequenceSpec a = spec.a;
      return Triangle(spec.text, [a](Index n, Index) { return sequence_eval(a, n); });
    }
    case TriangleSpec::Kind::ColSeq: {
      SequenceSpec a = spec.a;
      return Triangle(spec.text, [a](Index, Index k) { return sequence_eval(a, k); });
    }
    case TriangleSpec::Kind::DiagSeq: {
      SequenceSpec a = spec.a;
      return Triangle(spec.text, [a](Index n, Index k) { return sequence_eval(a, n - k); });
    }
    case TriangleSpec::Kind::Shift: {
      Triangle inner = build_triangle(*spec.inner);
      const Index i = spec.shift_i, j = spec.shift_j;
      std::optional<Index> limit;
      if (inner.row_limit()) {
        limit = *inner.row_limit() - i;
        if (*limit < 1)
          throw Error("shift \"" + spec.text + "\": offset exceeds the stored rows");
      }
      return Triangle(spec.text,
                      [inner, i, j](Index n, Index k) { return inner.entry(n + i, k + j); }, limit);
    }
    case TriangleSpec::Kind::File: {
      auto window = std::make_shared<Window>(load_window_file(spec.path));
      return Triangle(window->label(),
                      [window](Index n, Index k) { return window->at(n, k); }, window->rows());
    }
  }
  throw Error("triangle spec \"" + spec.text + "\": corrupt spec");
}

Triangle build_triangle(std::string_view spec_text) {
  return build_triangle(parse_triangle_spec(spec_text));
}

}  // namespace sdr
