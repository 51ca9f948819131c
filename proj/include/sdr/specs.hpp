#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sdr/triangle.hpp"

namespace sdr {

/// A sequence recipe, from the textual grammar:
///   ones | fact | sfact | geo:<c> | list:<v0>,<v1>,... | inv(<spec>)
/// `fact` is n!, `sfact` the super-step n!*(n+1)!, `geo:c` is c^n, `list`
/// enumerates explicit terms (finite: reading past the end is an error),
/// and `inv` takes termwise reciprocals.
struct SequenceSpec {
  enum class Kind { Ones, Fact, SFact, Geo, List, Inv };

  Kind kind = Kind::Ones;
  Rat ratio;                              // Geo
  std::vector<Rat> items;                 // List
  std::shared_ptr<SequenceSpec> inner;    // Inv
  std::string text;                       // the spelling this spec was built from

  static SequenceSpec ones();
  static SequenceSpec fact();
  static SequenceSpec sfact();
  static SequenceSpec geo(const Rat& c);
  static SequenceSpec list(std::vector<Rat> items);
  static SequenceSpec inv(SequenceSpec inner);
};

SequenceSpec parse_sequence_spec(std::string_view text);

/// Term n of the sequence; n >= 0.
Rat sequence_eval(const SequenceSpec& s, Index n);

/// First `count` terms as a vector.
std::vector<Rat> sequence_prefix(const SequenceSpec& s, Index count);

/// A triangle recipe, from the textual grammar:
///   builtin:pascal|narayana|lah|aerated|allones
///   product:a=<seq>,b=<seq>,c=<seq>      entries a_k * b_{n-k} * c_n
///   rowseq:<seq> | colseq:<seq> | diagseq:<seq>
///   shift:i,j(<tri>)                     entries A_{n+i,k+j}
///   file:<path>                          finitely many stored rows, JSON
/// Bare builtin names (e.g. "pascal") are accepted as shorthand.
struct TriangleSpec {
  enum class Kind { Builtin, Product, RowSeq, ColSeq, DiagSeq, Shift, File };

  Kind kind = Kind::Builtin;
  std::string builtin;                    // Builtin
  SequenceSpec a, b, c;                   // Product; Row/Col/DiagSeq use `a`
  Index shift_i = 0, shift_j = 0;         // Shift
  std::shared_ptr<TriangleSpec> inner;    // Shift
  std::string path;                       // File
  std::string text;
};

TriangleSpec parse_triangle_spec(std::string_view text);

Triangle build_triangle(const TriangleSpec& spec);
Triangle build_triangle(std::string_view spec_text);

}  // namespace sdr
