#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdr/rational.hpp"

namespace sdr {

/// C(n, k) as an exact integer; 0 outside 0 <= k <= n.
mpz_class binomial(Index n, Index k);

/// n! for n >= 0.
mpz_class factorial(Index n);

/// An infinite lower-triangular matrix, represented by a pure entry rule plus
/// a memo table. The rule is consulted only inside the triangle (0 <= k <= n);
/// everything above the diagonal is 0 by convention, and that zero-extension
/// is part of the entry semantics, not an error.
///
/// Copies share state (cheap handle), so memoized entries are computed once
/// per underlying triangle. The memo table is mutex-protected; a concurrent
/// fill of the same cell recomputes the same value, which is harmless because
/// rules are pure.
class Triangle {
 public:
  using Rule = std::function<Rat(Index n, Index k)>;

  Triangle(std::string name, Rule rule, std::optional<Index> row_limit = std::nullopt);

  const std::string& name() const { return state_->name; }

  /// For triangles backed by finitely many stored rows (file input), the
  /// number of rows available; access past it is an error, not a zero.
  std::optional<Index> row_limit() const { return state_->row_limit; }

  /// Entry A_{n,k}. Throws for n < 0 and for rows past row_limit();
  /// returns 0 when k < 0 or k > n.
  Rat entry(Index n, Index k) const;

 private:
  struct State {
    std::string name;
    Rule rule;
    std::optional<Index> row_limit;
    mutable std::mutex mu;
    mutable std::map<std::pair<Index, Index>, Rat> memo;
  };
  std::shared_ptr<State> state_;
};

/// The first N rows of a triangle, materialized. Row n holds n+1 entries.
class Window {
 public:
  explicit Window(std::vector<std::vector<Rat>> rows, std::string label = "window");

  static Window identity(Index n_rows);

  Index rows() const { return static_cast<Index>(rows_.size()); }
  const std::vector<std::vector<Rat>>& data() const { return rows_; }

  /// In-triangle access; requires 0 <= k <= n < rows().
  const Rat& operator()(Index n, Index k) const;

  /// Zero-extended access: 0 when k < 0 or k > n. The row index must still
  /// lie inside the window.
  Rat at(Index n, Index k) const;

  bool all_entries_nonzero() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const Window& a, const Window& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::string label_;
};

/// Evaluates the first n_rows rows of a triangle into a Window (n_rows >= 1).
Window materialize(const Triangle& t, Index n_rows);

}  // namespace sdr
