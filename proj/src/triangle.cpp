#include "sdr/triangle.hpp"

namespace sdr {

mpz_class binomial(Index n, Index k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(Index n) {
  if (n < 0) throw Error("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Triangle::Triangle(std::string name, Rule rule, std::optional<Index> row_limit)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->rule = std::move(rule);
  state_->row_limit = row_limit;
  if (row_limit && *row_limit < 1)
    throw Error("triangle \"" + state_->name + "\": row limit must be >= 1");
}

Rat Triangle::entry(Index n, Index k) const {
  if (n < 0) throw Error("triangle \"" + name() + "\": row index " + std::to_string(n) + " is negative");
  if (k < 0 || k > n) return Rat(0);  // zero-extension above the diagonal
  if (state_->row_limit && n >= *state_->row_limit)
    throw Error("triangle \"" + name() + "\": row " + std::to_string(n) + " is beyond the " +
                std::to_string(*state_->row_limit) + " stored rows");
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find({n, k});
    if (it != state_->memo.end()) return it->second;
  }
  // Compute outside the lock: rules may pull entries of other triangles.
  Rat v = state_->rule(n, k);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->memo.emplace(std::make_pair(n, k), std::move(v)).first->second;
}

Window::Window(std::vector<std::vector<Rat>> rows, std::string label)
    : rows_(std::move(rows)), label_(std::move(label)) {
  if (rows_.empty()) throw Error("window: needs at least one row");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1)
      throw Error("window: row " + std::to_string(n) + " has " + std::to_string(rows_[n].size()) +
                  " entries, expected " + std::to_string(n + 1));
  }
}

Window Window::identity(Index n_rows) {
  if (n_rows < 1) throw Error("identity window: needs at least one row");
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n_rows));
  for (Index n = 0; n < n_rows; ++n) {
    rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), Rat(0));
    rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = Rat(1);
  }
  return Window(std::move(rows), "identity");
}

const Rat& Window::operator()(Index n, Index k) const {
  if (n < 0 || n >= rows() || k < 0 || k > n)
    throw Error("window \"" + label_ + "\": entry (" + std::to_string(n) + "," + std::to_string(k) +
                ") is outside the stored triangle");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rat Window::at(Index n, Index k) const {
  if (n < 0 || n >= rows())
    throw Error("window \"" + label_ + "\": row " + std::to_string(n) + " is outside the window");
  if (k < 0 || k > n) return Rat(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool Window::all_entries_nonzero() const {
  for (const auto& row : rows_)
    for (const auto& v : row)
      if (v.is_zero()) return false;
  return true;
}

Window materialize(const Triangle& t, Index n_rows) {
  if (n_rows < 1) throw Error("materialize: needs at least one row");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<std::size_t>(n_rows));
  for (Index n = 0; n < n_rows; ++n) {
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(n + 1));
    for (Index k = 0; k <= n; ++k) row.push_back(t.entry(n, k));
    rows.push_back(std::move(row));
  }
  return Window(std::move(rows), t.name());
}

}  // namespace sdr
