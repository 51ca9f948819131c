#include "sdr/checker.hpp"

namespace sdr {

IdentityInstance check_identity(const Window& w, Index p, Index r, Index n, Index k) {
  if (p < 2) throw Error("identity: level p must be >= 2");
  if (r < 0 || r > p - 1) throw Error("identity: split r must satisfy 0 <= r <= p-1");
  if (n < 0 || k < 0 || k > n) throw Error("identity: anchor must satisfy 0 <= k <= n");
  if (n + p > w.rows() - 1)
    throw Error("identity: rows " + std::to_string(n) + ".." + std::to_string(n + p) +
                " exceed the " + std::to_string(w.rows()) + "-row window");

  IdentityInstance inst{p, r, n, k, Rat(1), Rat(1)};
  for (Index i = 0; i <= r; ++i) inst.lhs *= w.at(n + i, k + r - i);
  for (Index i = 0; i <= p - r - 1; ++i) inst.lhs *= w.at(n + p - i, k + r + i + 1);
  for (Index i = 0; i <= r; ++i) inst.rhs *= w.at(n + p - i, k + p - r + i);
  for (Index i = 0; i <= p - r - 1; ++i) inst.rhs *= w.at(n + i, k + p - r - i - 1);
  return inst;
}

namespace {

std::uint64_t instance_count(Index rows, Index m) {
  // For each p, anchors run over n = 0..rows-1-p with k = 0..n, times p splits.
  std::uint64_t total = 0;
  for (Index p = 2; p <= m - 1; ++p) {
    const Index n_max = rows - 1 - p;
    if (n_max < 0) continue;
    const std::uint64_t anchors =
        static_cast<std::uint64_t>(n_max + 1) * static_cast<std::uint64_t>(n_max + 2) / 2;
    total += static_cast<std::uint64_t>(p) * anchors;
  }
  return total;
}

}  // namespace

SdrReport check_order(const Window& w, Index m, std::size_t max_violations_kept,
                      std::uint64_t max_cells) {
  if (m < 3) throw Error("order check: order must be >= 3");
  if (w.rows() < m)
    throw Error("order check: window has " + std::to_string(w.rows()) +
                " rows, need at least " + std::to_string(m) + " for order " + std::to_string(m));

  const std::uint64_t planned = instance_count(w.rows(), m);
  if (planned > max_cells)
    throw Error("order check: " + std::to_string(planned) +
                " identity instances exceed the cap of " + std::to_string(max_cells) +
                " (raise SDR_MAX_CELLS or shrink the window)");

  SdrReport rep;
  rep.order = m;
  rep.window_rows = w.rows();
  for (Index p = 2; p <= m - 1; ++p) {
    for (Index r = 0; r <= p - 1; ++r) {
      for (Index n = 0; n + p <= w.rows() - 1; ++n) {
        for (Index k = 0; k <= n; ++k) {
          IdentityInstance inst = check_identity(w, p, r, n, k);
          ++rep.cells_checked;
          if (!inst.holds()) {
            ++rep.violations_total;
            if (rep.violations.size() < max_violations_kept) rep.violations.push_back(inst);
          }
        }
      }
    }
  }
  rep.pass = rep.violations_total == 0;
  return rep;
}

std::pair<Index, SdrReport> max_order(const Window& w, Index cap, std::uint64_t max_cells) {
  if (cap < 3) throw Error("max order: cap must be >= 3");
  if (w.rows() < cap)
    throw Error("max order: window has " + std::to_string(w.rows()) + " rows, need at least " +
                std::to_string(cap) + " for cap " + std::to_string(cap));
  SdrReport last;
  for (Index m = 3; m <= cap; ++m) {
    SdrReport rep = check_order(w, m, kMaxViolationsKept, max_cells);
    if (!rep.pass) return {m == 3 ? 2 : m - 1, std::move(rep)};
    last = std::move(rep);
  }
  return {cap, std::move(last)};
}

InfinityCertificate infinity_evidence(const Window& w, std::uint64_t max_cells) {
  if (w.rows() < 4) throw Error("evidence check: needs a window of at least 4 rows");
  InfinityCertificate cert;
  cert.order3_pass = check_order(w, 3, kMaxViolationsKept, max_cells).pass;
  cert.all_nonzero = w.all_entries_nonzero();
  return cert;
}

nlohmann::ordered_json sdr_report_to_json(const SdrReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["rows"] = r.window_rows;
  j["verdict"] = r.pass ? "pass" : "fail";
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const auto& inst : r.violations) {
    nlohmann::ordered_json e;
    e["p"] = inst.p;
    e["r"] = inst.r;
    e["n"] = inst.n;
    e["k"] = inst.k;
    e["lhs"] = inst.lhs.str();
    e["rhs"] = inst.rhs.str();
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  j["violations_total"] = r.violations_total;
  j["cells_checked"] = r.cells_checked;
  return j;
}

}  // namespace sdr
