#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sdr/triangle.hpp"

namespace sdr {

/// One instance of the generalized star-of-david product identity at level p,
/// split r, anchored at (n, k). The two sides multiply p+1 entries each,
/// walking complementary zig-zag paths through the hexagon of cells between
/// rows n and n+p:
///   lhs = prod_{i=0..r}     A[n+i,   k+r-i]
///       * prod_{i=0..p-r-1} A[n+p-i, k+r+i+1]
///   rhs = prod_{i=0..r}     A[n+p-i, k+p-r+i]
///       * prod_{i=0..p-r-1} A[n+i,   k+p-r-i-1]
/// Entries above the diagonal contribute literal zeros (no special-casing),
/// so an identity instance can legitimately read 0 = 0.
struct IdentityInstance {
  Index p = 0, r = 0, n = 0, k = 0;
  Rat lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// Outcome of checking every identity instance of a given order on a window.
struct SdrReport {
  Index order = 0;         // the order m that was checked
  Index window_rows = 0;   // rows of the window it ran on
  bool pass = false;
  std::vector<IdentityInstance> violations;  // first violations, capped
  std::uint64_t violations_total = 0;        // all of them, including uncapped
  std::uint64_t cells_checked = 0;           // identity instances evaluated
};

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;
inline constexpr std::size_t kMaxViolationsKept = 100;

/// Evaluates one identity instance. Requires p >= 2, 0 <= r <= p-1,
/// 0 <= k <= n, and n + p inside the window.
IdentityInstance check_identity(const Window& w, Index p, Index r, Index n, Index k);

/// Checks order m on the window: every instance with 2 <= p <= m-1,
/// 0 <= r <= p-1, 0 <= k <= n, n+p <= rows-1, in lexicographic (p, r, n, k)
/// order. Requires m >= 3 and rows >= m. Refuses to start when the instance
/// count exceeds max_cells.
SdrReport check_order(const Window& w, Index m,
                      std::size_t max_violations_kept = kMaxViolationsKept,
                      std::uint64_t max_cells = kDefaultMaxCells);

/// Largest order that holds on the window, scanning m = 3, 4, ... up to cap.
/// Returns {order, report}: the report is the run that decided the answer
/// (first failing order, or the passing run at cap). A window that already
/// fails order 3 has max order 2 — every triangle satisfies orders below 3
/// vacuously. Requires cap >= 3 and rows >= cap.
std::pair<Index, SdrReport> max_order(const Window& w, Index cap,
                                      std::uint64_t max_cells = kDefaultMaxCells);

/// Evidence that a window is consistent with the identity family at every
/// order: when all entries are nonzero, order 3 on a window forces every
/// higher order on that window, so the pair (order-3 pass, fully nonzero)
/// certifies as much as any finite check can.
struct InfinityCertificate {
  bool order3_pass = false;
  bool all_nonzero = false;
  bool consistent() const { return order3_pass && all_nonzero; }
  const char* conclusion() const {
    return consistent() ? "consistent-with-all-orders" : "no-evidence";
  }
};

/// Requires rows >= 4 so that order 3 has something to chew on.
InfinityCertificate infinity_evidence(const Window& w,
                                      std::uint64_t max_cells = kDefaultMaxCells);

nlohmann::ordered_json sdr_report_to_json(const SdrReport& r);

}  // namespace sdr
