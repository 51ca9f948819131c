#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdr/checker.hpp"
#include "sdr/specs.hpp"

namespace sdr {

/// One generated triangle with its evidence-backed order claim. Claims are
/// never trusted: gen_case re-verifies them with check_order before the case
/// is released to a conjecture test.
struct CaseRecord {
  std::string family;
  std::uint64_t seed = 0;
  std::string spec_text;     // reproduction recipe
  Window window;             // materialized working window
  bool claims_all_orders = false;  // certificate-backed "every order" claim
  Index claimed_order = 0;         // finite claimed order otherwise
  std::string provenance;    // which closure fact backs the claim

  CaseRecord() : window(Window::identity(1)) {}
};

enum class Verdict { Consistent, Candidate, Skipped };

/// Multiplicative three-sequence fit of a fully nonzero window, gauged by
/// a_0 = a_1 = b_0 = 1: a candidate decomposition entry = a_k * b_{n-k} * c_n
/// read off the diagonal, subdiagonal, and first column. Logged as data for
/// positive cases; nothing is asserted about windows that do not fit.
struct ProductFit {
  std::vector<Rat> a, b, c;
  bool exact = false;  // whether the reconstruction reproduces the window
};

std::optional<ProductFit> product_form_fit(const Window& w);

/// Outcome of one conjecture test on one case.
struct VerdictRecord {
  CaseRecord kase;
  std::string transform;       // "inverse" or "minor:j"
  std::optional<SdrReport> order_check;  // absent only on skipped cases
  Verdict verdict = Verdict::Skipped;
  bool exploratory = false;    // finite-order case probed beyond its claim's hypothesis
  std::string note;
  std::optional<Window> transformed;  // dumped on candidate verdicts
  std::optional<InfinityCertificate> certificate;
  std::optional<ProductFit> fit;
};

/// Families: product-random, hadamard-combo, aerated-binomial,
/// aerated-of-product, builtin:pascal|narayana|lah|aerated|allones.
/// Deterministic in (family, seed); n_rows >= 6.
CaseRecord gen_case(const std::string& family, std::uint64_t seed, Index n_rows);

/// Tests inverse closure: the window's inverse is checked at the claimed
/// order (capped by the window size). Zero-diagonal cases are skipped.
VerdictRecord test_inverse_conjecture(const CaseRecord& c);

/// Tests minor closure: the j-block minor transform is checked at order 3
/// (the finite proxy for an every-order claim), with the nonzero certificate
/// attached when it applies. Finite-order cases are exploratory: closure is
/// only conjectured under an every-order hypothesis, so their failures are
/// recorded, not alarming.
VerdictRecord test_minor_conjecture(const CaseRecord& c, Index j);

struct HarnessConfig {
  std::string conjecture;  // "inverse" or "minor"
  std::string family;
  int trials = 50;
  Index n_rows = 10;
  std::uint64_t seed = 1;
  Index minor_j = 2;
};

/// Runs trials seeded seed, seed+1, ... (builtin families are deterministic,
/// so they run once). The report is ordered by seed.
std::vector<VerdictRecord> run_harness(const HarnessConfig& cfg);

nlohmann::ordered_json harness_report_json(const std::vector<VerdictRecord>& records);

const char* verdict_name(Verdict v);

}  // namespace sdr
