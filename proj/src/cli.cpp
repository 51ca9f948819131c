#include "sdr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdr/algebra.hpp"
#include "sdr/harness.hpp"
#include "sdr/json_io.hpp"
#include "sdr/minor.hpp"
#include "sdr/series.hpp"
#include "sdr/specs.hpp"

namespace sdr {

namespace {

std::uint64_t max_cells_from_env() {
  const char* raw = std::getenv("SDR_MAX_CELLS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCells;
  std::uint64_t v = 0;
  for (const char* p = raw; *p; ++p) {
    if (*p < '0' || *p > '9')
      throw Error("SDR_MAX_CELLS: \"" + std::string(raw) + "\" is not a non-negative integer");
    v = v * 10 + static_cast<std::uint64_t>(*p - '0');
  }
  if (v == 0) throw Error("SDR_MAX_CELLS: must be positive");
  return v;
}

void print_table(const Window& w, std::ostream& out) {
  const Index N = w.rows();
  std::vector<std::size_t> width(static_cast<std::size_t>(N), 0);
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(N));
  for (Index n = 0; n < N; ++n) {
    for (Index k = 0; k <= n; ++k) {
      std::string s = w(n, k).str();
      width[static_cast<std::size_t>(k)] =
          std::max(width[static_cast<std::size_t>(k)], s.size());
      cells[static_cast<std::size_t>(n)].push_back(std::move(s));
    }
  }
  for (Index n = 0; n < N; ++n) {
    for (Index k = 0; k <= n; ++k) {
      const std::string& s = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      if (k) out << "  ";
      out << std::string(width[static_cast<std::size_t>(k)] - s.size(), ' ') << s;
    }
    out << '\n';
  }
}

void print_violations(const SdrReport& rep, std::ostream& out) {
  if (rep.violations.empty()) return;
  out << "  p  r  n  k  lhs != rhs\n";
  for (const auto& v : rep.violations)
    out << "  " << v.p << "  " << v.r << "  " << v.n << "  " << v.k << "  " << v.lhs.str()
        << " != " << v.rhs.str() << '\n';
  if (rep.violations_total > rep.violations.size())
    out << "  ... " << (rep.violations_total - rep.violations.size()) << " further violations\n";
}

void describe_report(const SdrReport& rep, std::ostream& out) {
  out << "order " << rep.order << " on " << rep.window_rows << " rows: "
      << (rep.pass ? "PASS" : "FAIL") << " (" << rep.cells_checked << " identity instances, "
      << rep.violations_total << " violations";
  if (rep.violations_total > rep.violations.size())
    out << ", first " << rep.violations.size() << " shown";
  out << ")\n";
  print_violations(rep, out);
}

void maybe_write_window_json(const std::string& path, const Window& w) {
  if (!path.empty()) save_json_file(path, window_to_json(w));
}

struct SeriesOptions {
  std::string d, h, d2, h2;
};

RiordanPair pair_from(const std::string& d, const std::string& h, Index trunc) {
  return RiordanPair(parse_series(d, trunc), parse_series(h, trunc));
}

std::string coeff_line(const Series& s) {
  std::string out;
  for (Index i = 0; i < s.truncation(); ++i) {
    if (i) out += ",";
    out += s[i].str();
  }
  return out;
}

int run_parsed(CLI::App& app, std::ostream& out) {
  const std::uint64_t max_cells = max_cells_from_env();

  if (auto* cmd = app.get_subcommand("check"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    const SdrReport rep = check_order(w, cmd->get_option("--order")->as<Index>(),
                                      kMaxViolationsKept, max_cells);
    out << "triangle: " << w.label() << '\n';
    describe_report(rep, out);
    const std::string json_path = cmd->get_option("--json")->as<std::string>();
    if (!json_path.empty()) save_json_file(json_path, sdr_report_to_json(rep));
    return rep.pass ? 0 : 1;
  }

  if (auto* cmd = app.get_subcommand("max-order"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    const Index cap = cmd->get_option("--cap")->as<Index>();
    const auto [order, rep] = max_order(w, cap, max_cells);
    out << "triangle: " << w.label() << '\n';
    out << "max verified order on " << w.rows() << " rows (cap " << cap << "): " << order << '\n';
    describe_report(rep, out);
    const std::string json_path = cmd->get_option("--json")->as<std::string>();
    if (!json_path.empty()) {
      nlohmann::ordered_json j;
      j["max_order"] = order;
      j["cap"] = cap;
      j["report"] = sdr_report_to_json(rep);
      save_json_file(json_path, j);
    }
    return order >= cap ? 0 : 1;
  }

  if (auto* cmd = app.get_subcommand("invert"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    const Window inv = tri_inverse(w);
    print_table(inv, out);
    maybe_write_window_json(cmd->get_option("--json")->as<std::string>(), inv);
    return 0;
  }

  if (auto* cmd = app.get_subcommand("power"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    const Window p = matrix_power(w, cmd->get_option("--exp")->as<Index>());
    print_table(p, out);
    maybe_write_window_json(cmd->get_option("--json")->as<std::string>(), p);
    return 0;
  }

  if (auto* cmd = app.get_subcommand("hadamard"); cmd->parsed()) {
    const Index rows = cmd->get_option("--rows")->as<Index>();
    const std::string inv_spec = cmd->get_option("--inv")->as<std::string>();
    const std::string a = cmd->get_option("--a")->as<std::string>();
    const std::string b = cmd->get_option("--b")->as<std::string>();
    if (!inv_spec.empty() && (!a.empty() || !b.empty()))
      throw Error("hadamard: --inv cannot be combined with --a/--b");
    Window result = Window::identity(1);
    if (!inv_spec.empty()) {
      result = materialize(hadamard_inverse(build_triangle(inv_spec)), rows);
    } else {
      if (a.empty() || b.empty())
        throw Error("hadamard: provide --a and --b (or --inv for the entrywise reciprocal)");
      result = materialize(hadamard_product(build_triangle(a), build_triangle(b)), rows);
    }
    print_table(result, out);
    maybe_write_window_json(cmd->get_option("--json")->as<std::string>(), result);
    return 0;
  }

  if (auto* cmd = app.get_subcommand("minor"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    const Window m = minor_triangle(w, cmd->get_option("--j")->as<Index>());
    print_table(m, out);
    maybe_write_window_json(cmd->get_option("--json")->as<std::string>(), m);
    return 0;
  }

  if (auto* cmd = app.get_subcommand("riordan"); cmd->parsed()) {
    const Index rows = cmd->get_option("--rows")->as<Index>();
    const std::string d = cmd->get_option("--d")->as<std::string>();
    const std::string h = cmd->get_option("--h")->as<std::string>();
    const std::string json_path = cmd->get_option("--json")->as<std::string>();

    if (auto* sub = cmd->get_subcommand("window"); sub->parsed()) {
      const Window w = riordan_window(pair_from(d, h, rows), rows);
      print_table(w, out);
      maybe_write_window_json(json_path, w);
      return 0;
    }
    RiordanPair result = [&] {
      if (auto* sub = cmd->get_subcommand("mul"); sub->parsed()) {
        const std::string d2 = cmd->get_option("--d2")->as<std::string>();
        const std::string h2 = cmd->get_option("--h2")->as<std::string>();
        if (d2.empty() || h2.empty()) throw Error("riordan mul: needs --d2 and --h2");
        return riordan_mul(pair_from(d, h, rows), pair_from(d2, h2, rows));
      }
      return riordan_inverse(pair_from(d, h, rows));
    }();
    out << "d: " << coeff_line(result.d) << '\n';
    out << "h: " << coeff_line(result.h) << '\n';
    if (!json_path.empty()) {
      nlohmann::ordered_json j;
      j["d"] = nlohmann::ordered_json::array();
      j["h"] = nlohmann::ordered_json::array();
      for (Index i = 0; i < result.d.truncation(); ++i) j["d"].push_back(result.d[i].str());
      for (Index i = 0; i < result.h.truncation(); ++i) j["h"].push_back(result.h[i].str());
      save_json_file(json_path, j);
    }
    return 0;
  }

  if (auto* cmd = app.get_subcommand("conjecture"); cmd->parsed()) {
    HarnessConfig cfg;
    cfg.conjecture = cmd->get_subcommand("inverse")->parsed() ? "inverse" : "minor";
    cfg.family = cmd->get_option("--family")->as<std::string>();
    cfg.trials = cmd->get_option("--trials")->as<int>();
    cfg.n_rows = cmd->get_option("--rows")->as<Index>();
    cfg.seed = cmd->get_option("--seed")->as<std::uint64_t>();
    cfg.minor_j = cmd->get_option("--j")->as<Index>();

    const std::vector<VerdictRecord> records = run_harness(cfg);
    int consistent = 0, candidates = 0, skipped = 0;
    for (const auto& r : records) {
      out << "[" << r.kase.family << " seed=" << r.kase.seed << "] " << r.transform << ": "
          << verdict_name(r.verdict);
      if (r.order_check)
        out << " (order " << r.order_check->order << " on " << r.order_check->window_rows
            << " rows, " << r.order_check->cells_checked << " instances, "
            << r.order_check->violations_total << " violations)";
      if (r.exploratory) out << " [exploratory]";
      if (!r.note.empty()) out << " -- " << r.note;
      out << '\n';
      switch (r.verdict) {
        case Verdict::Consistent: ++consistent; break;
        case Verdict::Candidate: ++candidates; break;
        case Verdict::Skipped: ++skipped; break;
      }
    }
    out << "verdicts: " << consistent << " consistent, " << candidates << " candidates, "
        << skipped << " skipped\n";
    const std::string json_path = cmd->get_option("--json")->as<std::string>();
    if (!json_path.empty()) save_json_file(json_path, harness_report_json(records));
    return candidates > 0 ? 1 : 0;
  }

  if (auto* cmd = app.get_subcommand("print"); cmd->parsed()) {
    const Window w = materialize(build_triangle(cmd->get_option("--tri")->as<std::string>()),
                                 cmd->get_option("--rows")->as<Index>());
    print_table(w, out);
    maybe_write_window_json(cmd->get_option("--json")->as<std::string>(), w);
    return 0;
  }

  throw Error("no subcommand given (try --help)");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact star-of-david checker and triangle algebra"};
  app.name("sdr");
  app.require_subcommand(1);

  auto add_tri_rows = [](CLI::App* cmd) {
    cmd->add_option("--tri", "triangle spec")->required();
    cmd->add_option("--rows", "window rows")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--json", "write the result as JSON to this path");
  };

  auto* check = app.add_subcommand("check", "check the identity family at one order");
  add_tri_rows(check);
  check->add_option("--order", "order to check")->required();

  auto* maxo = app.add_subcommand("max-order", "largest order that holds on the window");
  add_tri_rows(maxo);
  maxo->add_option("--cap", "highest order to try")->required();

  auto* invert = app.add_subcommand("invert", "matrix inverse of the window");
  add_tri_rows(invert);

  auto* power = app.add_subcommand("power", "integer matrix power of the window");
  add_tri_rows(power);
  power->add_option("--exp", "exponent (any integer)")->required();

  auto* hadamard = app.add_subcommand("hadamard", "entrywise product or reciprocal");
  hadamard->add_option("--a", "left triangle spec");
  hadamard->add_option("--b", "right triangle spec");
  hadamard->add_option("--inv", "triangle spec for the entrywise reciprocal");
  hadamard->add_option("--rows", "window rows")->required()->check(CLI::PositiveNumber);
  hadamard->add_option("--json", "write the result as JSON to this path");

  auto* minor = app.add_subcommand("minor", "contiguous block-determinant transform");
  add_tri_rows(minor);
  minor->add_option("--j", "block size")->required()->check(CLI::PositiveNumber);

  auto* riordan = app.add_subcommand("riordan", "series-pair triangles and their group ops");
  // The grammar owns --h for the h series, so this subcommand's help flag
  // keeps only its long spelling.
  riordan->set_help_flag("--help", "print help and exit");
  riordan->require_subcommand(1);
  riordan->add_subcommand("window", "materialize the pair's triangle")->fallthrough();
  riordan->add_subcommand("mul", "group product of two pairs")->fallthrough();
  riordan->add_subcommand("inverse", "group inverse of a pair")->fallthrough();
  riordan->add_option("--d", "d series literal")->required();
  riordan->add_option("--h", "h series literal")->required();
  riordan->add_option("--d2", "second d series (mul)");
  riordan->add_option("--h2", "second h series (mul)");
  riordan->add_option("--rows", "rows / truncation")->required()->check(CLI::PositiveNumber);
  riordan->add_option("--json", "write the result as JSON to this path");

  auto* conjecture = app.add_subcommand("conjecture", "randomized closure-conjecture harness");
  conjecture->require_subcommand(1);
  conjecture->add_subcommand("inverse", "inverse-closure conjecture")->fallthrough();
  conjecture->add_subcommand("minor", "minor-closure conjecture")->fallthrough();
  conjecture->add_option("--family", "case family")->required();
  conjecture->add_option("--trials", "number of seeded trials")->default_val(50);
  conjecture->add_option("--rows", "window rows")->default_val(10);
  conjecture->add_option("--seed", "base seed")->default_val(1);
  conjecture->add_option("--j", "block size for the minor conjecture")->default_val(2);
  conjecture->add_option("--json", "write the full report as JSON to this path");

  auto* print = app.add_subcommand("print", "materialize and print a triangle");
  add_tri_rows(print);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return run_parsed(app, out);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (;;) {
      const auto entered =
          target->get_subcommands([](const CLI::App* sub) { return sub->parsed(); });
      if (entered.empty()) break;
      target = entered.front();
    }
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sdr
