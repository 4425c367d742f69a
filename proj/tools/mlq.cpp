// Command-line front end: run the exact verification suite, expand Hilbert
// series, and emit canonical relation/bracket polynomials.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mlq/checks.hpp"
#include "mlq/coulomb.hpp"
#include "mlq/monopole.hpp"
#include "mlq/report.hpp"
#include "mlq/slice.hpp"

namespace {

using namespace mlq;

std::string default_golden_dir() {
  if (const char* env = std::getenv("MLQ_GOLDEN_DIR")) return env;
  std::error_code ec;
  if (std::filesystem::is_directory("golden", ec)) return "golden";
  return {};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw DomainError("cannot write " + path);
}

// Split a concatenated generator pair such as "x1y1" or "wx2" into the two
// coordinate names.
std::pair<std::string, std::string> parse_bracket_pair(const std::string& pair) {
  static const std::vector<std::string> names = {"x1", "y1", "x2", "y2", "w"};
  for (const auto& first : names) {
    if (pair.size() <= first.size() || pair.compare(0, first.size(), first) != 0)
      continue;
    std::string rest = pair.substr(first.size());
    for (const auto& second : names)
      if (rest == second) return {first, second};
  }
  throw DomainError("cannot split '" + pair +
                    "' into two of x1, y1, x2, y2, w");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact symbolic checks for a family of Coulomb-branch algebras:\n"
      "monopole-formula Hilbert series, symplectic transverse-slice\n"
      "matrices, and the Poisson algebra of their generators."};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key=value file mirroring the flags (command line wins); "
                 "subcommand options use dotted keys, e.g. verify.r-min=2");

  int rc = 0;
  bool json = false;
  bool bless = false;
  int truncate = 40;
  std::string golden_dir = default_golden_dir();

  app.add_flag("--json", json, "machine-readable report (byte-stable)");
  app.add_option("--truncate", truncate, "series truncation degree")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--golden-dir", golden_dir,
                 "directory of frozen derived constants (default: "
                 "$MLQ_GOLDEN_DIR, else ./golden when present)");
  app.add_flag("--bless", bless,
               "rewrite the frozen constants instead of comparing");

  auto print_reports = [&](const std::vector<CheckReport>& reports) {
    std::cout << (json ? render_json(reports) : render_text(reports));
    rc = exit_code(reports);
  };

  // ---- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "run the registered checks over a range of r");
  verify->fallthrough();
  SuiteConfig cfg;
  std::vector<std::string> selectors;
  verify->add_option("--r-min", cfg.r_lo, "smallest r")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--r-max", cfg.r_hi, "largest r")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--checks", selectors,
                     "comma-separated selectors; a selector matches a check "
                     "name exactly, as a dotted prefix, or as one segment")
      ->delimiter(',');
  verify->add_flag("--negative-controls", cfg.negative_controls,
                   "run only the mutation controls, which must be detected");
  verify->add_flag("!--no-flavor", cfg.flavored,
                   "skip the deformed (flavored) checks");
  verify->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->callback([&] {
    cfg.truncate = truncate;
    cfg.selectors = selectors;
    cfg.golden_dir = golden_dir;
    cfg.bless = bless;
    print_reports(run_suite(cfg));
  });

  // ---- hilbert -----------------------------------------------------------
  auto* hil = app.add_subcommand(
      "hilbert", "expand a monopole-formula Hilbert series");
  hil->fallthrough();
  GaugeSpec gauge;
  std::string format = "series";
  hil->add_option("--rank", gauge.rank, "gauge rank (2 or 3)")
      ->check(CLI::IsMember(std::set<int>{2, 3}))
      ->capture_default_str();
  hil->add_option("--loops", gauge.loops, "adjoint copies r")
      ->required()
      ->check(CLI::PositiveNumber);
  hil->add_option("--framing", gauge.framing, "fundamental copies")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hil->add_option("--format", format, "series | closed | both | json")
      ->check(CLI::IsMember(std::set<std::string>{"series", "closed", "both",
                                                  "json"}));
  hil->callback([&] {
    validate_spec(gauge);
    const bool has_closed = gauge.framing == 1 && gauge.loops >= 2;
    if ((format == "closed" || format == "both") && !has_closed)
      throw DomainError(
          "a reference closed form exists only for framing 1 and loops >= 2");
    auto closed = [&] {
      return gauge.rank == 2 ? closed_form_gl2(gauge.loops)
                             : closed_form_gl3(gauge.loops);
    };
    if (format == "closed") {
      std::cout << closed().to_string() << "\n";
      return;
    }
    TruncatedSeries series = truncated_hilbert(gauge, truncate);
    if (format == "series") {
      std::cout << series.to_string() << "\n";
    } else if (format == "both") {
      std::cout << "series: " << series.to_string() << "\n"
                << "closed: " << closed().to_string() << "\n";
    } else {
      nlohmann::json doc;
      doc["rank"] = gauge.rank;
      doc["loops"] = gauge.loops;
      doc["framing"] = gauge.framing;
      doc["truncate"] = truncate;
      doc["series"] = series.coeffs();
      if (has_closed) doc["closed"] = closed().to_string();
      std::cout << doc.dump(2) << "\n";
    }
  });

  // ---- slice -------------------------------------------------------------
  auto* slc = app.add_subcommand(
      "slice", "transverse-slice checks at one value of r");
  slc->fallthrough();
  int slice_r = 2;
  bool slice_flavor = false;
  std::string emit_relation;
  slc->add_option("--r", slice_r, "loop count r")->required();
  slc->add_flag("--flavor", slice_flavor, "include the deformed checks");
  slc->add_option("--emit-relation", emit_relation,
                  "write the slice relation to FILE in canonical text");
  slc->callback([&] {
    SuiteConfig c;
    c.r_lo = c.r_hi = slice_r;
    c.truncate = truncate;
    c.flavored = slice_flavor;
    c.selectors = {"slice"};
    c.golden_dir = golden_dir;
    c.bless = bless;
    auto reports = run_suite(c);
    if (!emit_relation.empty()) {
      const SliceData& sd = slice_data(slice_r);
      Poly rel = slice_flavor ? flavored_relation(sd.ctx, sd.detA_flavor)
                              : sd.detA_plain;
      write_file(emit_relation, rel.to_string() + "\n");
    }
    print_reports(reports);
  });

  // ---- coulomb -----------------------------------------------------------
  auto* clb = app.add_subcommand(
      "coulomb", "generator and Poisson-structure checks at one value of r");
  clb->fallthrough();
  int coulomb_r = 2;
  bool coulomb_flavor = false;
  std::vector<std::string> coulomb_checks;
  std::vector<std::string> emit_bracket;
  clb->add_option("--r", coulomb_r, "loop count r")->required();
  clb->add_flag("--flavor", coulomb_flavor, "include the deformed checks");
  clb->add_option("--checks", coulomb_checks,
                  "comma-separated short names, e.g. "
                  "starlet,poifo,jacobi,grading,hanany,sl2,redundancy,sigma")
      ->delimiter(',');
  clb->add_option("--emit-bracket", emit_bracket,
                  "PAIR FILE: write the Poisson bracket of a generator pair "
                  "(e.g. x1y1) to FILE in canonical text")
      ->expected(2);
  clb->callback([&] {
    SuiteConfig c;
    c.r_lo = c.r_hi = coulomb_r;
    c.truncate = truncate;
    c.flavored = coulomb_flavor;
    c.golden_dir = golden_dir;
    c.bless = bless;
    if (coulomb_checks.empty()) {
      c.selectors = {"coulomb"};
    } else {
      for (const auto& s : coulomb_checks)
        c.selectors.push_back(s.rfind("coulomb", 0) == 0 ? s : "coulomb." + s);
    }
    auto reports = run_suite(c);
    if (!emit_bracket.empty()) {
      auto [lhs, rhs] = parse_bracket_pair(emit_bracket[0]);
      EtaleChart chart = make_chart(coulomb_r, coulomb_flavor);
      GeneratorSet gen = build_generators(chart);
      Localized br = poisson_bracket(chart, gen.by_name(lhs), gen.by_name(rhs));
      write_file(emit_bracket[1], br.to_string() + "\n");
    }
    print_reports(reports);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
