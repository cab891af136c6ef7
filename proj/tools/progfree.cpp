// Command-line surface for constructing, peeling, lifting, verifying and
// searching progression-free building blocks.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 input error,
// 3 budget refusal. Errors are reported as one JSON object on stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "progfree/facts.hpp"
#include "progfree/io.hpp"
#include "progfree/lift.hpp"
#include "progfree/reduce.hpp"
#include "progfree/region.hpp"
#include "progfree/search.hpp"

namespace {

using progfree::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

progfree::Rational parse_rational(const std::string& s, const char* flag) {
  auto r = progfree::Rational::parse(s);
  if (!r) throw InputError(std::string(flag) + ": expected \"p/q\", got \"" + s + "\"");
  return *r;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON in " + what);
  return j;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  out << content;
}

void write_json(const std::string& path, const Json& j) {
  write_output(path, j.dump(2) + "\n");
}

void diagnostic(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

progfree::SiteSet load_site_set(const std::string& path, const std::string& format,
                                std::int32_t text_m) {
  std::string text = read_input(path);
  bool as_text = format == "text" ||
                 (format == "auto" && !text.empty() && text.find('{') == std::string::npos);
  if (as_text) {
    if (text_m < 1) throw InputError("text input requires --m");
    std::istringstream is(text);
    return progfree::io::site_set_from_text(is, text_m);
  }
  return progfree::io::site_set_from_json(parse_json(text, path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction and verification toolkit for three-term-progression-free sets"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "Worker cap for parallel scans")->capture_default_str();

  // construct
  auto* construct = app.add_subcommand("construct", "Build the region preimage in Z_m^2");
  std::int64_t c_m = 0;
  std::string c_alpha, c_beta, c_out;
  construct->add_option("--m", c_m, "Modulus")->required();
  construct->add_option("--alpha", c_alpha, "Torus offset alpha as p/q (default 1/(48m))");
  construct->add_option("--beta", c_beta, "Torus offset beta as p/q (default 1/(48m))");
  construct->add_option("-o,--output", c_out, "Output file (default stdout)");

  // peel
  auto* peel = app.add_subcommand("peel", "Greedy non-mid-point peel with certificate output");
  std::string p_in, p_out, p_strategy = "lexicographic", p_alpha, p_beta, p_format = "auto";
  std::int64_t p_seed = 0, p_m = 0;
  bool p_assert_reducible = false;
  peel->add_option("--in", p_in, "Input site set (JSON file or '-')")->required();
  peel->add_option("--strategy", p_strategy,
                   "lexicographic | sorted_potential | random | relaxed")
      ->capture_default_str();
  peel->add_option("--seed", p_seed, "Seed for the random strategy");
  peel->add_option("--alpha", p_alpha, "alpha for sorted_potential");
  peel->add_option("--beta", p_beta, "beta for sorted_potential");
  peel->add_option("--format", p_format, "Input format: auto | json | text");
  peel->add_option("--m", p_m, "Modulus for text input");
  peel->add_flag("--assert-reducible", p_assert_reducible,
                 "Exit 1 when the terminal core is non-empty");
  peel->add_option("-o,--output", p_out, "Output certificate file (default stdout)");

  // verify-certificate
  auto* verify_cert = app.add_subcommand("verify-certificate", "Replay a peel certificate");
  std::string vc_in;
  verify_cert->add_option("--in", vc_in, "Certificate JSON file or '-'")->required();

  // lift
  auto* lift = app.add_subcommand("lift", "Balanced-tuple lift of a reducible block");
  std::string l_in, l_out, l_format = "json", l_in_format = "auto";
  std::int64_t l_ell = 1, l_n = 0, l_m = 0, l_max_vectors = 1000000;
  bool l_override = false;
  lift->add_option("--in", l_in, "Input block (JSON file or '-')")->required();
  lift->add_option("--ell", l_ell, "Repetitions per block point")->capture_default_str();
  lift->add_option("--n", l_n, "Target dimension (0 = exactly d*|S|*ell)");
  lift->add_option("--format", l_format, "Output format: json | text")->capture_default_str();
  lift->add_option("--input-format", l_in_format, "Input format: auto | json | text");
  lift->add_option("--m", l_m, "Modulus for text input");
  lift->add_option("--max-vectors", l_max_vectors, "Enumeration budget")->capture_default_str();
  lift->add_flag("--override-uncertified", l_override,
                 "Lift even when the block is not certified reducible");
  lift->add_option("-o,--output", l_out, "Output file (default stdout)");

  // verify-apfree
  auto* verify_ap = app.add_subcommand("verify-apfree", "Brute-force progression scan");
  std::string va_in, va_format = "auto";
  std::int64_t va_m = 0, va_max_pairs_million = 1000000;
  verify_ap->add_option("--in", va_in, "Input set (JSON or text; file or '-')")->required();
  verify_ap->add_option("--format", va_format, "Input format: auto | json | text");
  verify_ap->add_option("--m", va_m, "Modulus for text input");
  verify_ap->add_option("--max-pairs-million", va_max_pairs_million,
                        "Pair-scan budget in millions of checks")
      ->capture_default_str();

  // search
  auto* search = app.add_subcommand("search", "Grid search over (alpha, beta)");
  std::int64_t s_m = 0, s_depth = 6;
  std::string s_step, s_out;
  bool s_exhaustive = false;
  search->add_option("--m", s_m, "Modulus")->required();
  search->add_option("--step", s_step, "Grid step as p/q (default 1/(24m))");
  search->add_flag("--exhaustive", s_exhaustive, "Disable early exit");
  search->add_option("--max-depth", s_depth, "Refinement depth")->capture_default_str();
  search->add_option("-o,--output", s_out, "Output file (default stdout)");

  // table
  auto* table = app.add_subcommand("table", "Bounds and baselines per modulus");
  std::int64_t t_m_max = 0;
  std::string t_format = "csv", t_out;
  table->add_option("--m-max", t_m_max, "Largest modulus")->required();
  table->add_option("--format", t_format, "csv | json")->capture_default_str();
  table->add_option("-o,--output", t_out, "Output file (default stdout)");

  // area
  auto* area = app.add_subcommand("area", "Exact area of the region and its parts");

  // facts-test
  auto* facts = app.add_subcommand("facts-test", "Run the executable region properties");
  std::vector<int> f_denoms = {12, 24, 60, 120};
  int f_triple = 24;
  facts->add_option("--denoms", f_denoms, "Grid denominators (multiples of 12)")
      ->delimiter(',')
      ->capture_default_str();
  facts->add_option("--triple-denom", f_triple, "Max denominator for mod-1 triple checks")
      ->capture_default_str();

  // export-svg
  auto* svg = app.add_subcommand("export-svg", "Render the region to SVG");
  std::string g_out;
  svg->add_option("-o,--output", g_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      if (c_m < 1) throw InputError("--m must be >= 1");
      progfree::Rational alpha =
          c_alpha.empty() ? progfree::Rational(1, 48 * c_m) : parse_rational(c_alpha, "--alpha");
      progfree::Rational beta =
          c_beta.empty() ? progfree::Rational(1, 48 * c_m) : parse_rational(c_beta, "--beta");
      auto set = progfree::region_preimage(static_cast<std::int32_t>(c_m), alpha, beta);
      Json j = progfree::io::site_set_to_json(set);
      j["config"] = {{"subcommand", "construct"},
                     {"m", c_m},
                     {"alpha", alpha.str()},
                     {"beta", beta.str()}};
      write_json(c_out, j);
      return kExitOk;
    }

    if (*peel) {
      auto set = load_site_set(p_in, p_format, static_cast<std::int32_t>(p_m));
      auto strategy = progfree::strategy_from_name(p_strategy);
      if (!strategy) throw InputError("unknown strategy: " + p_strategy);
      std::optional<progfree::PhiContext> phi;
      if (*strategy == progfree::PeelStrategy::SortedPotential) {
        if (p_alpha.empty() || p_beta.empty())
          throw InputError("sorted_potential requires --alpha and --beta");
        phi = progfree::PhiContext{parse_rational(p_alpha, "--alpha"),
                                   parse_rational(p_beta, "--beta")};
      }
      auto cert = progfree::greedy_peel(set, *strategy, phi,
                                        static_cast<std::uint64_t>(p_seed));
      Json j = progfree::io::certificate_to_json(cert);
      j["config"] = {{"subcommand", "peel"}, {"strategy", p_strategy}, {"seed", p_seed}};
      write_json(p_out, j);
      if (p_assert_reducible && !cert.reducible())
        throw VerificationFailure("terminal core has " + std::to_string(cert.core.size()) +
                                  " points; set is not reducible");
      return kExitOk;
    }

    if (*verify_cert) {
      auto cert = progfree::io::certificate_from_json(parse_json(read_input(vc_in), vc_in));
      if (!progfree::verify_certificate(cert))
        throw VerificationFailure("certificate replay failed");
      Json j;
      j["verified"] = true;
      j["removed"] = cert.removed.size();
      j["core"] = cert.core.size();
      j["reducible"] = cert.reducible();
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*lift) {
      auto block = load_site_set(l_in, l_in_format, static_cast<std::int32_t>(l_m));
      progfree::LiftSpec spec;
      spec.block = block;
      spec.repetitions = static_cast<int>(l_ell);
      spec.target_dim = static_cast<int>(l_n);
      spec.override_uncertified = l_override;
      progfree::LiftBudget budget;
      budget.max_vectors = l_max_vectors;
      auto lifted = progfree::enumerate_lift(spec, budget);
      if (l_format == "text") {
        write_output(l_out, progfree::io::site_set_to_text(lifted));
      } else {
        Json j = progfree::io::site_set_to_json(lifted);
        j["config"] = {{"subcommand", "lift"},
                       {"ell", l_ell},
                       {"n", lifted.dimension()},
                       {"core_dim", spec.core_dim()},
                       {"padding", spec.padded_dim() - spec.core_dim()},
                       {"override_uncertified", l_override}};
        write_json(l_out, j);
      }
      return kExitOk;
    }

    if (*verify_ap) {
      auto set = load_site_set(va_in, va_format, static_cast<std::int32_t>(va_m));
      progfree::BigInt pair_checks = progfree::BigInt(set.size()) * set.size();
      if (pair_checks > progfree::BigInt(va_max_pairs_million) * 1000000)
        throw progfree::BudgetExceeded("pair scan needs " + pair_checks.str() + " checks",
                                       pair_checks);
      auto witness = progfree::find_three_term_progression(set, threads);
      Json j;
      j["points"] = set.size();
      j["progressions_found"] = witness ? 1 : 0;
      if (witness) {
        j["witness"] = {{"x", witness->x.coords}, {"y", witness->y.coords},
                        {"z", witness->z.coords}};
      }
      std::cout << j.dump(2) << "\n";
      if (witness) throw VerificationFailure("three-term progression found");
      std::cerr << set.size() << " points, 0 progressions\n";
      return kExitOk;
    }

    if (*search) {
      if (s_m < 1) throw InputError("--m must be >= 1");
      progfree::SearchOptions opts;
      if (!s_step.empty()) opts.step = parse_rational(s_step, "--step");
      opts.exhaustive = s_exhaustive;
      opts.max_refine_depth = static_cast<int>(s_depth);
      auto result = progfree::grid_search_alpha_beta(static_cast<std::int32_t>(s_m), opts);
      Json j = progfree::io::search_result_to_json(result);
      j["config"] = {{"subcommand", "search"},
                     {"m", s_m},
                     {"exhaustive", s_exhaustive},
                     {"max_depth", s_depth}};
      write_json(s_out, j);
      std::cerr << "search wall time: " << result.wall_seconds << " s\n";
      if (!result.success)
        throw VerificationFailure("grid search missed the 7m^2/24 threshold at depth " +
                                  std::to_string(result.refinements));
      return kExitOk;
    }

    if (*table) {
      auto rows = progfree::bounds_table(static_cast<std::int32_t>(t_m_max));
      if (t_format == "json") {
        Json j;
        j["rows"] = progfree::io::bounds_rows_to_json(rows);
        j["config"] = {{"subcommand", "table"}, {"m_max", t_m_max}};
        write_json(t_out, j);
      } else {
        write_output(t_out, progfree::io::bounds_rows_to_csv(rows));
      }
      return kExitOk;
    }

    if (*area) {
      auto total = progfree::region::total_area();
      auto upper = progfree::region::upper_area();
      auto lower = progfree::region::lower_area();
      auto integrated = progfree::region::total_area_by_integration();
      if (total != integrated)
        throw VerificationFailure("shoelace and integration areas disagree: " + total.str() +
                                  " vs " + integrated.str());
      std::cout << total.str() << "\n";
      std::cout << "upper part: " << upper.str() << "\n";
      std::cout << "lower part: " << lower.str() << "\n";
      return kExitOk;
    }

    if (*facts) {
      progfree::FactsOptions opts;
      opts.denominators = f_denoms;
      opts.triple_denominator_max = f_triple;
      auto report = progfree::run_facts_suite(opts);
      std::cout << progfree::io::facts_report_to_json(report).dump(2) << "\n";
      if (!report.ok()) throw VerificationFailure("region property violations found");
      return kExitOk;
    }

    if (*svg) {
      write_output(g_out, progfree::io::region_svg());
      return kExitOk;
    }
  } catch (const progfree::BudgetExceeded& e) {
    diagnostic("budget", e.what());
    return kExitBudget;
  } catch (const progfree::UncertifiedBlock& e) {
    diagnostic("uncertified", e.what());
    return kExitVerificationFailure;
  } catch (const VerificationFailure& e) {
    diagnostic("verification", e.what());
    return kExitVerificationFailure;
  } catch (const InputError& e) {
    diagnostic("input", e.what());
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    diagnostic("input", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    diagnostic("internal", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
