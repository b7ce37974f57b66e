// leibniz-lab: command-line front end for the exact Leibniz-algebra library.
//
// Exit codes: 0 success / verification pass, 1 verification failure (the
// machine-readable report still goes to standard output), 2 usage or input
// errors. Reports are JSON on standard output; --verbose adds a human
// summary on the error stream.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/degenerations.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/fock.hpp"
#include "leibniz/heisenberg.hpp"
#include "leibniz/minimal_rep.hpp"
#include "leibniz/serialization.hpp"
#include "leibniz/template_solver.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace leibniz;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& in) {
  if (in.empty()) throw UsageError("--in FILE is required");
  return read_text_file(in);
}

void emit(const std::string& doc, const std::string& out) {
  if (out.empty())
    std::cout << doc;
  else
    write_text_file(out, doc);
}

void emit(const Json& doc, const std::string& out) {
  emit(doc.dump(2) + "\n", out);
}

Json matrix_rows(const Matrix& M) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

ParamFamilyM1 parse_m1_params(const std::string& csv) {
  const std::vector<std::string> parts = split_csv(csv);
  if (parts.size() != 9)
    throw UsageError("--params needs 9 comma-separated rationals, got " +
                     std::to_string(parts.size()));
  std::vector<Rational> v;
  for (const std::string& s : parts) {
    try {
      v.push_back(Rational::parse(s));
    } catch (const Error&) {
      throw UsageError("malformed rational \"" + s + "\" in --params");
    }
  }
  ParamFamilyM1 p;
  p.alpha1 = v[0];
  p.alpha2 = v[1];
  p.alpha3 = v[2];
  p.beta1 = v[3];
  p.beta2 = v[4];
  p.delta1 = v[5];
  p.delta2 = v[6];
  p.eta1 = v[7];
  p.theta1 = v[8];
  return p;
}

std::vector<std::size_t> parse_ks(const std::string& csv) {
  std::vector<std::size_t> ks;
  for (const std::string& s : split_csv(csv)) {
    try {
      const long v = std::stol(s);
      if (v < 1) throw UsageError("--ks entries must be positive");
      ks.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("malformed entry \"" + s + "\" in --ks");
    }
  }
  if (ks.empty()) throw UsageError("--ks must list at least one pair count");
  return ks;
}

int run_verify(const std::string& in, const std::string& out,
               std::optional<std::uint64_t> window, bool verbose) {
  const AlgebraDocument doc = algebra_document_from_json(read_input(in));
  if (window && !doc.windowed())
    throw UsageError("--window given but the document carries no window");
  if (window && *window != *doc.window_degree)
    throw UsageError("--window " + std::to_string(*window) +
                     " does not match the document's window degree " +
                     std::to_string(*doc.window_degree));

  CheckReport report;
  if (doc.windowed())
    report = leibniz_check(doc.as_materialized());
  else
    report = leibniz_check(doc.algebra);

  Json j = Json::parse(check_report_to_json(report, doc.algebra.basis()));
  j["window_degree"] =
      doc.windowed() ? Json(*doc.window_degree) : Json(nullptr);
  emit(j, out);

  if (verbose) {
    if (report.ok)
      std::cerr << "pass, " << report.checked << " triples\n";
    else
      std::cerr << "FAIL, " << report.violations.size()
                << " violation(s) among " << report.checked << " triples\n";
    if (doc.windowed())
      std::cerr << "window degree " << *doc.window_degree << "; "
                << report.skipped << " triples skipped\n";
    else
      std::cerr << "full table, no window\n";
  }
  return report.ok ? 0 : 1;
}

int run_solve(const std::string& in, const std::string& out,
              const std::string& builtin, std::size_t n, std::uint64_t deg,
              std::size_t m, const std::string& which_emit, bool verbose) {
  TemplateAlgebra T;
  if (!builtin.empty() && !in.empty())
    throw UsageError("pass either --in or --builtin, not both");
  if (builtin == "hfl") {
    if (n % 2 == 0 || n < 3)
      throw UsageError("--n must be an odd dimension >= 3");
    T = make_hfl_template((n - 1) / 2, deg);
  } else if (builtin == "minrep-m1") {
    T = make_minrep_m1_template();
  } else if (builtin == "minrep-general") {
    if (m < 2) throw UsageError("--m must be >= 2 for minrep-general");
    T = make_minrep_general_template(m);
  } else if (!builtin.empty()) {
    throw UsageError("unknown --builtin \"" + builtin +
                     "\" (hfl, minrep-m1, minrep-general)");
  } else {
    T = template_from_json(read_input(in));
  }

  const SolvedFamily F = solve_template(T);
  if (which_emit == "agreement") {
    if (builtin != "minrep-m1")
      throw UsageError("--emit agreement is only defined for minrep-m1");
    emit(agreement_report_to_json(compare_m1_solution(F)), out);
  } else if (which_emit == "family" || which_emit.empty()) {
    emit(family_to_json(F), out);
  } else {
    throw UsageError("unknown --emit \"" + which_emit +
                     "\" (family, agreement)");
  }

  if (verbose) {
    std::cerr << F.tmpl.unknowns.size() << " free parameter(s), rank "
              << F.rank << ", " << F.triples_expanded
              << " triples expanded, " << F.triples_skipped << " skipped\n";
    if (all_unknowns_forced_zero(F))
      std::cerr << "all unknowns forced to zero\n";
  }
  return 0;
}

int run_fock(const std::string& out, std::size_t n, std::uint64_t deg,
             bool verbose) {
  const GradedAlgebra G = build_hfl(n, deg);
  const Materialized M = materialize(G, deg);
  emit(materialized_to_json(M), out);
  if (verbose)
    std::cerr << M.algebra.name() << ": " << M.algebra.dim()
              << " basis elements, window degree " << M.window_degree << ", "
              << M.out_of_window.size() << " out-of-window pairs\n";
  return 0;
}

int run_gen_fock(const std::string& out, const std::string& ks_csv,
                 std::uint64_t deg, bool verbose) {
  const std::vector<std::size_t> ks = parse_ks(ks_csv);
  const GradedAlgebra G = build_generalized_hfl(ks, deg);
  const Materialized M = materialize(G, deg);
  emit(materialized_to_json(M), out);
  if (verbose)
    std::cerr << M.algebra.name() << ": " << M.algebra.dim()
              << " basis elements, window degree " << M.window_degree << ", "
              << M.out_of_window.size() << " out-of-window pairs\n";
  return 0;
}

int run_psi(const std::string& in, const std::string& out, int which,
            std::uint64_t deg, const std::string& which_emit,
            std::uint64_t window, bool verbose) {
  if (which < 1 || which > 3) throw UsageError("--which must be 1, 2 or 3");
  OmegaSpec omega = OmegaSpec::identity();
  if (!in.empty()) omega = omega_from_json(read_text_file(in));

  if (which_emit == "algebra") {
    GradedAlgebra G;
    if (which == 2) {
      const auto declared = omega.psi2_declared();
      if (omega.variant() != OmegaVariant::Psi2Sequence || !declared)
        throw UsageError(
            "--emit algebra with --which 2 needs a psi2 Omega with explicit "
            "coefficients");
      G = build_psi2_algebra(*declared, window);
    } else if (which == 3) {
      if (omega.variant() != OmegaVariant::Psi3Polynomial)
        throw UsageError("--emit algebra with --which 3 needs a psi3 Omega");
      G = build_psi3_algebra(omega.psi3_poly(), window);
    } else {
      throw UsageError("--emit algebra is only defined for --which 2 or 3");
    }
    const Materialized M = materialize(G, window);
    emit(materialized_to_json(M), out);
    if (verbose)
      std::cerr << M.algebra.name() << ": " << M.algebra.dim()
                << " basis elements, window degree " << M.window_degree
                << "\n";
    return 0;
  }
  if (which_emit != "report" && !which_emit.empty())
    throw UsageError("unknown --emit \"" + which_emit +
                     "\" (report, algebra)");

  const ModuleAxiomReport r =
      module_axiom_check(PsiAction{which, omega}, deg);
  emit(module_report_to_json(r), out);
  if (verbose) {
    if (r.ok)
      std::cerr << "module axiom holds, " << r.checked << " instances\n";
    else
      std::cerr << "module axiom FAILS at exponent "
                << r.witness->exponent << "\n";
  }
  return r.ok ? 0 : 1;
}

int run_min_rep(const std::string& out, std::size_t m,
                const std::string& which_emit, bool verbose) {
  if (m < 1) throw UsageError("--m must be >= 1");
  const MinFaithfulModule M = build_min_rep(m);
  const bool law = matrix_law_holds(M);
  if (which_emit == "matrices")
    emit(min_rep_matrices_to_json(M), out);
  else if (which_emit == "algebra" || which_emit.empty())
    emit(algebra_to_json(M.combined), out);
  else
    throw UsageError("unknown --emit \"" + which_emit +
                     "\" (algebra, matrices)");
  if (verbose)
    std::cerr << "m = " << m << ": matrix law "
              << (law ? "holds" : "FAILS")
              << " on all ordered generator pairs\n";
  return law ? 0 : 1;
}

int run_classify(const std::string& out, const std::string& params_csv,
                 bool list, bool verbose) {
  if (list != params_csv.empty())
    throw UsageError("pass exactly one of --params or --list");
  if (list) {
    Json doc = Json::array();
    const auto& entries = classify_list();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Json e;
      e["index"] = i;
      e["name"] = entries[i].name();
      e["has_lambda"] = entries[i].has_lambda;
      doc.push_back(std::move(e));
    }
    emit(doc, out);
    if (verbose) std::cerr << entries.size() << " classification entries\n";
    return 0;
  }

  const ParamFamilyM1 p = parse_m1_params(params_csv);
  const NormalForm nf = normalize_m1(p);
  Json doc;
  doc["entry_index"] = nf.entry_index;
  doc["name"] = classify_list()[nf.entry_index].name();
  doc["lambda"] = nf.lambda ? Json(nf.lambda->str()) : Json(nullptr);
  doc["reached"] = nf.reached.str();
  doc["exact_hit"] = nf.exact_hit;
  doc["theta_square_class"] =
      nf.theta_square_class ? Json(nf.theta_square_class->str()) : Json(nullptr);
  doc["residual_e3x"] = nf.residual_e3x.str();
  doc["nullity_pattern"] = nullity_pattern(p).str();
  doc["witness"] = matrix_rows(nf.witness);
  emit(doc, out);
  if (verbose) {
    std::cerr << p.str() << " -> entry " << nf.entry_index << " "
              << classify_list()[nf.entry_index].name();
    if (nf.lambda) std::cerr << " with lambda = " << nf.lambda->str();
    if (nf.theta_square_class)
      std::cerr << " (square-class obstruction in the theta slot: "
                << nf.theta_square_class->str() << ")";
    if (!nf.residual_e3x.is_zero())
      std::cerr << " (non-removable residual [e3,x] = "
                << nf.residual_e3x.str() << " e1)";
    std::cerr << "\n";
  }
  return 0;
}

int run_invariants(const std::string& in, const std::string& out,
                   bool verbose) {
  const AlgebraDocument doc = algebra_document_from_json(read_input(in));
  if (doc.windowed())
    throw UsageError(
        "invariants are defined for full tables, not windowed slices");
  const Fingerprint f = fingerprint(doc.algebra);
  emit(fingerprint_to_json(f), out);
  if (verbose) std::cerr << f.str() << "\n";
  return 0;
}

int run_detect(const std::string& in, const std::string& out, bool verbose) {
  const Algebra A = algebra_from_json(read_input(in));
  const HeisenbergDetection d = detect_heisenberg(A);
  Json doc;
  doc["recognized"] = d.ok();
  if (d.ok()) {
    doc["k"] = d.match->k;
    doc["dimension"] = 2 * d.match->k + 1;
    doc["reason"] = Json(nullptr);
    doc["to_canonical"] = matrix_rows(d.match->to_canonical);
  } else {
    doc["k"] = Json(nullptr);
    doc["dimension"] = Json(nullptr);
    doc["reason"] = reject_reason_name(*d.reason);
    doc["to_canonical"] = Json(nullptr);
  }
  emit(doc, out);
  if (verbose) {
    if (d.ok())
      std::cerr << "Heisenberg algebra H_" << (2 * d.match->k + 1)
                << " recognized\n";
    else
      std::cerr << "rejected: " << reject_reason_name(*d.reason) << "\n";
  }
  return d.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "leibniz-lab: exact construction, verification and classification of "
      "Leibniz algebras of Heisenberg type"};
  app.require_subcommand(1);

  std::string in, out, builtin, params_csv, ks_csv, emit_kind;
  std::size_t n = 3, m = 1;
  std::uint64_t deg = 6, window = 6;
  int which = 1;
  bool verbose = false, list = false;
  std::optional<std::uint64_t> verify_window;

  app.add_flag("--verbose,-v", verbose, "human summary on stderr");

  CLI::App* verify = app.add_subcommand(
      "verify", "check the Leibniz identity on an algebra file");
  verify->add_option("--in", in, "algebra JSON file")->required();
  verify->add_option("--out", out, "write the report here instead of stdout");
  verify->add_option("--window", verify_window,
                     "expected window degree of a windowed document");

  CLI::App* solve = app.add_subcommand(
      "solve", "expand and solve a product template with unknowns");
  solve->add_option("--in", in, "template JSON file");
  solve->add_option("--builtin", builtin,
                    "built-in template: hfl, minrep-m1, minrep-general");
  solve->add_option("--n", n, "odd dimension 2k+1 for --builtin hfl");
  solve->add_option("--deg", deg, "unknown-degree bound for --builtin hfl");
  solve->add_option("--m", m, "pair count for --builtin minrep-general");
  solve->add_option("--emit", emit_kind, "family (default) or agreement");
  solve->add_option("--out", out, "write the result here instead of stdout");

  CLI::App* fock = app.add_subcommand(
      "fock", "materialize a Heisenberg-Fock algebra window");
  fock->add_option("--n", n, "odd dimension 2k+1 >= 3")->required();
  fock->add_option("--deg", deg, "window degree (default 6)");
  fock->add_option("--out", out, "write the table here instead of stdout");

  CLI::App* gen_fock = app.add_subcommand(
      "gen-fock", "materialize a generalized Heisenberg-Fock algebra window");
  gen_fock->add_option("--ks", ks_csv, "summand pair counts, e.g. 1,2")
      ->required();
  gen_fock->add_option("--deg", deg, "window degree (default 6)");
  gen_fock->add_option("--out", out, "write the table here instead of stdout");

  CLI::App* psi = app.add_subcommand(
      "psi", "check the module axiom for a degeneration action");
  psi->add_option("--which", which, "action selector: 1, 2 or 3")->required();
  psi->add_option("--in", in, "Omega JSON file (default: identity)");
  psi->add_option("--deg", deg, "largest monomial exponent checked");
  psi->add_option("--emit", emit_kind, "report (default) or algebra");
  psi->add_option("--window", window, "window degree for --emit algebra");
  psi->add_option("--out", out, "write the result here instead of stdout");

  CLI::App* min_rep = app.add_subcommand(
      "min-rep", "minimal faithful representation of H_{2m+1}");
  min_rep->add_option("--m", m, "pair count m >= 1")->required();
  min_rep->add_option("--emit", emit_kind, "algebra (default) or matrices");
  min_rep->add_option("--out", out, "write the result here instead of stdout");

  CLI::App* classify = app.add_subcommand(
      "classify", "normalize a one-pair family tuple onto the 21-entry list");
  classify->add_option("--params", params_csv,
                       "alpha1,alpha2,alpha3,beta1,beta2,delta1,delta2,eta1,"
                       "theta1");
  classify->add_flag("--list", list, "print the classification list");
  classify->add_option("--out", out,
                       "write the result here instead of stdout");

  CLI::App* invariants = app.add_subcommand(
      "invariants", "isomorphism-invariant fingerprint of an algebra file");
  invariants->add_option("--in", in, "algebra JSON file")->required();
  invariants->add_option("--out", out,
                         "write the result here instead of stdout");

  CLI::App* detect = app.add_subcommand(
      "detect", "recognize Heisenberg algebras in arbitrary bases");
  detect->add_option("--in", in, "algebra JSON file")->required();
  detect->add_option("--out", out, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed())
      return run_verify(in, out, verify_window, verbose);
    if (solve->parsed())
      return run_solve(in, out, builtin, n, deg, m, emit_kind, verbose);
    if (fock->parsed()) return run_fock(out, n, deg, verbose);
    if (gen_fock->parsed()) return run_gen_fock(out, ks_csv, deg, verbose);
    if (psi->parsed())
      return run_psi(in, out, which, deg, emit_kind, window, verbose);
    if (min_rep->parsed()) return run_min_rep(out, m, emit_kind, verbose);
    if (classify->parsed())
      return run_classify(out, params_csv, list, verbose);
    if (invariants->parsed()) return run_invariants(in, out, verbose);
    if (detect->parsed()) return run_detect(in, out, verbose);
    std::cerr << "usage error: no command given\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
