#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "leibniz/algebra.hpp"
#include "leibniz/degenerations.hpp"
#include "leibniz/fock.hpp"
#include "leibniz/minimal_rep.hpp"
#include "leibniz/template_solver.hpp"

namespace leibniz {

/// Canonical interchange format (all emitters produce it byte-stably):
///   {
///     "name": "...",
///     "basis": ["x", "y", ...],
///     "products": [{"left": "x", "right": "y",
///                   "result": [["z", "-1"], ...]}, ...]
///   }
/// Products are sorted by (left, right) basis index, zero products are
/// omitted, coefficients are lowest-term rationals rendered as "p" or "p/q",
/// and documents end with a newline. Windowed slices add "window_degree" and
/// "out_of_window": [["lbl","lbl"], ...]. Templates add "unknowns" and
/// "ideal", and coefficients may be affine objects
/// {"const": "p/q", "sym": {"a1": "1", ...}}.

std::string algebra_to_json(const Algebra& A);
std::string materialized_to_json(const Materialized& M);

/// Parsed form of either flavour: plain tables leave window_degree empty.
struct AlgebraDocument {
  Algebra algebra{"", {}};
  std::optional<std::uint64_t> window_degree;
  std::set<std::pair<std::size_t, std::size_t>> out_of_window;

  bool windowed() const { return window_degree.has_value(); }
  Materialized as_materialized() const;  ///< requires windowed()
};

/// Throws ParseError on malformed documents (bad JSON, missing fields,
/// unknown labels, duplicate products, malformed coefficients).
AlgebraDocument algebra_document_from_json(const std::string& text);
Algebra algebra_from_json(const std::string& text);  ///< rejects windowed docs

std::string template_to_json(const TemplateAlgebra& T);
TemplateAlgebra template_from_json(const std::string& text);

std::string family_to_json(const SolvedFamily& F);

std::string fingerprint_to_json(const Fingerprint& f);

/// {"pass": ..., "checked": N, "skipped": N, "failures": [...]} with basis
/// labels resolved through `labels`.
std::string check_report_to_json(const CheckReport& r,
                                 const std::vector<std::string>& labels);

std::string module_report_to_json(const ModuleAxiomReport& r);

std::string omega_to_json(const OmegaSpec& spec);
/// Accepts {"variant": "identity" | "psi2" | "psi3" | "arbitrary", ...} with
/// "c": ["1", ...] for psi2, "c_poly": [[exp, "coeff"], ...] for psi3 and
/// "table": [[i, [[exp, "coeff"], ...]], ...] for arbitrary.
OmegaSpec omega_from_json(const std::string& text);

std::string agreement_report_to_json(const M1AgreementReport& r);

/// {"m": ..., "matrices": {"x1": [["0","1",...], ...], ...}} — the matrix
/// images of the minimal faithful representation, row-major.
std::string min_rep_matrices_to_json(const MinFaithfulModule& M);

/// Whole-file helpers; throw Error with the OS reason on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace leibniz
