#include "leibniz/serialization.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using Json = nlohmann::ordered_json;

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_coeff(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " coefficient must be a string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    throw ParseError("malformed coefficient \"" + j.get<std::string>() + "\"");
  }
}

Json vec_to_json(const Vec& v, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& [coord, c] : v)
    out.push_back(Json::array({labels.at(coord), c.str()}));
  return out;
}

Json products_to_json(const Algebra& A) {
  Json products = Json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const Vec& v = A.product(i, j);
      if (v.empty()) continue;
      Json p;
      p["left"] = A.label(i);
      p["right"] = A.label(j);
      p["result"] = vec_to_json(v, A.basis());
      products.push_back(std::move(p));
    }
  return products;
}

Json affine_to_json(const AffineExpr& e) {
  if (e.is_constant()) return Json(e.c.str());
  Json out;
  out["const"] = e.c.str();
  Json sym;
  for (const auto& [name, coeff] : e.terms) sym[name] = coeff.str();
  out["sym"] = std::move(sym);
  return out;
}

AffineExpr affine_from_json(const Json& j) {
  if (j.is_string()) return AffineExpr(parse_coeff(j, "product"));
  if (!j.is_object())
    throw ParseError("a coefficient must be a string or an affine object");
  AffineExpr e;
  if (j.contains("const")) e.c = parse_coeff(j.at("const"), "const");
  if (j.contains("sym")) {
    if (!j.at("sym").is_object())
      throw ParseError("\"sym\" must map symbol names to coefficients");
    for (const auto& [name, coeff] : j.at("sym").items()) {
      const Rational k = parse_coeff(coeff, "sym");
      if (!k.is_zero()) e.terms[name] = k;
    }
  }
  for (const auto& [key, val] : j.items())
    if (key != "const" && key != "sym")
      throw ParseError("unexpected key \"" + key + "\" in affine coefficient");
  return e;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string())
    throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> require_string_array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array())
    throw ParseError(std::string("field \"") + key +
                     "\" must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string())
      throw ParseError(std::string("field \"") + key +
                       "\" must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t label_index(const std::map<std::string, std::size_t>& index,
                        const std::string& label) {
  auto it = index.find(label);
  if (it == index.end()) throw ParseError("unknown label \"" + label + "\"");
  return it->second;
}

std::map<std::string, std::size_t> index_labels(
    const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw ParseError("duplicate basis label \"" + labels[i] + "\"");
  return index;
}

std::uint64_t require_uint(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_unsigned())
    throw ParseError(std::string("field \"") + key +
                     "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::set<std::pair<std::size_t, std::size_t>> read_out_of_window(
    const Json& doc, const std::map<std::string, std::size_t>& index) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  if (!doc.contains("out_of_window")) return out;
  const Json& v = doc.at("out_of_window");
  if (!v.is_array())
    throw ParseError("\"out_of_window\" must be an array of label pairs");
  for (const Json& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw ParseError("\"out_of_window\" must be an array of label pairs");
    out.emplace(label_index(index, e[0].get<std::string>()),
                label_index(index, e[1].get<std::string>()));
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : p.terms())
    out.push_back(Json::array({Json(std::uint64_t(mono.e.at(0))), coeff.str()}));
  return out;
}

Polynomial polynomial_from_json(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of [exp, coeff]");
  Polynomial p(1);
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned())
      throw ParseError(std::string(what) + " entries must be [exp, coeff]");
    Monomial m(std::vector<std::uint32_t>{
        static_cast<std::uint32_t>(e[0].get<std::uint64_t>())});
    p.add_term(m, parse_coeff(e[1], what));
  }
  return p;
}

}  // namespace

std::string algebra_to_json(const Algebra& A) {
  Json doc;
  doc["name"] = A.name();
  doc["basis"] = A.basis();
  doc["products"] = products_to_json(A);
  return finish(doc);
}

std::string materialized_to_json(const Materialized& M) {
  Json doc;
  doc["name"] = M.algebra.name();
  doc["basis"] = M.algebra.basis();
  doc["window_degree"] = M.window_degree;
  doc["products"] = products_to_json(M.algebra);
  Json oow = Json::array();
  for (const auto& [i, j] : M.out_of_window)
    oow.push_back(Json::array({M.algebra.label(i), M.algebra.label(j)}));
  doc["out_of_window"] = std::move(oow);
  return finish(doc);
}

Materialized AlgebraDocument::as_materialized() const {
  if (!windowed()) throw Error("document carries no window");
  return Materialized{algebra, *window_degree, out_of_window};
}

AlgebraDocument algebra_document_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  AlgebraDocument out;
  const std::string name = require_string(doc, "name");
  const std::vector<std::string> labels = require_string_array(doc, "basis");
  const auto index = index_labels(labels);
  out.algebra = Algebra(name, labels);

  const Json& products = require(doc, "products");
  if (!products.is_array())
    throw ParseError("field \"products\" must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Json& p : products) {
    const std::size_t l = label_index(index, require_string(p, "left"));
    const std::size_t r = label_index(index, require_string(p, "right"));
    if (!seen.emplace(l, r).second)
      throw ParseError("duplicate product for (" + labels[l] + ", " +
                       labels[r] + ")");
    const Json& result = require(p, "result");
    if (!result.is_array())
      throw ParseError("field \"result\" must be an array of [label, coeff]");
    Vec v;
    for (const Json& t : result) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string())
        throw ParseError("result entries must be [label, coeff]");
      const std::size_t c = label_index(index, t[0].get<std::string>());
      const Rational k = parse_coeff(t[1], "result");
      if (!k.is_zero()) v[c] += k;
    }
    for (auto it = v.begin(); it != v.end();)
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
    if (!v.empty()) out.algebra.set_product(l, r, std::move(v));
  }

  if (doc.contains("window_degree")) {
    out.window_degree = require_uint(doc, "window_degree");
    out.out_of_window = read_out_of_window(doc, index);
    for (const auto& pr : out.out_of_window)
      if (seen.count(pr))
        throw ParseError("product listed for the out-of-window pair (" +
                         labels[pr.first] + ", " + labels[pr.second] + ")");
  } else if (doc.contains("out_of_window")) {
    throw ParseError("\"out_of_window\" requires \"window_degree\"");
  }
  return out;
}

Algebra algebra_from_json(const std::string& text) {
  AlgebraDocument doc = algebra_document_from_json(text);
  if (doc.windowed())
    throw ParseError("a windowed document is not accepted here");
  return std::move(doc.algebra);
}

std::string template_to_json(const TemplateAlgebra& T) {
  Json doc;
  doc["name"] = T.name;
  doc["basis"] = T.labels;
  Json ideal = Json::array();
  for (std::size_t c : T.ideal) ideal.push_back(T.labels.at(c));
  doc["ideal"] = std::move(ideal);
  doc["unknowns"] = T.unknowns;
  if (T.window_degree != 0) doc["window_degree"] = T.window_degree;
  Json products = Json::array();
  for (const auto& [key, vec] : T.products) {
    Json p;
    p["left"] = T.labels.at(key.first);
    p["right"] = T.labels.at(key.second);
    Json result = Json::array();
    for (const auto& [coord, expr] : vec)
      result.push_back(Json::array({T.labels.at(coord), affine_to_json(expr)}));
    p["result"] = std::move(result);
    products.push_back(std::move(p));
  }
  doc["products"] = std::move(products);
  Json oow = Json::array();
  for (const auto& [i, j] : T.out_of_window)
    oow.push_back(Json::array({T.labels.at(i), T.labels.at(j)}));
  doc["out_of_window"] = std::move(oow);
  return finish(doc);
}

TemplateAlgebra template_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  TemplateAlgebra T;
  T.name = require_string(doc, "name");
  T.labels = require_string_array(doc, "basis");
  const auto index = index_labels(T.labels);
  for (const std::string& l : require_string_array(doc, "ideal"))
    T.ideal.insert(label_index(index, l));
  T.unknowns = require_string_array(doc, "unknowns");
  std::set<std::string> known(T.unknowns.begin(), T.unknowns.end());
  if (known.size() != T.unknowns.size())
    throw ParseError("duplicate unknown name");
  if (doc.contains("window_degree"))
    T.window_degree = require_uint(doc, "window_degree");

  const Json& products = require(doc, "products");
  if (!products.is_array())
    throw ParseError("field \"products\" must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Json& p : products) {
    const std::size_t l = label_index(index, require_string(p, "left"));
    const std::size_t r = label_index(index, require_string(p, "right"));
    if (!seen.emplace(l, r).second)
      throw ParseError("duplicate product for (" + T.labels[l] + ", " +
                       T.labels[r] + ")");
    const Json& result = require(p, "result");
    if (!result.is_array())
      throw ParseError("field \"result\" must be an array of [label, coeff]");
    AffineVec v;
    for (const Json& t : result) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string())
        throw ParseError("result entries must be [label, coeff]");
      const std::size_t c = label_index(index, t[0].get<std::string>());
      const AffineExpr e = affine_from_json(t[1]);
      for (const auto& [sym, coeff] : e.terms)
        if (!known.count(sym))
          throw ParseError("coefficient uses unlisted unknown \"" + sym +
                           "\"");
      if (!e.is_zero()) v[c] = e;
    }
    if (!v.empty()) T.set_product(l, r, std::move(v));
  }
  T.out_of_window = read_out_of_window(doc, index);
  for (const auto& pr : T.out_of_window)
    if (T.products.count(pr))
      throw ParseError("product listed for the out-of-window pair (" +
                       T.labels[pr.first] + ", " + T.labels[pr.second] + ")");
  try {
    T.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("template violates an invariant: ") +
                     e.what());
  }
  return T;
}

std::string family_to_json(const SolvedFamily& F) {
  Json doc;
  doc["free_params"] = F.free_params;
  doc["rank"] = F.rank;
  doc["triples_expanded"] = F.triples_expanded;
  doc["triples_skipped"] = F.triples_skipped;
  Json assignments;
  for (const auto& [name, expr] : F.assignments)
    assignments[name] = affine_to_json(expr);
  doc["assignments"] = std::move(assignments);
  doc["template"] = parse_json(template_to_json(F.tmpl));
  return finish(doc);
}

std::string fingerprint_to_json(const Fingerprint& f) {
  Json doc;
  doc["dim"] = f.dim;
  doc["lower_central"] = f.lower_central;
  doc["left_annihilator_dim"] = f.left_annihilator_dim;
  doc["right_annihilator_dim"] = f.right_annihilator_dim;
  doc["center_dim"] = f.center_dim;
  doc["squares_span_dim"] = f.squares_span_dim;
  doc["squares_ideal_dim"] = f.squares_ideal_dim;
  return finish(doc);
}

std::string check_report_to_json(const CheckReport& r,
                                 const std::vector<std::string>& labels) {
  Json doc;
  doc["pass"] = r.ok;
  doc["checked"] = r.checked;
  doc["skipped"] = r.skipped;
  Json failures = Json::array();
  for (const CheckViolation& v : r.violations) {
    Json f;
    f["triple"] =
        Json::array({labels.at(v.i), labels.at(v.j), labels.at(v.k)});
    f["residual"] = vec_to_json(v.residual, labels);
    failures.push_back(std::move(f));
  }
  doc["failures"] = std::move(failures);
  return finish(doc);
}

std::string module_report_to_json(const ModuleAxiomReport& r) {
  Json doc;
  doc["pass"] = r.ok;
  doc["checked"] = r.checked;
  if (r.witness) {
    auto kind_name = [](Gen::Kind k) {
      switch (k) {
        case Gen::Kind::One:
          return "one";
        case Gen::Kind::X:
          return "X";
        default:
          return "D";
      }
    };
    Json w;
    w["exponent"] = r.witness->exponent;
    w["a"] = kind_name(r.witness->a);
    w["b"] = kind_name(r.witness->b);
    w["lhs"] = r.witness->lhs.str();
    w["rhs"] = r.witness->rhs.str();
    doc["witness"] = std::move(w);
  }
  return finish(doc);
}

std::string omega_to_json(const OmegaSpec& spec) {
  Json doc;
  doc["variant"] = omega_variant_name(spec.variant());
  switch (spec.variant()) {
    case OmegaVariant::Identity:
      break;
    case OmegaVariant::Psi2Sequence: {
      const auto declared = spec.psi2_declared();
      if (!declared)
        throw Error(
            "a lazily generated psi2 coefficient sequence cannot be "
            "serialized");
      Json c = Json::array();
      for (const Rational& k : *declared) c.push_back(k.str());
      doc["c"] = std::move(c);
      break;
    }
    case OmegaVariant::Psi3Polynomial:
      doc["c_poly"] = polynomial_to_json(spec.psi3_poly());
      break;
    case OmegaVariant::Arbitrary: {
      Json table = Json::array();
      for (const auto& [i, p] : spec.table())
        table.push_back(Json::array({Json(i), polynomial_to_json(p)}));
      doc["table"] = std::move(table);
      break;
    }
  }
  return finish(doc);
}

OmegaSpec omega_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  const std::string variant = require_string(doc, "variant");
  if (variant == "identity") return OmegaSpec::identity();
  if (variant == "psi2") {
    const Json& c = require(doc, "c");
    if (!c.is_array()) throw ParseError("field \"c\" must be an array");
    std::vector<Rational> coeffs;
    for (const Json& e : c) coeffs.push_back(parse_coeff(e, "c"));
    return OmegaSpec::psi2(std::move(coeffs));
  }
  if (variant == "psi3")
    return OmegaSpec::psi3(polynomial_from_json(require(doc, "c_poly"),
                                                "\"c_poly\""));
  if (variant == "arbitrary") {
    const Json& table = require(doc, "table");
    if (!table.is_array())
      throw ParseError("field \"table\" must be an array");
    std::map<std::uint64_t, Polynomial> entries;
    for (const Json& e : table) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned())
        throw ParseError("table entries must be [exponent, polynomial]");
      entries[e[0].get<std::uint64_t>()] =
          polynomial_from_json(e[1], "table polynomial");
    }
    return OmegaSpec::arbitrary(std::move(entries));
  }
  throw ParseError("unknown Omega variant \"" + variant + "\"");
}

std::string agreement_report_to_json(const M1AgreementReport& r) {
  Json doc;
  doc["all_agree"] = r.all_agree;
  Json coeffs = Json::array();
  for (const CoefficientAgreement& c : r.coefficients) {
    Json e;
    e["slot"] = c.slot;
    e["solved"] = c.solved;
    e["reference"] = c.reference;
    e["agree"] = c.agree;
    coeffs.push_back(std::move(e));
  }
  doc["coefficients"] = std::move(coeffs);
  doc["notes"] = r.notes;
  return finish(doc);
}

std::string min_rep_matrices_to_json(const MinFaithfulModule& M) {
  Json doc;
  doc["m"] = M.m;
  Json matrices;
  std::vector<std::string> order;
  for (std::size_t i = 1; i <= M.m; ++i)
    order.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= M.m; ++i)
    order.push_back("y" + std::to_string(i));
  order.push_back("z");
  for (const std::string& g : order) {
    const Matrix& mat = M.phi.at(g);
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c)
        row.push_back(mat.at(r, c).str());
      rows.push_back(std::move(row));
    }
    matrices[g] = std::move(rows);
  }
  doc["matrices"] = std::move(matrices);
  return finish(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("error while reading " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error("error while writing " + path);
}

}  // namespace leibniz
