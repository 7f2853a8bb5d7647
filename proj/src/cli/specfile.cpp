#include "radonlike/cli/specfile.hpp"

#include <fstream>
#include <cmath>
#include <set>
#include <sstream>

namespace radonlike::cli {

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorKind::Schema, msg); }

void only_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) schema("unknown key '" + key + "' in " + where);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema("missing key '" + key + "' in " + where);
  return *it;
}

long to_long(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) schema(where + " must be an integer");
  return v.get<long>();
}

std::vector<long> int_array(const Json& v, const std::string& where) {
  if (!v.is_array()) schema(where + " must be an array of integers");
  std::vector<long> out;
  for (const auto& e : v) out.push_back(to_long(e, where));
  return out;
}

Rational to_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      schema(where + ": " + e.what());
    }
  }
  schema(where + " must be an integer or a rational string \"p/q\"");
}

MultiIndex sized(const Json& doc, const std::string& key, std::size_t n) {
  auto v = int_array(field(doc, key, "spec"), key);
  if (v.size() != n) schema(key + " must have length " + std::to_string(n));
  return MultiIndex(std::move(v));
}

}  // namespace

OperatorSpec parse_spec(const Json& doc) {
  only_keys(doc,
            {"n_prime", "n_dprime", "alpha_prime", "alpha_dprime", "beta_prime", "beta_dprime", "S",
             "psi_radius"},
            "spec");
  const long np = to_long(field(doc, "n_prime", "spec"), "n_prime");
  const long nd = to_long(field(doc, "n_dprime", "spec"), "n_dprime");
  if (np < 1 || nd < 1) schema("n_prime and n_dprime must be positive");
  const auto n1 = static_cast<std::size_t>(np);
  const auto n2 = static_cast<std::size_t>(nd);
  MultiIndex ap = sized(doc, "alpha_prime", n1);
  MultiIndex ad = sized(doc, "alpha_dprime", n2);
  MultiIndex bp = sized(doc, "beta_prime", n1);
  MultiIndex bd = sized(doc, "beta_dprime", n2);
  for (const auto* m : {&ap, &ad, &bp, &bd})
    if (!m->all_positive()) schema("weights must be positive integers");

  OperatorSpec spec{Weights(ap, ad, bp), bd, {}, 0.25};
  if (auto it = doc.find("psi_radius"); it != doc.end()) {
    if (!it->is_number()) schema("psi_radius must be a number");
    spec.psi_radius = it->get<double>();
    if (!(spec.psi_radius > 0.0) || !std::isfinite(spec.psi_radius))
      schema("psi_radius must be positive and finite");
  }

  const Json& s = field(doc, "S", "spec");
  if (!s.is_array() || s.size() != n2) schema("S must be an array of n_dprime polynomials");
  const VariableLayout layout = spec.layout();
  for (std::size_t l = 0; l < n2; ++l) {
    const std::string where = "S[" + std::to_string(l) + "]";
    if (!s[l].is_array()) schema(where + " must be an array of terms");
    Polynomial p(layout);
    for (std::size_t t = 0; t < s[l].size(); ++t) {
      const Json& term = s[l][t];
      const std::string tw = where + "[" + std::to_string(t) + "]";
      only_keys(term, {"coeff", "x_prime", "x_dprime", "y_prime"}, tw);
      Exponents e;
      auto block = [&](const char* key, std::size_t n) {
        auto v = int_array(field(term, key, tw), tw + "." + key);
        if (v.size() != n) schema(tw + "." + key + " must have length " + std::to_string(n));
        for (long x : v) {
          if (x < 0 || x > 255) schema(tw + "." + key + " exponents must lie in [0, 255]");
          e.push_back(static_cast<int>(x));
        }
      };
      block("x_prime", n1);
      block("x_dprime", n2);
      block("y_prime", n1);
      p.add_term(e, to_rational(field(term, "coeff", tw), tw + ".coeff"));
    }
    spec.S.push_back(std::move(p));
  }
  return spec;
}

OperatorSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Schema, "cannot open spec file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json multiindex_to_json(const MultiIndex& m) { return m.entries(); }

Json polynomial_to_json(const Polynomial& p) {
  const auto& layout = p.layout();
  Json terms = Json::array();
  for (const auto& m : p.monomials()) {
    Json t;
    t["coeff"] = to_string(m.coeff);
    for (auto [key, b] : {std::pair{"x_prime", Block::XPrime}, std::pair{"x_dprime", Block::XDprime},
                          std::pair{"y_prime", Block::YPrime}}) {
      auto span = m.block(layout, b);
      t[key] = std::vector<int>(span.begin(), span.end());
    }
    if (layout.with_eta) {
      auto span = m.block(layout, Block::Eta);
      t["eta"] = std::vector<int>(span.begin(), span.end());
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

Json spec_to_json(const OperatorSpec& spec) {
  Json doc;
  doc["n_prime"] = spec.n_prime();
  doc["n_dprime"] = spec.n_dprime();
  doc["alpha_prime"] = multiindex_to_json(spec.weights.alpha_prime());
  doc["alpha_dprime"] = multiindex_to_json(spec.weights.alpha_dprime());
  doc["beta_prime"] = multiindex_to_json(spec.weights.beta_prime());
  doc["beta_dprime"] = multiindex_to_json(spec.beta_dprime);
  Json s = Json::array();
  for (const auto& p : spec.S) s.push_back(polynomial_to_json(p));
  doc["S"] = std::move(s);
  doc["psi_radius"] = spec.psi_radius;
  return doc;
}

MultiIndex parse_index_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidArgument, "not an integer list: " + text);
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "empty integer list");
  return MultiIndex(std::move(out));
}

}  // namespace radonlike::cli
