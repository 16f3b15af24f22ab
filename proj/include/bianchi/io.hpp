#pragma once

// JSON documents and reports. Exact quantities travel as rational strings.

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "bianchi/classify.hpp"
#include "bianchi/cohomology.hpp"
#include "bianchi/variety.hpp"

namespace bianchi::io {

using nlohmann::json;

struct StructureDocument {
  std::variant<Mat3, StructureConstants> data;
  std::optional<std::string> label;

  StructureTensor tensor() const {
    if (const auto* q = std::get_if<Mat3>(&data)) return StructureTensor(*q);
    return from_structure_constants(std::get<StructureConstants>(data));
  }
  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Mat3& m) {
  json out = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

inline json to_json(const Vec3& v) { return json::array({v[0].str(), v[1].str(), v[2].str()}); }

inline json to_json(const StructureConstants& c) {
  json out = json::array();
  for (const auto& k : c) {
    json mk = json::array();
    for (const auto& i : k) mk.push_back(json::array({i[0].str(), i[1].str(), i[2].str()}));
    out.push_back(mk);
  }
  return out;
}

inline json to_json(const StructureDocument& doc) {
  json out = json::object();
  if (const auto* q = std::get_if<Mat3>(&doc.data))
    out["q"] = to_json(*q);
  else
    out["c"] = to_json(std::get<StructureConstants>(doc.data));
  if (doc.label) out["label"] = *doc.label;
  return out;
}

namespace detail {

inline Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(where + ": expected a rational string such as \"-3/4\", got " + v.dump());
}

inline const json& expect_array(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n)
    throw ParseError(where + ": expected an array of length " + std::to_string(n) + ", got " + v.dump());
  return v;
}

}  // namespace detail

inline Mat3 parse_matrix(const json& v, const std::string& where) {
  detail::expect_array(v, 3, where);
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string wi = where + "[" + std::to_string(i) + "]";
    detail::expect_array(v[i], 3, wi);
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = detail::parse_rational(v[i][j], wi + "[" + std::to_string(j) + "]");
  }
  return m;
}

inline StructureDocument parse_document(const json& v, const std::string& where = "document") {
  if (!v.is_object()) throw ParseError(where + ": expected a JSON object");
  const bool has_q = v.contains("q"), has_c = v.contains("c");
  if (has_q == has_c) throw ParseError(where + ": exactly one of \"q\" and \"c\" must be present");
  for (const auto& [key, _] : v.items())
    if (key != "q" && key != "c" && key != "label") throw ParseError(where + ": unknown key \"" + key + "\"");
  StructureDocument doc;
  if (has_q) {
    doc.data = parse_matrix(v["q"], where + ".q");
  } else {
    detail::expect_array(v["c"], 3, where + ".c");
    StructureConstants c{};
    for (std::size_t k = 0; k < 3; ++k) c[k] = [&] {
      Mat3 m = parse_matrix(v["c"][k], where + ".c[" + std::to_string(k) + "]");
      std::array<std::array<Rational, 3>, 3> out;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i][j] = m(i, j);
      return out;
    }();
    try {
      (void)from_structure_constants(c);
    } catch (const DomainError& e) {
      throw ParseError(where + ".c: " + e.what());
    }
    doc.data = c;
  }
  if (v.contains("label")) {
    if (!v["label"].is_string()) throw ParseError(where + ".label: expected a string");
    doc.label = v["label"].get<std::string>();
  }
  return doc;
}

/// Parses text, reporting JSON syntax errors with line and column.
inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

inline json to_json(const BianchiType& t) {
  json out{{"name", t.name()}, {"bianchi", t.bianchi_label()}};
  if (t.rho) {
    out["rho"] = t.rho->str();
    out["lambda_approx"] = *t.lambda();
  }
  return out;
}

inline json to_json(const Disassembling& d) {
  return {{"S", to_json(d.S)}, {"A", to_json(d.A)}, {"a", to_json(d.a)}};
}

inline json basis_json(const std::vector<StructureTensor>& basis) {
  json out = json::array();
  for (const auto& b : basis) out.push_back(to_json(b.q()));
  return out;
}

inline json to_json(const CohomologyReport& r, bool with_bases) {
  json out{{"dim_Z2", r.dim_Z2}, {"dim_B2", r.dim_B2}, {"dim_H2", r.dim_H2}};
  if (with_bases) {
    out["basis_Z2"] = basis_json(r.basis_Z2);
    out["basis_B2"] = basis_json(r.basis_B2);
    out["basis_H2"] = basis_json(r.basis_H2);
  }
  return out;
}

/// Full classification report. Type and cohomology are null for non-Lie input.
inline json classification_report(const StructureDocument& doc) {
  const StructureTensor q = doc.tensor();
  const bool c1 = jacobi_structure_constants(q), c2 = jacobi_form(q), c3 = jacobi_schouten(q);
  json out{{"input", to_json(doc)},
           {"q", to_json(q.q())},
           {"jacobi", {{"constants", c1}, {"form", c2}, {"schouten", c3}}},
           {"disassembling", to_json(disassemble(q))},
           {"notes", json::array()}};
  if (c1) {
    out["type"] = to_json(classify(q));
    out["cohomology"] = to_json(cohomology_report(q), false);
  } else {
    const Disassembling d = disassemble(q);
    out["type"] = nullptr;
    out["cohomology"] = nullptr;
    out["notes"].push_back("not a Lie structure: S a = " + to_json(d.S * d.a).dump());
  }
  return out;
}

inline json to_json(const DeformationPath& p) {
  json samples = json::array();
  for (const auto& s : p.samples) samples.push_back({{"t", s.t.str()}, {"type", to_json(s.type)}});
  return {{"c0", to_json(p.c0.q())}, {"d", to_json(p.d.q())}, {"samples", samples}};
}

inline json to_json(const StratReport& r) {
  auto dim = [](const std::optional<int>& d) { return d ? json(*d) : json(nullptr); };
  json strata = json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"label", s.label},
                      {"representative", to_json(s.representative)},
                      {"expected", dim(s.expected)},
                      {"computed", dim(s.computed)}});
  return {{"type", to_json(r.type)}, {"normal_form", to_json(r.normal_form.q())}, {"strata", strata},
          {"consistent", r.consistent()}};
}

}  // namespace bianchi::io
