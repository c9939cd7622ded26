#pragma once

/*
 * JSON forms. Every number is an exact scalar string ("p/q", "p/q+r/s*i");
 * plain JSON integers are accepted on input.
 *
 *   operator     { "N": int, "a": [[...], ...] }      a[i] is the poly of d^i
 *   eigen-data   { "lambda": [...], "P": [[...], ...] }
 *   delta table  [[delta_0^(0)], [delta_1^(0), delta_1^(1)], ...]
 *   alpha table  [[alpha_{0,0}], [alpha_{1,0}, alpha_{1,1}], ...]
 *
 * A poly is its coefficient list by increasing power; zero is ["0"].
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/inverse.hpp"
#include "bochner/operator.hpp"
#include "bochner/poly.hpp"
#include "bochner/recurrence.hpp"
#include "bochner/spectral.hpp"

namespace bochner::io {

using json = nlohmann::json;

inline json to_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw ParseError("expected an exact scalar string, got " + j.dump());
}

inline json to_json(const Poly& p) {
  if (p.is_zero()) return json::array({"0"});
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<Scalar> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(scalar_from_json(e));
  return Poly(std::move(c));
}

inline json scalar_list(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

inline std::vector<Scalar> scalar_list_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars, got " + j.dump());
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline json to_json(const BochnerOperator& op) {
  json a = json::array();
  for (const auto& p : op.coeffs()) a.push_back(to_json(p));
  return json{{"N", op.order()}, {"a", std::move(a)}};
}

/// Checks the declared N against the coefficient list; InvalidOperator
/// propagates for Bochner-condition violations.
inline BochnerOperator operator_from_json(const json& j) {
  const json& n = field(j, "N");
  const json& a = field(j, "a");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw ParseError("\"N\" must be a positive integer");
  if (!a.is_array()) throw ParseError("\"a\" must be an array of coefficient arrays");
  std::vector<Poly> coeffs;
  for (const auto& p : a) coeffs.push_back(poly_from_json(p));
  const auto order = n.get<long long>();
  if (static_cast<long long>(coeffs.size()) != order + 1)
    throw ParseError("\"a\" must hold N+1 = " + std::to_string(order + 1) + " coefficients");
  BochnerOperator op(std::move(coeffs));
  if (op.order() != order)
    throw InvalidOperator("declared N = " + std::to_string(order) + " but a_" +
                          std::to_string(order) + " is zero");
  return op;
}

inline json eigen_json(const std::vector<Scalar>& lambdas, const std::vector<Poly>& polys) {
  json p = json::array();
  for (const auto& q : polys) p.push_back(to_json(q));
  return json{{"lambda", scalar_list(lambdas)}, {"P", std::move(p)}};
}

inline json to_json(const EigenSystem& sys) { return eigen_json(sys.lambdas, sys.polys); }
inline json to_json(const EigenData& data) { return eigen_json(data.lambdas(), data.polys()); }

inline EigenData eigendata_from_json(const json& j) {
  auto lambdas = scalar_list_from_json(field(j, "lambda"));
  const json& p = field(j, "P");
  if (!p.is_array()) throw ParseError("\"P\" must be an array of coefficient arrays");
  std::vector<Poly> polys;
  for (const auto& q : p) polys.push_back(poly_from_json(q));
  return EigenData(std::move(lambdas), std::move(polys));
}

inline json to_json(const DeltaTable& table) {
  json out = json::array();
  for (int n = 0; n < table.size(); ++n) {
    json row = json::array();
    for (int k = 0; k <= n; ++k) row.push_back(to_json(table.at(n, k)));
    out.push_back(std::move(row));
  }
  return out;
}

inline DeltaTable delta_table_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("delta table must be an array of rows");
  DeltaTable table(std::nullopt);
  for (std::size_t n = 0; n < j.size(); ++n) {
    auto row = scalar_list_from_json(j[n]);
    if (row.size() != n + 1) throw ParseError("delta row " + std::to_string(n) + " must have n+1 entries");
    table.push_row(std::move(row));
  }
  return table;
}

inline json to_json(const RecurrenceCoeffs& rec) {
  json out = json::array();
  for (const auto& row : rec.rows()) out.push_back(scalar_list(row));
  return out;
}

inline RecurrenceCoeffs recurrence_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("alpha table must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t n = 0; n < j.size(); ++n) {
    rows.push_back(scalar_list_from_json(j[n]));
    if (rows.back().size() != n + 1)
      throw ParseError("alpha row " + std::to_string(n) + " must have n+1 entries");
  }
  return RecurrenceCoeffs(std::move(rows));
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

}  // namespace bochner::io
